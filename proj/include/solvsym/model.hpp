#pragma once

#include <string>
#include <vector>

#include "solvsym/kform.hpp"

namespace solvsym::algebra {

/// Model-file syntax/IO problem (malformed document, bad literals).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally well-formed model that fails an algebraic invariant
/// (odd dimension, duplicate indices, d*d != 0).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

template <typename T>
KForm<T> promote_like(const RationalForm& f) {
  if constexpr (scalar_traits<T>::is_complex) {
    return complexify(f);
  } else {
    return f;
  }
}

/// Immutable 2n-dimensional Lie algebra model, given by the structure
/// differentials de^k of its covector basis. Validation checks that the
/// extended differential squares to zero on every degree (equivalent to
/// the Jacobi identity for the dual bracket).
class LieAlgebraModel {
 public:
  /// differentials[i] is de^{i+1}, a degree-2 form.
  LieAlgebraModel(std::string name, int dim, std::vector<std::string> basis,
                  std::vector<RationalForm> differentials);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int half_dim() const { return dim_ / 2; }
  const std::vector<std::string>& basis() const { return basis_; }
  const RationalForm& differential_of(int generator_1based) const {
    return differentials_.at(generator_1based - 1);
  }
  const std::vector<RationalForm>& differentials() const { return differentials_; }

  std::size_t space_dim(int k) const { return binomial(dim_, k); }

 private:
  std::string name_;
  int dim_;
  std::vector<std::string> basis_;
  std::vector<RationalForm> differentials_;
};

/// Parses and validates the canonical model-file document.
LieAlgebraModel parse_model(const std::string& text);

/// Canonical on-disk document for a model; parse_model(serialize_model(m))
/// reproduces an equivalent model.
std::string serialize_model(const LieAlgebraModel& model);

/// The exterior differential of an exact form, extended from the structure
/// differentials as an antiderivation:
///   d(e^I) = sum_a (-1)^(a-1) de^{ia} ^ e^{I minus ia}
/// (de^{ia} has even degree, so moving it to the front costs nothing).
/// A top-degree input maps to the zero form of the trivial space above.
template <typename T>
KForm<T> exterior_derivative(const LieAlgebraModel& model, const KForm<T>& form) {
  KForm<T> out(form.degree() + 1);
  if (form.degree() >= model.dim()) return out;
  for (const auto& [idx, coeff] : form.terms()) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const RationalForm& dgen = model.differential_of(idx[a]);
      if (dgen.is_zero()) continue;
      MultiIndex rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != a) rest.push_back(idx[t]);
      KForm<T> term =
          wedge(promote_like<T>(dgen), KForm<T>::basis_element(std::move(rest)), model.dim());
      T c = (a % 2 == 0) ? coeff : -coeff;
      for (const auto& [tidx, tc] : term.terms()) out.add_term(tidx, c * tc);
    }
  }
  return out;
}

/// True iff d vanishes identically on (2n-1)-forms, equivalently
/// tr(ad_x) = 0 for every x.
bool is_unimodular(const LieAlgebraModel& model);

}  // namespace solvsym::algebra
