#pragma once

#include <vector>

#include "solvsym/model.hpp"

namespace solvsym::algebra {

/// A linear map Lambda^p -> Lambda^q in the canonical sorted-multi-index
/// bases. The matrix is C(2n,q) x C(2n,p).
template <typename T>
struct GradedOperator {
  int source_degree = 0;
  int target_degree = 0;
  linalg::Matrix<T> mat;

  KForm<T> apply(const KForm<T>& f, int dim) const {
    if (f.degree() != source_degree) throw std::invalid_argument("operator degree mismatch");
    return KForm<T>::from_coordinates(mat.apply(f.coordinates(dim)), dim, target_degree);
  }
};

template <typename T>
GradedOperator<T> compose(const GradedOperator<T>& outer, const GradedOperator<T>& inner) {
  if (inner.target_degree != outer.source_degree)
    throw std::invalid_argument("operator composition degree mismatch");
  return {inner.source_degree, outer.target_degree, outer.mat * inner.mat};
}

/// Builds the matrix of a degree-homogeneous linear map from its action on
/// basis forms.
template <typename T, typename F>
GradedOperator<T> operator_from_action(int dim, int source_degree, int target_degree, F&& action) {
  std::size_t n_src = binomial(dim, source_degree);
  std::size_t n_tgt = target_degree <= dim ? binomial(dim, target_degree) : 0;
  linalg::Matrix<T> m(n_tgt, n_src);
  for (std::size_t j = 0; j < n_src; ++j) {
    KForm<T> image = action(KForm<T>::basis_element(multi_index_unrank(j, dim, source_degree)));
    if (n_tgt == 0) {
      if (!image.is_zero()) throw std::logic_error("nonzero image in trivial target space");
      continue;
    }
    m.set_col(j, image.coordinates(dim));
  }
  return {source_degree, target_degree, std::move(m)};
}

/// Matrix of d: Lambda^k -> Lambda^{k+1}; the zero map to the trivial
/// space when k = 2n.
template <typename T = Rational>
GradedOperator<T> d_operator(const LieAlgebraModel& model, int k) {
  if (k < 0 || k > model.dim()) throw std::invalid_argument("degree out of range");
  return operator_from_action<T>(model.dim(), k, k + 1, [&](const KForm<T>& f) {
    return exterior_derivative(model, f);
  });
}

/// Left wedge multiplication by a fixed form, Lambda^k -> Lambda^{k+deg}.
template <typename T>
GradedOperator<T> wedge_operator(const KForm<T>& form, int dim, int k) {
  return operator_from_action<T>(dim, k, k + form.degree(),
                                 [&](const KForm<T>& f) { return wedge(form, f, dim); });
}

/// Degree-k multiplicative extension of an invertible map on Lambda^1:
/// F(a ^ b) = F(a) ^ F(b), identity on scalars.
template <typename T>
GradedOperator<T> automorphism_extension(const linalg::Matrix<T>& map1, int dim, int k) {
  if (map1.rows() != static_cast<std::size_t>(dim) || map1.cols() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("degree-1 map has wrong shape");
  if (!linalg::inverse(map1)) throw std::invalid_argument("degree-1 map is not invertible");
  if (k < 0 || k > dim) throw std::invalid_argument("degree out of range");
  return operator_from_action<T>(dim, k, k, [&](const KForm<T>& f) {
    KForm<T> image = KForm<T>::constant(scalar_traits<T>::one());
    const auto& idx = f.terms().begin()->first;
    for (int i : idx) {
      std::vector<T> col = map1.col(static_cast<std::size_t>(i - 1));
      image = wedge(image, KForm<T>::from_coordinates(col, dim, 1), dim);
    }
    return image;
  });
}

/// Per-degree family delta_k : Lambda^k -> Lambda^{k+1}, k = 0..2n (the
/// last map targets the trivial space).
template <typename T>
struct OperatorFamily {
  std::vector<GradedOperator<T>> maps;  // maps[k] acts on degree k

  const GradedOperator<T>& at(int k) const { return maps.at(k); }
  int dim() const { return static_cast<int>(maps.size()) - 1; }
};

template <typename T = Rational>
OperatorFamily<T> d_family(const LieAlgebraModel& model) {
  OperatorFamily<T> fam;
  for (int k = 0; k <= model.dim(); ++k) fam.maps.push_back(d_operator<T>(model, k));
  return fam;
}

template <typename T>
OperatorFamily<GaussianRational> complexify(const OperatorFamily<T>& fam) {
  if constexpr (scalar_traits<T>::is_complex) {
    return fam;
  } else {
    OperatorFamily<GaussianRational> out;
    for (const auto& op : fam.maps)
      out.maps.push_back({op.source_degree, op.target_degree, linalg::complexify(op.mat)});
    return out;
  }
}

}  // namespace solvsym::algebra
