#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "solvsym/matrix.hpp"
#include "solvsym/rational.hpp"

namespace solvsym::algebra {

/// Strictly increasing 1-based index tuple naming a wedge basis element
/// e^{i1} ^ ... ^ e^{ik}. The empty tuple is the degree-0 basis element.
using MultiIndex = std::vector<int>;

std::uint64_t binomial(unsigned n, unsigned k);

/// Lexicographic position of a strictly increasing k-subset of {1..n}.
std::size_t multi_index_rank(const MultiIndex& idx, int n);

/// Inverse of multi_index_rank.
MultiIndex multi_index_unrank(std::size_t rank, int n, int k);

/// Concatenation sign: merges two strictly increasing tuples, counting the
/// adjacent transpositions needed to sort them. Returns 0 on a repeated
/// index, else +-1, with the merged tuple in *merged.
int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex* merged);

std::string multi_index_label(const MultiIndex& idx);

/// Exterior form of fixed degree with exact coefficients, stored as a
/// sparse map over sorted multi-indices. Zero coefficients are never kept.
template <typename T>
class KForm {
 public:
  KForm() : degree_(0) {}
  explicit KForm(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative form degree");
  }

  static KForm basis_element(MultiIndex idx) {
    KForm f(static_cast<int>(idx.size()));
    f.add_term(std::move(idx), scalar_traits<T>::one());
    return f;
  }
  static KForm constant(T value) {
    KForm f(0);
    f.add_term({}, std::move(value));
    return f;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, T>& terms() const { return terms_; }

  T coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? scalar_traits<T>::zero() : it->second;
  }

  void add_term(MultiIndex idx, T coeff) {
    if (static_cast<int>(idx.size()) != degree_)
      throw std::invalid_argument("multi-index length does not match form degree");
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] >= idx[i + 1]) throw std::invalid_argument("multi-index not strictly increasing");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      if (!scalar_is_zero(coeff)) terms_.emplace(std::move(idx), std::move(coeff));
      return;
    }
    it->second += coeff;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  friend KForm operator+(const KForm& a, const KForm& b) {
    a.require_same_degree(b);
    KForm r = a;
    for (const auto& [idx, c] : b.terms_) r.add_term(idx, c);
    return r;
  }
  friend KForm operator-(const KForm& a, const KForm& b) {
    a.require_same_degree(b);
    KForm r = a;
    for (const auto& [idx, c] : b.terms_) r.add_term(idx, -c);
    return r;
  }
  friend KForm operator-(const KForm& a) {
    KForm r(a.degree_);
    for (const auto& [idx, c] : a.terms_) r.terms_.emplace(idx, -c);
    return r;
  }
  friend KForm operator*(const T& s, const KForm& a) {
    KForm r(a.degree_);
    if (scalar_is_zero(s)) return r;
    for (const auto& [idx, c] : a.terms_) {
      T v = s * c;
      if (!scalar_is_zero(v)) r.terms_.emplace(idx, std::move(v));
    }
    return r;
  }

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  /// Coordinates in the canonical lexicographic basis of Lambda^degree.
  std::vector<T> coordinates(int dim) const {
    std::vector<T> v(binomial(dim, degree_), scalar_traits<T>::zero());
    for (const auto& [idx, c] : terms_) {
      if (!idx.empty() && idx.back() > dim) throw std::invalid_argument("index exceeds dimension");
      v[multi_index_rank(idx, dim)] = c;
    }
    return v;
  }

  static KForm from_coordinates(const std::vector<T>& v, int dim, int degree) {
    if (v.size() != binomial(dim, degree))
      throw std::invalid_argument("coordinate vector has wrong length");
    KForm f(degree);
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!scalar_is_zero(v[r])) f.terms_.emplace(multi_index_unrank(r, dim, degree), v[r]);
    return f;
  }

  std::string to_text(const std::string& generator = "e") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [idx, c] : terms_) {
      std::string cs = solvsym::to_string(c);
      if (!out.empty()) out += " + ";
      if (idx.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += generator + multi_index_label(idx);
      } else if (cs == "-1") {
        out += "-" + generator + multi_index_label(idx);
      } else {
        bool simple = cs.find_first_of("+-*") == std::string::npos ||
                      (cs[0] == '-' && cs.find_first_of("+-*", 1) == std::string::npos);
        out += (simple ? cs : "(" + cs + ")") + "*" + generator + multi_index_label(idx);
      }
    }
    return out;
  }

 private:
  void require_same_degree(const KForm& b) const {
    if (degree_ != b.degree_) throw std::invalid_argument("form degree mismatch");
  }

  int degree_;
  std::map<MultiIndex, T> terms_;
};

using RationalForm = KForm<Rational>;
using GaussianForm = KForm<GaussianRational>;

inline GaussianForm complexify(const RationalForm& f) {
  GaussianForm g(f.degree());
  for (const auto& [idx, c] : f.terms()) g.add_term(idx, solvsym::complexify(c));
  return g;
}

/// Graded-commutative wedge product. `dim` bounds the legal total degree;
/// exceeding it is a contract violation, not a silent zero.
template <typename T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b, int dim) {
  int degree = a.degree() + b.degree();
  if (degree > dim)
    throw std::invalid_argument("wedge degree " + std::to_string(degree) + " exceeds dimension " +
                                std::to_string(dim));
  KForm<T> r(degree);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      MultiIndex merged;
      int sign = merge_sign(ia, ib, &merged);
      if (sign == 0) continue;
      T c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(std::move(merged), std::move(c));
    }
  }
  return r;
}

template <typename T>
KForm<T> wedge_power(const KForm<T>& a, int power, int dim) {
  KForm<T> r = KForm<T>::constant(scalar_traits<T>::one());
  for (int i = 0; i < power; ++i) r = wedge(r, a, dim);
  return r;
}

}  // namespace solvsym::algebra
