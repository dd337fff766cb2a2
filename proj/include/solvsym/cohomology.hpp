#pragma once

#include <optional>
#include <vector>

#include "solvsym/operators.hpp"

namespace solvsym::cohomology {

using algebra::GradedOperator;
using algebra::KForm;
using algebra::LieAlgebraModel;
using linalg::Matrix;

/// Linear subspace of a coordinate space, held as a reduced-echelon row
/// basis. The echelon form is unique for a given subspace, so equality of
/// subspaces is equality of bases.
template <typename T>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Rows of `vectors` span the subspace; they are canonicalized here.
  static Subspace from_spanning_rows(Matrix<T> vectors, std::size_t ambient) {
    std::vector<std::size_t> pivots = vectors.rref_in_place();
    Matrix<T> basis(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = vectors(i, j);
    Subspace s(ambient);
    s.basis_ = std::move(basis);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix<T>::identity(ambient);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<T>& basis() const { return basis_; }

  bool contains(const std::vector<T>& v) const { return reduce(v).second; }

  /// Coordinates of v in the echelon basis when v lies in the subspace.
  std::optional<std::vector<T>> coordinates_of(const std::vector<T>& v) const {
    auto [coords, inside] = reduce(v);
    if (!inside) return std::nullopt;
    return coords;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  bool contains_subspace(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    return from_spanning_rows(Matrix<T>::vstack(a.basis_, b.basis_), a.ambient_);
  }

  friend Subspace intersection(const Subspace& a, const Subspace& b) {
    // x = a_coeffs * A = b_coeffs * B; solve [A^T | -B^T] null space.
    Matrix<T> lhs = Matrix<T>::hstack(a.basis_.transpose(),
                                      (-scalar_traits<T>::one()) * b.basis_.transpose());
    Matrix<T> null = linalg::null_space(lhs);
    Matrix<T> vectors(null.rows(), a.ambient_);
    for (std::size_t r = 0; r < null.rows(); ++r) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        const T& c = null(r, i);
        if (scalar_is_zero(c)) continue;
        for (std::size_t j = 0; j < a.ambient_; ++j)
          vectors(r, j) += c * a.basis_(i, j);
      }
    }
    return from_spanning_rows(std::move(vectors), a.ambient_);
  }

 private:
  std::pair<std::vector<T>, bool> reduce(std::vector<T> v) const {
    std::vector<T> coords(dim(), scalar_traits<T>::zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      // Echelon rows have unit leading entries at their pivot columns.
      std::size_t p = 0;
      while (p < ambient_ && scalar_is_zero(basis_(i, p))) ++p;
      if (p == ambient_) continue;
      const T c = v[p];
      if (scalar_is_zero(c)) continue;
      coords[i] = c;
      for (std::size_t j = p; j < ambient_; ++j) v[j] = v[j] - c * basis_(i, j);
    }
    for (const auto& x : v)
      if (!scalar_is_zero(x)) return {std::move(coords), false};
    return {std::move(coords), true};
  }

  std::size_t ambient_;
  Matrix<T> basis_;
};

/// Exact kernel of a graded operator, in the canonical echelon basis.
template <typename T>
Subspace<T> kernel(const GradedOperator<T>& op) {
  return Subspace<T>::from_spanning_rows(linalg::null_space(op.mat), op.mat.cols());
}

/// Exact image (column space) of a graded operator.
template <typename T>
Subspace<T> image(const GradedOperator<T>& op) {
  return Subspace<T>::from_spanning_rows(linalg::column_space(op.mat), op.mat.rows());
}

/// H^k representatives: the canonical echelon complement of im d_{k-1}
/// inside ker d_k. Representative classes form a basis of H^k.
template <typename T = Rational>
class CohomologySpace {
 public:
  CohomologySpace(const LieAlgebraModel& model, int k)
      : degree_(k),
        dim_ambient_(model.space_dim(k)),
        kernel_(kernel(algebra::d_operator<T>(model, k))),
        image_(k == 0 ? Subspace<T>(dim_ambient_)
                      : image(algebra::d_operator<T>(model, k - 1))) {
    Subspace<T> accepted = image_;
    for (std::size_t i = 0; i < kernel_.dim(); ++i) {
      std::vector<T> candidate = kernel_.basis().row(i);
      if (accepted.contains(candidate)) continue;
      Matrix<T> ext(1, dim_ambient_);
      ext.set_row(0, candidate);
      accepted = sum(accepted, Subspace<T>::from_spanning_rows(std::move(ext), dim_ambient_));
      representatives_.push_back(KForm<T>::from_coordinates(candidate, model.dim(), k));
    }
    dim_ = representatives_.size();
    dim_model_ = model.dim();
  }

  int degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  const std::vector<KForm<T>>& representatives() const { return representatives_; }
  const Subspace<T>& cocycles() const { return kernel_; }
  const Subspace<T>& coboundaries() const { return image_; }

  /// Coordinates of the class [z] in the representative basis. The cocycle
  /// condition is checked by solvability.
  std::vector<T> class_coordinates(const KForm<T>& z) const {
    std::vector<T> v = z.coordinates(dim_model_);
    if (!kernel_.contains(v)) throw std::invalid_argument("form is not closed");
    // z = sum c_i rep_i + coboundary; the decomposition is unique.
    Matrix<T> system(dim_ambient_, dim_ + image_.dim());
    for (std::size_t i = 0; i < dim_; ++i)
      system.set_col(i, representatives_[i].coordinates(dim_model_));
    for (std::size_t i = 0; i < image_.dim(); ++i)
      system.set_col(dim_ + i, image_.basis().row(i));
    auto sol = linalg::solve(system, v);
    if (!sol) throw std::logic_error("cocycle not spanned by representatives + coboundaries");
    return std::vector<T>(sol->begin(), sol->begin() + dim_);
  }

 private:
  int degree_;
  std::size_t dim_ambient_;
  Subspace<T> kernel_;
  Subspace<T> image_;
  std::vector<KForm<T>> representatives_;
  std::size_t dim_ = 0;
  int dim_model_ = 0;
};

/// Betti numbers b_0..b_2n of the invariant complex.
std::vector<std::size_t> betti_numbers(const LieAlgebraModel& model);

/// Matrix of [omega^{n-k} ^ .] : H^k -> H^{2n-k} in the representative
/// bases. Requires d(omega) = 0 so the map descends to cohomology.
linalg::RationalMatrix lefschetz_map(const LieAlgebraModel& model, const algebra::RationalForm& omega,
                                     int k);

struct HardLefschetzResult {
  bool holds = false;
  std::size_t rank = 0;
  std::size_t b_k = 0;
  std::size_t b_dual = 0;
  linalg::RationalMatrix map;
  std::vector<algebra::RationalForm> kernel_classes;  // nonempty iff !holds
};

/// Hard Lefschetz in degree k: [L^{n-k}] is an isomorphism H^k -> H^{2n-k}.
HardLefschetzResult hard_lefschetz(const LieAlgebraModel& model, const algebra::RationalForm& omega,
                                   int k);

}  // namespace solvsym::cohomology
