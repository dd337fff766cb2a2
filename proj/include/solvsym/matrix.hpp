#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "solvsym/rational.hpp"

namespace solvsym::linalg {

/// Dense matrix over an exact field (Rational or GaussianRational).
/// Degenerate shapes (0 x m, m x 0) are legal; they show up as the top
/// exterior degree's target space.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<T>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!scalar_is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (scalar_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const Matrix& a, const std::vector<T>&) = delete;

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<T> y(rows_, scalar_traits<T>::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!scalar_is_zero((*this)(i, j))) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix conjugate() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = conj(data_[i]);
    return r;
  }

  Matrix conjugate_transpose() const { return conjugate().transpose(); }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void set_col(std::size_t j, const std::vector<T>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  /// Rows of `b` appended below rows of `a`.
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0)
      throw std::invalid_argument("vstack shape mismatch");
    std::size_t cols = a.rows_ != 0 ? a.cols_ : b.cols_;
    Matrix r(a.rows_ + b.rows_, cols);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < cols; ++j) r(a.rows_ + i, j) = b(i, j);
    return r;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack shape mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  /// In-place reduced row echelon form (Gauss-Jordan, first-nonzero pivot,
  /// leading entries normalized to 1). Deterministic, hence canonical for a
  /// given row space. Returns the pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && scalar_is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      swap_rows(r, p);
      T inv = scalar_traits<T>::one() / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = inv * (*this)(r, j);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || scalar_is_zero((*this)(i, c))) continue;
        T f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<GaussianRational>;

inline GaussianMatrix complexify(const RationalMatrix& m) {
  GaussianMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = solvsym::complexify(m(i, j));
  return r;
}

/// Rank by fraction-free (Bareiss) forward elimination. Exact over any
/// field; gives an independent route from rref_in_place for rank checks.
template <typename T>
std::size_t bareiss_rank(Matrix<T> m) {
  std::size_t rank = 0;
  T prev = scalar_traits<T>::one();
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && scalar_is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    const T pivot = m(rank, c);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * pivot - m(i, c) * m(rank, j)) / prev;
      }
      m(i, c) = scalar_traits<T>::zero();
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

/// Determinant by Bareiss elimination (square input).
template <typename T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return scalar_traits<T>::one();
  T prev = scalar_traits<T>::one();
  T sign = scalar_traits<T>::one();
  for (std::size_t k = 0; k < n - 1; ++k) {
    std::size_t p = k;
    while (p < n && scalar_is_zero(m(p, k))) ++p;
    if (p == n) return scalar_traits<T>::zero();
    if (p != k) {
      m.swap_rows(k, p);
      sign = -scalar_traits<T>::one() * sign;
    }
    const T pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / prev;
    prev = pivot;
  }
  return sign * m(n - 1, n - 1);
}

/// Basis of the null space {x : m x = 0} as matrix rows, canonicalized to
/// reduced echelon form.
template <typename T>
Matrix<T> null_space(const Matrix<T>& m) {
  Matrix<T> work = m;
  std::vector<std::size_t> pivots = work.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t n_free = m.cols() - pivots.size();
  Matrix<T> basis(n_free, m.cols());
  std::size_t r = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(r, f) = scalar_traits<T>::one();
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      basis(r, pivots[pi]) = -work(pi, f);
    ++r;
  }
  basis.rref_in_place();
  return basis;
}

/// Basis of the column space as matrix rows in reduced echelon form.
template <typename T>
Matrix<T> column_space(const Matrix<T>& m) {
  Matrix<T> work = m.transpose();
  std::vector<std::size_t> pivots = work.rref_in_place();
  Matrix<T> basis(pivots.size(), m.rows());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis(i, j) = work(i, j);
  return basis;
}

/// One exact solution of m x = b, or nullopt when inconsistent.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve shape mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), scalar_traits<T>::zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix<T> aug = Matrix<T>::hstack(m, Matrix<T>::identity(n));
  std::vector<std::size_t> pivots = aug.rref_in_place();
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Leading-principal-minor test for symmetric positive definiteness.
bool is_positive_definite(const RationalMatrix& g);

inline bool is_symmetric(const RationalMatrix& g) {
  if (g.rows() != g.cols()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (g(i, j) != g(j, i)) return false;
  return true;
}

}  // namespace solvsym::linalg
