#pragma once

#include <string>
#include <vector>

#include "solvsym/cohomology.hpp"
#include "solvsym/operators.hpp"

namespace solvsym::hodge {

using algebra::GradedOperator;
using algebra::KForm;
using algebra::LieAlgebraModel;
using algebra::OperatorFamily;
using cohomology::Subspace;
using linalg::Matrix;
using linalg::RationalMatrix;

/// Inner products of the covector basis on Lambda^1: exact, symmetric,
/// positive definite (verified via leading principal minors).
class Metric {
 public:
  explicit Metric(RationalMatrix g);

  static Metric identity(int dim) { return Metric(RationalMatrix::identity(dim)); }

  const RationalMatrix& matrix() const { return g_; }
  int dim() const { return static_cast<int>(g_.rows()); }

 private:
  RationalMatrix g_;
};

/// Positive top-degree form fixing the orientation.
class VolumeForm {
 public:
  VolumeForm(algebra::RationalForm form, int dim);

  const algebra::RationalForm& form() const { return form_; }
  const Rational& coefficient() const { return coeff_; }

 private:
  algebra::RationalForm form_;
  Rational coeff_;
};

/// Induced inner product on Lambda^k: <e^I, e^J> = det G[I, J].
RationalMatrix gram(const Metric& metric, int k);

/// All grams of a model dimension at once (index = degree).
std::vector<RationalMatrix> gram_family(const Metric& metric, int dim);

/// Hodge star Lambda^k -> Lambda^{2n-k}, the unique operator with
/// a ^ star(b) = <a, b> vol. The volume coefficient must satisfy
/// v^2 = det(G)^{-1}; for a metric whose determinant is not an exact
/// rational square there is no admissible rational volume form and the
/// caller gets an error rather than an approximation.
GradedOperator<Rational> hodge_star(const Metric& metric, const VolumeForm& vol, int k);

/// Volume form of a metric, when det(G)^{-1} is a rational square.
VolumeForm metric_volume(const Metric& metric);

/// Adjoint with respect to the gram inner products: G_p^{-1} op^H G_q
/// (conjugate-transpose; plain transpose over the rationals).
template <typename T>
GradedOperator<T> adjoint(const GradedOperator<T>& op, const Matrix<T>& gram_p,
                          const Matrix<T>& gram_q) {
  auto gp_inv = linalg::inverse(gram_p);
  if (!gp_inv) throw std::invalid_argument("singular gram matrix");
  return {op.target_degree, op.source_degree,
          *gp_inv * op.mat.conjugate_transpose() * gram_q};
}

/// Laplacian of a degree +1 operator family at degree k:
/// Delta = delta* delta + delta delta*.
template <typename T>
GradedOperator<T> laplacian(const OperatorFamily<T>& delta, const std::vector<Matrix<T>>& grams,
                            int k) {
  const auto& up = delta.at(k);
  GradedOperator<T> result{k, k, Matrix<T>(grams[k].rows(), grams[k].cols())};
  if (k + 1 < static_cast<int>(grams.size())) {
    auto up_star = adjoint(up, grams[k], grams[k + 1]);
    result.mat = result.mat + (up_star.mat * up.mat);
  }
  if (k > 0) {
    const auto& down = delta.at(k - 1);
    auto down_star = adjoint(down, grams[k - 1], grams[k]);
    result.mat = result.mat + (down.mat * down_star.mat);
  }
  return result;
}

/// Exact kernel of the Laplacian of `delta` at degree k.
template <typename T>
struct HarmonicSpace {
  std::string operator_tag;
  int degree = 0;
  Subspace<T> space;
  std::vector<KForm<T>> basis;
};

template <typename T>
HarmonicSpace<T> harmonics(const OperatorFamily<T>& delta, const std::vector<Matrix<T>>& grams,
                           int k, int dim, const std::string& tag) {
  GradedOperator<T> lap = laplacian(delta, grams, k);
  Subspace<T> space = cohomology::kernel(lap);
  HarmonicSpace<T> h{tag, k, space, {}};
  for (std::size_t i = 0; i < space.dim(); ++i)
    h.basis.push_back(KForm<T>::from_coordinates(space.basis().row(i), dim, k));
  return h;
}

/// Gram inner product of coordinate vectors.
template <typename T>
T inner(const std::vector<T>& a, const std::vector<T>& b, const Matrix<T>& gram) {
  T acc = scalar_traits<T>::zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (scalar_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!scalar_is_zero(b[j])) acc += conj(a[i]) * gram(i, j) * b[j];
  }
  return acc;
}

/// Orthogonal projection of v onto the subspace, w.r.t. the gram product.
template <typename T>
std::vector<T> project_onto(const std::vector<T>& v, const Subspace<T>& space,
                            const Matrix<T>& gram) {
  std::size_t m = space.dim();
  std::vector<T> zero(v.size(), scalar_traits<T>::zero());
  if (m == 0) return zero;
  Matrix<T> gramian(m, m);
  std::vector<T> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      gramian(i, j) = inner(space.basis().row(i), space.basis().row(j), gram);
    rhs[i] = inner(space.basis().row(i), v, gram);
  }
  auto coeffs = linalg::solve(gramian, rhs);
  if (!coeffs) throw std::logic_error("gramian of independent basis is singular");
  std::vector<T> out = zero;
  for (std::size_t i = 0; i < m; ++i) {
    if (scalar_is_zero((*coeffs)[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[j] += (*coeffs)[i] * space.basis()(i, j);
  }
  return out;
}

}  // namespace solvsym::hodge
