#pragma once

#include <array>
#include <optional>
#include <vector>

#include "solvsym/hodge.hpp"
#include "solvsym/operators.hpp"

namespace solvsym::acs {

using algebra::GradedOperator;
using algebra::LieAlgebraModel;
using algebra::OperatorFamily;
using algebra::RationalForm;
using cohomology::Subspace;
using linalg::GaussianMatrix;
using linalg::RationalMatrix;

/// Almost complex structure on a 2n-dimensional model.
///
/// The stored matrix M acts on Lambda^1 coordinates and is written the
/// conventional way ("J: e1 -> e2" puts the coordinates of e2 in column 1).
/// Two derived actions matter:
///   - tangent action on the dual frame: A = -M^T (so that matrices like
///     j0 below are compatible with their standard symplectic forms);
///   - pullback on forms, (J alpha)(X) = alpha(J X): the Lambda^1 matrix is
///     M^{-1} = -M, extended multiplicatively. This is the algebra
///     automorphism entering d^c and the star/Lefschetz identities.
class AlmostComplexStructure {
 public:
  /// Requires M^2 = -I exactly.
  explicit AlmostComplexStructure(RationalMatrix m);

  const RationalMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  RationalMatrix vector_action() const;

  /// Multiplicative degree-k extension of the form pullback (matrix -M).
  GradedOperator<Rational> form_action(int k) const;
  /// Extension of the inverse pullback (matrix M itself).
  GradedOperator<Rational> inverse_form_action(int k) const;

 private:
  RationalMatrix m_;
};

/// Skew coefficient matrix E of a 2-form: E[i][j] = tau(X_i, X_j).
RationalMatrix skew_matrix(const RationalForm& tau, int dim);

bool is_nondegenerate(const RationalForm& tau, int dim);

struct Compatibility {
  /// g(X, Y) = tau(X, J Y) on the frame; symmetric positive definite.
  RationalMatrix frame_metric;
  /// Induced inner products of the coframe (inverse of frame_metric);
  /// this is what Hodge theory consumes.
  hodge::Metric metric;
};

/// Checks tau(J., J.) = tau and positivity of tau(., J.); on success
/// returns the induced metric data.
std::optional<Compatibility> is_compatible(const AlmostComplexStructure& j,
                                           const RationalForm& tau);

/// Almost-Kahler package for a closed nondegenerate tau and compatible J:
/// metric plus the canonical volume tau^n / n!.
struct InducedStructure {
  Compatibility compatibility;
  hodge::VolumeForm volume;
};

InducedStructure induced_structure(const LieAlgebraModel& model, const RationalForm& tau,
                                   const AlmostComplexStructure& j);

/// d^c = J^{-1} d J with J the multiplicative form pullback; a real
/// operator on every degree.
GradedOperator<Rational> dc_operator(const LieAlgebraModel& model,
                                     const AlmostComplexStructure& j, int k);
OperatorFamily<Rational> dc_family(const LieAlgebraModel& model, const AlmostComplexStructure& j);

/// Bidegree (p,q) projectors of the complexified exterior algebra, built
/// exactly from the +i / -i eigencoframes of the form pullback.
class BidegreeProjectors {
 public:
  BidegreeProjectors(int dim, const AlmostComplexStructure& j);

  int dim() const { return dim_; }
  /// Projector onto Lambda^{p,q} inside complexified Lambda^{p+q}.
  const GaussianMatrix& projector(int p, int q) const;
  /// The (p,q) subspace of complexified Lambda^{p+q}.
  Subspace<GaussianRational> pq_subspace(int p, int q) const;

 private:
  int dim_;
  // projectors_[k][p] is the (p, k-p) projector.
  std::vector<std::vector<GaussianMatrix>> projectors_;
};

/// The four bidegree components of d: mubar (-1,2), delbar (0,1),
/// del (1,0), mu (2,-1), over the Gaussian rationals. Their sum is checked
/// to reproduce d exactly on every degree; any residue would mean a fifth
/// bidegree appeared.
struct BidegreeDecomposition {
  OperatorFamily<GaussianRational> mubar;
  OperatorFamily<GaussianRational> delbar;
  OperatorFamily<GaussianRational> del;
  OperatorFamily<GaussianRational> mu;
};

BidegreeDecomposition decompose_d(const LieAlgebraModel& model, const AlmostComplexStructure& j,
                                  const BidegreeProjectors& projectors);
BidegreeDecomposition decompose_d(const LieAlgebraModel& model, const AlmostComplexStructure& j);

/// d^c = -i mubar + i delbar - i del + i mu. The combination must be real;
/// a nonzero imaginary residue is reported as an error.
OperatorFamily<Rational> dc_from_components(const BidegreeDecomposition& decomp);

/// Float-backed construction of a compatible J from (tau, g0) by polar
/// decomposition. If every entry rationalizes (denominator <= 64) and the
/// exact re-verification passes, the result carries an exact structure.
struct CanonicalJResult {
  bool exact = false;
  std::optional<AlmostComplexStructure> exact_j;
  std::vector<double> approx_j;  // row-major dim x dim (tangent-convention matrix M)
  double residual = 0.0;         // ||J^2+I|| and equivariance, Frobenius
  double min_eigenvalue = 0.0;   // of the symmetrized induced frame metric
};

CanonicalJResult canonical_compatible_j(const RationalForm& tau, const hodge::Metric& g0, int dim,
                                        double tol = 1e-9);

}  // namespace solvsym::acs
