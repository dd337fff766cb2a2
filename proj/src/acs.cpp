#include "solvsym/acs.hpp"

#include <Eigen/Dense>

namespace solvsym::acs {

namespace {

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

GaussianRational gi() { return GaussianRational::i(); }

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(RationalMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("J matrix must be square and nonempty");
  RationalMatrix sq = m_ * m_;
  RationalMatrix minus_id = Rational(-1) * RationalMatrix::identity(m_.rows());
  if (sq != minus_id) throw std::invalid_argument("J matrix does not satisfy J^2 = -I");
}

RationalMatrix AlmostComplexStructure::vector_action() const {
  return Rational(-1) * m_.transpose();
}

GradedOperator<Rational> AlmostComplexStructure::form_action(int k) const {
  return algebra::automorphism_extension(Rational(-1) * m_, dim(), k);
}

GradedOperator<Rational> AlmostComplexStructure::inverse_form_action(int k) const {
  return algebra::automorphism_extension(m_, dim(), k);
}

RationalMatrix skew_matrix(const RationalForm& tau, int dim) {
  if (tau.degree() != 2) throw std::invalid_argument("expected a 2-form");
  RationalMatrix e(dim, dim);
  for (const auto& [idx, c] : tau.terms()) {
    e(idx[0] - 1, idx[1] - 1) = c;
    e(idx[1] - 1, idx[0] - 1) = -c;
  }
  return e;
}

bool is_nondegenerate(const RationalForm& tau, int dim) {
  return !algebra::wedge_power(tau, dim / 2, dim).is_zero();
}

std::optional<Compatibility> is_compatible(const AlmostComplexStructure& j,
                                           const RationalForm& tau) {
  int dim = j.dim();
  if (!is_nondegenerate(tau, dim)) throw std::invalid_argument("2-form is degenerate");
  RationalMatrix e = skew_matrix(tau, dim);
  // Equivariance tau(J., J.) = tau, written on the coframe side.
  if (j.matrix() * e * j.matrix().transpose() != e) return std::nullopt;
  RationalMatrix g = e * j.vector_action();
  if (!linalg::is_symmetric(g) || !linalg::is_positive_definite(g)) return std::nullopt;
  auto inv = linalg::inverse(g);
  if (!inv) throw std::logic_error("SPD matrix failed to invert");
  return Compatibility{std::move(g), hodge::Metric(std::move(*inv))};
}

InducedStructure induced_structure(const LieAlgebraModel& model, const RationalForm& tau,
                                   const AlmostComplexStructure& j) {
  auto compat = is_compatible(j, tau);
  if (!compat) throw std::invalid_argument("J is not compatible with the given 2-form");
  int n = model.half_dim();
  RationalForm vol_form =
      (Rational(1) / factorial(n)) * algebra::wedge_power(tau, n, model.dim());
  return InducedStructure{std::move(*compat), hodge::VolumeForm(std::move(vol_form), model.dim())};
}

GradedOperator<Rational> dc_operator(const LieAlgebraModel& model,
                                     const AlmostComplexStructure& j, int k) {
  auto forward = j.form_action(k);
  auto d = algebra::d_operator(model, k);
  if (k + 1 > model.dim()) return {k, k + 1, linalg::RationalMatrix(0, model.space_dim(k))};
  auto back = j.inverse_form_action(k + 1);
  return {k, k + 1, back.mat * d.mat * forward.mat};
}

OperatorFamily<Rational> dc_family(const LieAlgebraModel& model,
                                   const AlmostComplexStructure& j) {
  OperatorFamily<Rational> fam;
  for (int k = 0; k <= model.dim(); ++k) fam.maps.push_back(dc_operator(model, j, k));
  return fam;
}

BidegreeProjectors::BidegreeProjectors(int dim, const AlmostComplexStructure& j) : dim_(dim) {
  if (j.dim() != dim) throw std::invalid_argument("J dimension mismatch");
  int n = dim / 2;

  // (1,0) coframe: image of (1 - i J)/2 with J the form pullback (-M), i.e.
  // (I + i M)/2; the +i eigenspace of the pullback.
  GaussianMatrix m_c = linalg::complexify(j.matrix());
  GaussianMatrix p10 = GaussianMatrix::identity(dim);
  for (std::size_t r = 0; r < p10.rows(); ++r)
    for (std::size_t c = 0; c < p10.cols(); ++c)
      p10(r, c) = (p10(r, c) + gi() * m_c(r, c)) / GaussianRational(Rational(2));
  Subspace<GaussianRational> coframe10 =
      Subspace<GaussianRational>::from_spanning_rows(linalg::column_space(p10), dim);
  if (coframe10.dim() != static_cast<std::size_t>(n))
    throw std::logic_error("(1,0) eigencoframe has wrong dimension");

  std::vector<algebra::GaussianForm> phi, phibar;
  for (int a = 0; a < n; ++a) {
    phi.push_back(algebra::GaussianForm::from_coordinates(coframe10.basis().row(a), dim, 1));
    std::vector<GaussianRational> conj_row(dim);
    for (int c = 0; c < dim; ++c) conj_row[c] = conj(coframe10.basis()(a, c));
    phibar.push_back(algebra::GaussianForm::from_coordinates(conj_row, dim, 1));
  }

  projectors_.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    std::size_t total = algebra::binomial(dim, k);
    // Basis of Lambda^k C ordered by blocks p = k..0 (q = k - p).
    GaussianMatrix basis(total, total);
    std::vector<std::pair<int, std::size_t>> block_sizes;  // (p, count)
    std::size_t col = 0;
    for (int p = k; p >= 0; --p) {
      int q = k - p;
      if (p > n || q > n) {
        block_sizes.emplace_back(p, 0);
        continue;
      }
      std::size_t np = algebra::binomial(n, p);
      std::size_t nq = algebra::binomial(n, q);
      for (std::size_t a = 0; a < np; ++a) {
        algebra::MultiIndex ia = algebra::multi_index_unrank(a, n, p);
        algebra::GaussianForm left = algebra::GaussianForm::constant(GaussianRational(Rational(1)));
        for (int t : ia) left = algebra::wedge(left, phi[t - 1], dim);
        for (std::size_t b = 0; b < nq; ++b) {
          algebra::MultiIndex ib = algebra::multi_index_unrank(b, n, q);
          algebra::GaussianForm w = left;
          for (int t : ib) w = algebra::wedge(w, phibar[t - 1], dim);
          basis.set_col(col++, w.coordinates(dim));
        }
      }
      block_sizes.emplace_back(p, np * nq);
    }
    auto basis_inv = linalg::inverse(basis);
    if (!basis_inv) throw std::logic_error("bidegree basis is not invertible");

    projectors_[k].assign(k + 1, GaussianMatrix(total, total));
    std::size_t offset = 0;
    for (const auto& [p, count] : block_sizes) {
      GaussianMatrix sel(total, total);
      for (std::size_t i = 0; i < count; ++i)
        sel(offset + i, offset + i) = GaussianRational(Rational(1));
      projectors_[k][p] = basis * sel * *basis_inv;
      offset += count;
    }
  }
}

const GaussianMatrix& BidegreeProjectors::projector(int p, int q) const {
  if (p < 0 || q < 0 || p + q > dim_) throw std::invalid_argument("bidegree out of range");
  return projectors_.at(p + q).at(p);
}

Subspace<GaussianRational> BidegreeProjectors::pq_subspace(int p, int q) const {
  const GaussianMatrix& proj = projector(p, q);
  return Subspace<GaussianRational>::from_spanning_rows(linalg::column_space(proj), proj.rows());
}

namespace {

OperatorFamily<GaussianRational> component(const OperatorFamily<GaussianRational>& d_c,
                                           const BidegreeProjectors& projectors, int dim, int da,
                                           int db) {
  OperatorFamily<GaussianRational> out;
  for (int k = 0; k <= dim; ++k) {
    std::size_t rows = k + 1 <= dim ? algebra::binomial(dim, k + 1) : 0;
    GaussianMatrix acc(rows, algebra::binomial(dim, k));
    if (k + 1 <= dim) {
      for (int p = 0; p <= k; ++p) {
        int q = k - p;
        int tp = p + da, tq = q + db;
        if (tp < 0 || tq < 0 || tp + tq != k + 1) continue;
        if (tp > dim || tq > dim) continue;
        acc = acc + projectors.projector(tp, tq) * d_c.at(k).mat * projectors.projector(p, q);
      }
    }
    out.maps.push_back({k, k + 1, std::move(acc)});
  }
  return out;
}

}  // namespace

BidegreeDecomposition decompose_d(const LieAlgebraModel& model, const AlmostComplexStructure& j,
                                  const BidegreeProjectors& projectors) {
  auto d_c = algebra::complexify(algebra::d_family(model));
  BidegreeDecomposition decomp{
      component(d_c, projectors, model.dim(), -1, 2),
      component(d_c, projectors, model.dim(), 0, 1),
      component(d_c, projectors, model.dim(), 1, 0),
      component(d_c, projectors, model.dim(), 2, -1),
  };
  for (int k = 0; k <= model.dim(); ++k) {
    GaussianMatrix sum = decomp.mubar.at(k).mat + decomp.delbar.at(k).mat + decomp.del.at(k).mat +
                         decomp.mu.at(k).mat;
    if (sum != d_c.at(k).mat)
      throw std::logic_error(
          "bidegree components do not sum to d in degree " + std::to_string(k) +
          "; a component outside {(-1,2),(0,1),(1,0),(2,-1)} appeared");
  }
  return decomp;
}

BidegreeDecomposition decompose_d(const LieAlgebraModel& model, const AlmostComplexStructure& j) {
  return decompose_d(model, j, BidegreeProjectors(model.dim(), j));
}

OperatorFamily<Rational> dc_from_components(const BidegreeDecomposition& decomp) {
  OperatorFamily<Rational> out;
  int dim = decomp.mubar.dim();
  for (int k = 0; k <= dim; ++k) {
    GaussianMatrix combo = decomp.mubar.at(k).mat;
    // -i mubar + i delbar - i del + i mu
    combo = (-gi()) * decomp.mubar.at(k).mat + gi() * decomp.delbar.at(k).mat +
            (-gi()) * decomp.del.at(k).mat + gi() * decomp.mu.at(k).mat;
    RationalMatrix real(combo.rows(), combo.cols());
    for (std::size_t r = 0; r < combo.rows(); ++r)
      for (std::size_t c = 0; c < combo.cols(); ++c) {
        if (combo(r, c).im != 0)
          throw std::logic_error("d^c combination has a nonzero imaginary residue in degree " +
                                 std::to_string(k));
        real(r, c) = combo(r, c).re;
      }
    out.maps.push_back({k, k + 1, std::move(real)});
  }
  return out;
}

namespace {

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

}  // namespace

CanonicalJResult canonical_compatible_j(const RationalForm& tau, const hodge::Metric& g0, int dim,
                                        double tol) {
  if (!is_nondegenerate(tau, dim)) throw std::invalid_argument("2-form is degenerate");
  // Frame metric matrix of g0 is the inverse of its coframe matrix.
  Eigen::MatrixXd g0_frame = to_eigen(g0.matrix()).inverse();
  Eigen::MatrixXd e = to_eigen(skew_matrix(tau, dim));

  // Orthonormalize the frame (y = L^T x with g0 = L L^T), take the polar
  // part of the skew map -E there, and transport back.
  Eigen::LLT<Eigen::MatrixXd> llt(g0_frame);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("g0 is not positive definite");
  Eigen::MatrixXd l = llt.matrixL();
  Eigen::MatrixXd l_inv = l.inverse();
  Eigen::MatrixXd omega_tilde = -(l_inv * e * l_inv.transpose());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(omega_tilde, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXd j_tilde = svd.matrixU() * svd.matrixV().transpose();
  Eigen::MatrixXd a = l.transpose().inverse() * j_tilde * l.transpose();

  CanonicalJResult result;
  // Report in the coframe convention, M = -A^T.
  Eigen::MatrixXd m = -a.transpose();
  result.approx_j.resize(dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) result.approx_j[i * dim + j] = m(i, j);

  double r_j2 = (a * a + Eigen::MatrixXd::Identity(dim, dim)).norm();
  double r_eq = (a.transpose() * e * a - e).norm();
  result.residual = std::sqrt(r_j2 * r_j2 + r_eq * r_eq);
  Eigen::MatrixXd metric = e * a;
  Eigen::MatrixXd sym = 0.5 * (metric + metric.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  result.min_eigenvalue = eig.eigenvalues().minCoeff();
  if (result.residual > tol)
    throw std::runtime_error("polar construction failed to converge: residual " +
                             std::to_string(result.residual));

  // Try to promote to an exact structure.
  RationalMatrix exact(dim, dim);
  bool ok = true;
  for (int i = 0; i < dim && ok; ++i)
    for (int j = 0; j < dim && ok; ++j) {
      auto r = rationalize(m(i, j), 64, tol);
      if (!r) {
        ok = false;
        break;
      }
      exact(i, j) = *r;
    }
  if (ok) {
    try {
      AlmostComplexStructure candidate(std::move(exact));
      if (is_compatible(candidate, tau)) {
        result.exact = true;
        result.exact_j = std::move(candidate);
      }
    } catch (const std::invalid_argument&) {
      // Rationalization produced a near-miss; keep the float result.
    }
  }
  return result;
}

}  // namespace solvsym::acs
