#include "solvsym/jsearch.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace solvsym::jsearch {

namespace {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double normal() {
    // Box-Muller; implemented locally so streams are platform-stable.
    double u1 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
};

Eigen::MatrixXd to_eigen(const linalg::RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

struct Objective {
  Eigen::MatrixXd e_omega;
  Eigen::MatrixXd e_eta;
  double margin;

  // Structure + equivariance residual (the quantity gated by tol_residual).
  double residual(const Eigen::MatrixXd& a) const {
    int n = a.rows();
    double r1 = (a * a + Eigen::MatrixXd::Identity(n, n)).squaredNorm();
    double r2 = (a.transpose() * e_omega * a - e_omega).squaredNorm();
    double r3 = (a.transpose() * e_eta * a - e_eta).squaredNorm();
    return std::sqrt(r1 + r2 + r3);
  }

  static double hinge(const Eigen::MatrixXd& e, const Eigen::MatrixXd& a, double margin) {
    Eigen::MatrixXd g = e * a;
    Eigen::MatrixXd s = 0.5 * (g + g.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
    double h = 0.0;
    for (int i = 0; i < s.rows(); ++i) {
      double gap = margin - eig.eigenvalues()(i);
      if (gap > 0) h += gap * gap;
    }
    return h;
  }

  double value(const Eigen::MatrixXd& a) const {
    double r = residual(a);
    return r * r + hinge(e_omega, a, margin) + hinge(e_eta, a, margin);
  }

  Eigen::MatrixXd gradient(const Eigen::MatrixXd& a) const {
    int n = a.rows();
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd r1 = a * a + Eigen::MatrixXd::Identity(n, n);
    g += 2.0 * (r1 * a.transpose() + a.transpose() * r1);
    for (const Eigen::MatrixXd* e : {&e_omega, &e_eta}) {
      Eigen::MatrixXd r = a.transpose() * (*e) * a - *e;
      g += 2.0 * ((*e) * a * r.transpose() + e->transpose() * a * r);

      Eigen::MatrixXd metric = (*e) * a;
      Eigen::MatrixXd s = 0.5 * (metric + metric.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
      Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        double gap = margin - eig.eigenvalues()(i);
        if (gap > 0)
          w -= 2.0 * gap * eig.eigenvectors().col(i) * eig.eigenvectors().col(i).transpose();
      }
      g += e->transpose() * w;
    }
    return g;
  }
};

double min_metric_eigenvalue(const Eigen::MatrixXd& e, const Eigen::MatrixXd& a) {
  Eigen::MatrixXd g = e * a;
  Eigen::MatrixXd s = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
  return eig.eigenvalues().minCoeff();
}

/// Polar-part compatible J of a skew matrix in an orthonormal frame.
Eigen::MatrixXd polar_j(const Eigen::MatrixXd& e) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(-e, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

void SearchConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (tol_residual <= 0 || tol_posdef <= 0 || step_init <= 0)
    throw std::invalid_argument("tolerances and step size must be positive");
}

std::pair<double, double> compatibility_residual(const std::vector<double>& j_row_major,
                                                 const RationalForm& tau, int dim) {
  if (j_row_major.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("J matrix has wrong size");
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = j_row_major[i * dim + j];
  Eigen::MatrixXd a = -m.transpose();
  Eigen::MatrixXd e = to_eigen(acs::skew_matrix(tau, dim));
  double r1 = (a * a + Eigen::MatrixXd::Identity(dim, dim)).squaredNorm();
  double r2 = (a.transpose() * e * a - e).squaredNorm();
  return {std::sqrt(r1 + r2), min_metric_eigenvalue(e, a)};
}

SearchOutcome find_shared_j(const LieAlgebraModel& model, const RationalForm& omega,
                            const RationalForm& eta, const SearchConfig& cfg) {
  cfg.validate();
  const int dim = model.dim();
  if (!acs::is_nondegenerate(omega, dim)) throw std::invalid_argument("omega is degenerate");
  if (!acs::is_nondegenerate(eta, dim)) throw std::invalid_argument("eta is degenerate");

  SearchOutcome outcome;

  // When the exact pipeline proves no shared J can exist (unimodular,
  // hard Lefschetz in degree 1, non-GCS Lee class), a float candidate
  // must survive exact re-verification before it may count as found.
  {
    bool hl1 = confsym::is_symplectic(model, omega) &&
               cohomology::hard_lefschetz(model, omega, 1).holds;
    if (hl1 && algebra::is_unimodular(model)) {
      auto lee = confsym::lee_form_from_eta(model, eta);
      if (lee.theta && confsym::is_lcs(model, {eta, *lee.theta}) &&
          !confsym::lee_class(model, *lee.theta).is_zero)
        outcome.exactness_required = true;
    }
  }

  Objective obj{to_eigen(acs::skew_matrix(omega, dim)), to_eigen(acs::skew_matrix(eta, dim)),
                cfg.tol_posdef};

  Eigen::MatrixXd j_std = Eigen::MatrixXd::Zero(dim, dim);
  for (int b = 0; b < dim / 2; ++b) {
    j_std(2 * b, 2 * b + 1) = -1;
    j_std(2 * b + 1, 2 * b) = 1;
  }

  SplitMix64 rng(cfg.seed);
  double best_value = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd best_a;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Eigen::MatrixXd a;
    if (restart == 0) {
      a = polar_j(obj.e_omega);
    } else if (restart == 1) {
      a = polar_j(obj.e_eta);
    } else if (restart == 2 &&
               std::abs(Eigen::MatrixXd(0.5 * (obj.e_omega + obj.e_eta)).determinant()) > 1e-12) {
      a = polar_j(0.5 * (obj.e_omega + obj.e_eta));
    } else {
      Eigen::MatrixXd gauss(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) gauss(i, j) = rng.normal();
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(gauss);
      Eigen::MatrixXd q = qr.householderQ();
      a = q * j_std * q.transpose();
    }

    double f = obj.value(a);
    int iters = 0;
    for (; iters < cfg.max_iters; ++iters) {
      if (f < 1e-26) break;
      Eigen::MatrixXd g = obj.gradient(a);
      double gnorm = g.norm();
      if (gnorm < 1e-14) break;
      double step = cfg.step_init / std::max(1.0, gnorm);
      bool improved = false;
      for (int t = 0; t < 40; ++t) {
        Eigen::MatrixXd cand = a - step * g;
        double fc = obj.value(cand);
        if (fc < f - 1e-4 * step * gnorm * gnorm) {
          a = cand;
          f = fc;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
    }

    double residual = obj.residual(a);
    double eig_omega = min_metric_eigenvalue(obj.e_omega, a);
    double eig_eta = min_metric_eigenvalue(obj.e_eta, a);
    outcome.trace.push_back({restart, residual, eig_omega, eig_eta, iters});

    if (!outcome.found && f < best_value) {
      best_value = f;
      best_a = a;
      outcome.best_residual = residual;
      outcome.min_eig_omega = eig_omega;
      outcome.min_eig_eta = eig_eta;
    }

    if (!outcome.found && residual <= cfg.tol_residual && eig_omega >= cfg.tol_posdef &&
        eig_eta >= cfg.tol_posdef) {
      // Candidate passes the float gates; promote to exact when possible.
      Eigen::MatrixXd m = -a.transpose();
      bool rationalized = true;
      linalg::RationalMatrix exact(dim, dim);
      for (int i = 0; i < dim && rationalized; ++i)
        for (int j = 0; j < dim && rationalized; ++j) {
          auto r = rationalize(m(i, j), 64, 1e-6);
          if (!r)
            rationalized = false;
          else
            exact(i, j) = *r;
        }
      bool exact_ok = false;
      std::optional<acs::AlmostComplexStructure> exact_j;
      if (rationalized) {
        try {
          acs::AlmostComplexStructure candidate(std::move(exact));
          if (acs::is_compatible(candidate, omega) && acs::is_compatible(candidate, eta)) {
            exact_ok = true;
            exact_j = std::move(candidate);
          }
        } catch (const std::invalid_argument&) {
          exact_ok = false;
        }
      }
      if (exact_ok || !outcome.exactness_required) {
        outcome.found = true;
        outcome.found_restart = restart;
        outcome.exact = exact_ok;
        outcome.exact_j = std::move(exact_j);
        outcome.best_residual = residual;
        outcome.min_eig_omega = eig_omega;
        outcome.min_eig_eta = eig_eta;
        best_a = a;
        best_value = f;
      }
    }
    if (outcome.found) break;
  }

  outcome.best_j.resize(dim * dim);
  Eigen::MatrixXd m = -best_a.transpose();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) outcome.best_j[i * dim + j] = m(i, j);
  return outcome;
}

}  // namespace solvsym::jsearch
