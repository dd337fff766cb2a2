#include "solvsym/confsym.hpp"

namespace solvsym::confsym {

namespace {

using acs::AlmostComplexStructure;
using algebra::GaussianForm;
using algebra::wedge;
using algebra::wedge_power;
using cohomology::Subspace;
using linalg::GaussianMatrix;

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform integer in [lo, hi], bias-free by rejection.
  long long uniform(long long lo, long long hi) {
    auto range = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<long long>(x % range);
  }
};

RationalForm zero_form(int degree) { return RationalForm(degree); }

}  // namespace

bool is_symplectic(const LieAlgebraModel& model, const RationalForm& omega) {
  if (omega.degree() != 2) throw std::invalid_argument("omega must have degree 2");
  return algebra::exterior_derivative(model, omega).is_zero() &&
         acs::is_nondegenerate(omega, model.dim());
}

bool is_lcs(const LieAlgebraModel& model, const LCSPair& pair) {
  if (pair.eta.degree() != 2) throw std::invalid_argument("eta must have degree 2");
  if (pair.theta.degree() != 1) throw std::invalid_argument("theta must have degree 1");
  if (!algebra::exterior_derivative(model, pair.theta).is_zero()) return false;
  if (!acs::is_nondegenerate(pair.eta, model.dim())) return false;
  return algebra::exterior_derivative(model, pair.eta) ==
         wedge(pair.theta, pair.eta, model.dim());
}

LeeClass lee_class(const LieAlgebraModel& model, const RationalForm& theta) {
  if (theta.degree() != 1) throw std::invalid_argument("theta must have degree 1");
  if (!algebra::exterior_derivative(model, theta).is_zero())
    throw std::invalid_argument("theta is not closed");
  cohomology::CohomologySpace<Rational> h1(model, 1);
  LeeClass cls;
  cls.coordinates = h1.class_coordinates(theta);
  for (const auto& c : cls.coordinates)
    if (c != 0) cls.is_zero = false;
  return cls;
}

bool is_gcs(const LieAlgebraModel& model, const LCSPair& pair) {
  return lee_class(model, pair.theta).is_zero;
}

LeeFormResult lee_form_from_eta(const LieAlgebraModel& model, const RationalForm& eta) {
  if (eta.degree() != 2) throw std::invalid_argument("eta must have degree 2");
  if (!acs::is_nondegenerate(eta, model.dim())) throw std::invalid_argument("eta is degenerate");
  auto mul = algebra::wedge_operator(eta, model.dim(), 1);
  RationalForm d_eta = algebra::exterior_derivative(model, eta);
  auto sol = linalg::solve(mul.mat, d_eta.coordinates(model.dim()));
  if (!sol) {
    // Best approximation in the coordinate least-squares sense, to name
    // the obstruction: residual = d(eta) - theta* ^ eta.
    auto mt = mul.mat.transpose();
    auto normal = mt * mul.mat;
    auto rhs = mt.apply(d_eta.coordinates(model.dim()));
    auto ls = linalg::solve(normal, rhs);
    RationalForm residual = d_eta;
    if (ls) {
      RationalForm theta_ls = RationalForm::from_coordinates(*ls, model.dim(), 1);
      residual = d_eta - wedge(theta_ls, eta, model.dim());
    }
    return {std::nullopt, "theta ^ eta = d(eta) has no solution", std::move(residual)};
  }
  RationalForm theta = RationalForm::from_coordinates(*sol, model.dim(), 1);
  RationalForm d_theta = algebra::exterior_derivative(model, theta);
  if (!d_theta.is_zero())
    return {std::nullopt, "the solution of theta ^ eta = d(eta) is not closed",
            std::move(d_theta)};
  return {std::move(theta), "", zero_form(3)};
}

HodgeSplit hodgesplit_impl(const LieAlgebraModel& model, const RationalForm& theta,
                           const hodge::Metric& metric) {
  auto grams = hodge::gram_family(metric, model.dim());
  auto d = algebra::d_family<Rational>(model);
  auto harmonic1 = hodge::harmonics(d, grams, 1, model.dim(), "d").space;
  auto exact1 = cohomology::image(d.at(0));
  auto v = theta.coordinates(model.dim());
  auto h = hodge::project_onto(v, harmonic1, grams[1]);
  auto e = hodge::project_onto(v, exact1, grams[1]);
  std::vector<Rational> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i] - h[i] - e[i];
  return {RationalForm::from_coordinates(h, model.dim(), 1),
          RationalForm::from_coordinates(e, model.dim(), 1),
          RationalForm::from_coordinates(c, model.dim(), 1)};
}

HodgeSplit hodge_split(const LieAlgebraModel& model, const RationalForm& theta,
                       const hodge::Metric& metric) {
  if (theta.degree() != 1) throw std::invalid_argument("expected a 1-form");
  return hodgesplit_impl(model, theta, metric);
}

LemmaReport lemma_report(const LieAlgebraModel& model, const RationalForm& omega,
                         const AlmostComplexStructure& j) {
  if (!algebra::exterior_derivative(model, omega).is_zero())
    throw std::invalid_argument("not almost-Kahler: omega is not closed");
  if (!acs::is_nondegenerate(omega, model.dim()))
    throw std::invalid_argument("not almost-Kahler: omega is degenerate");
  auto compat = acs::is_compatible(j, omega);
  if (!compat) throw std::invalid_argument("not almost-Kahler: J is not compatible with omega");

  const int dim = model.dim();
  const int n = model.half_dim();
  LemmaReport report;
  report.betti = cohomology::betti_numbers(model);

  auto hl = cohomology::hard_lefschetz(model, omega, 1);
  report.hl1 = hl.holds;
  report.lefschetz_rank = hl.rank;

  auto st = acs::induced_structure(model, omega, j);
  auto grams_r = hodge::gram_family(st.compatibility.metric, dim);
  std::vector<GaussianMatrix> grams;
  grams.reserve(grams_r.size());
  for (const auto& g : grams_r) grams.push_back(linalg::complexify(g));

  auto d_c = algebra::complexify(algebra::d_family(model));
  auto dc_real = acs::dc_family(model, j);
  auto dc_c = algebra::complexify(dc_real);
  auto h_d = hodge::harmonics(d_c, grams, 1, dim, "d").space;
  auto h_dc = hodge::harmonics(dc_c, grams, 1, dim, "dc").space;

  acs::BidegreeProjectors projectors(dim, j);
  auto decomp = acs::decompose_d(model, j, projectors);
  auto h_delbar = hodge::harmonics(decomp.delbar, grams, 1, dim, "delbar").space;
  auto h_mu = hodge::harmonics(decomp.mu, grams, 1, dim, "mu").space;

  auto h10 = intersection(h_d, projectors.pq_subspace(1, 0));
  auto h01 = intersection(h_d, projectors.pq_subspace(0, 1));
  auto pure_sum = sum(h10, h01);
  auto mixed = intersection(h_delbar, h_mu);

  report.dc_harmonics_equal = h_d == h_dc;
  report.pure_bidegree_sum = h_d == pure_sum;
  report.delbar_mu_intersection = h_d == mixed;
  report.conditions_agree = report.hl1 == report.dc_harmonics_equal &&
                            report.hl1 == report.pure_bidegree_sum &&
                            report.hl1 == report.delbar_mu_intersection;

  // Weil identity L^{n-1} = (1/(n-1)!) star J on 1-forms.
  auto star1 = hodge::hodge_star(st.compatibility.metric, st.volume, 1);
  auto lef = algebra::wedge_operator(wedge_power(omega, n - 1, dim), dim, 1);
  Rational inv_fact(1);
  for (int i = 2; i <= n - 1; ++i) inv_fact /= i;
  report.weil_identity = lef.mat == inv_fact * (star1.mat * j.form_action(1).mat);

  report.almost_kahler_identity = true;
  for (int k = 0; k <= dim; ++k) {
    auto lhs = hodge::laplacian(decomp.delbar, grams, k).mat +
               hodge::laplacian(decomp.mu, grams, k).mat;
    auto rhs = hodge::laplacian(decomp.del, grams, k).mat +
               hodge::laplacian(decomp.mubar, grams, k).mat;
    if (lhs != rhs) report.almost_kahler_identity = false;
  }

  report.containment_chain = mixed.contains_subspace(pure_sum) && h_d.contains_subspace(mixed);
  report.intersection_identity = intersection(h_d, h_dc) == pure_sum;

  auto lef_c = algebra::wedge_operator(
      algebra::complexify(wedge_power(omega, n - 1, dim)), dim, 1);
  GaussianMatrix restricted(lef_c.mat.rows(), mixed.dim());
  for (std::size_t c = 0; c < mixed.dim(); ++c)
    restricted.set_col(c, lef_c.mat.apply(mixed.basis().row(c)));
  report.sl2_injective = linalg::bareiss_rank(restricted) == mixed.dim();

  return report;
}

std::string to_string(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::ThetaZero:
      return "ThetaZero";
    case TheoremVerdict::HypothesisFailed:
      return "HypothesisFailed";
    case TheoremVerdict::ContradictionCertificate:
      return "ContradictionCertificate";
  }
  return "unknown";
}

TheoremReport theorem1_check(const LieAlgebraModel& model, const RationalForm& omega,
                             const LCSPair& pair, const AlmostComplexStructure& j) {
  if (omega.degree() != 2 || pair.eta.degree() != 2 || pair.theta.degree() != 1)
    throw std::invalid_argument("expected omega, eta of degree 2 and theta of degree 1");

  const int dim = model.dim();
  const int n = model.half_dim();
  TheoremReport report;

  report.unimodular = algebra::is_unimodular(model);
  report.hl1 = is_symplectic(model, omega) && cohomology::hard_lefschetz(model, omega, 1).holds;

  bool eta_nondegenerate = acs::is_nondegenerate(pair.eta, dim);
  report.j_compat_omega =
      acs::is_nondegenerate(omega, dim) && acs::is_compatible(j, omega).has_value();
  report.j_compat_eta = eta_nondegenerate && acs::is_compatible(j, pair.eta).has_value();
  report.lcs = is_lcs(model, pair);

  // Hodge splitting of theta in the metric of (omega, J); a no-op for
  // closed invariant theta (im d^0 = 0), asserted rather than assumed.
  if (report.j_compat_omega) {
    auto st = acs::induced_structure(model, omega, j);
    auto split = hodgesplit_impl(model, pair.theta, st.compatibility.metric);
    report.theta_already_harmonic =
        split.exact_part.is_zero() && split.harmonic == pair.theta;
  }

  // Identity flags: exact form arithmetic, computable from (J, eta, theta).
  auto jf1 = j.form_action(1);
  RationalForm j_theta = jf1.apply(pair.theta, dim);
  report.dc_theta_zero = acs::dc_operator(model, j, 1).apply(pair.theta, dim).is_zero();

  RationalForm dc_eta = acs::dc_operator(model, j, 2).apply(pair.eta, dim);
  report.dc_eta_identity =
      dc_eta == -Rational(1) * wedge(j_theta, pair.eta, dim);

  RationalForm eta_pow = wedge_power(pair.eta, n - 1, dim);
  RationalForm ddc_eta = algebra::exterior_derivative(
      model, acs::dc_operator(model, j, 2 * n - 2).apply(eta_pow, dim));
  Rational minus_nsq = -Rational(n - 1) * Rational(n - 1);
  RationalForm rhs = minus_nsq * wedge(wedge(pair.theta, j_theta, dim), eta_pow, dim);
  report.ddc_eta_identity = ddc_eta == rhs;
  report.ddc_vanishes = ddc_eta.is_zero();

  // Positivity coefficient: theta ^ (J^{-1} theta) ^ eta^{n-1} is a
  // nonnegative multiple of the coframe volume when J is compatible with
  // eta, vanishing exactly at theta = 0.
  RationalForm jinv_theta = j.inverse_form_action(1).apply(pair.theta, dim);
  RationalForm positivity = wedge(wedge(pair.theta, jinv_theta, dim), eta_pow, dim);
  algebra::MultiIndex top;
  for (int i = 1; i <= dim; ++i) top.push_back(i);
  report.positivity_coefficient = positivity.coefficient(top);
  report.theta_zero = pair.theta.is_zero();
  report.positivity_ok = report.theta_zero ? report.positivity_coefficient == 0
                                           : report.positivity_coefficient > 0;

  // Verdict, honoring the evaluation order of the hypotheses.
  if (!report.unimodular)
    report.failed_hypothesis = "unimodular";
  else if (!report.hl1)
    report.failed_hypothesis = "HL1";
  else if (!report.j_compat_omega)
    report.failed_hypothesis = "J-compat-omega";
  else if (!report.j_compat_eta)
    report.failed_hypothesis = "J-compat-eta";
  else if (!report.lcs)
    report.failed_hypothesis = "lcs";

  if (!report.failed_hypothesis.empty()) {
    report.verdict = TheoremVerdict::HypothesisFailed;
    return report;
  }

  bool identities_hold = report.theta_already_harmonic.value_or(false) &&
                         report.dc_theta_zero && report.dc_eta_identity &&
                         report.ddc_eta_identity && report.ddc_vanishes && report.positivity_ok;
  if (report.theta_zero && identities_hold) {
    report.verdict = TheoremVerdict::ThetaZero;
  } else {
    // All hypotheses passed yet theta != 0 (or an exact identity broke):
    // this refutes the run's arithmetic and must never happen.
    report.verdict = TheoremVerdict::ContradictionCertificate;
  }
  return report;
}

SurveyResult hl_survey(const LieAlgebraModel& model, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  SurveyResult result;
  result.samples = samples;

  auto closed2 = cohomology::kernel(algebra::d_operator(model, 2));
  SplitMix64 rng(seed);
  const std::size_t max_consecutive_rejections = 1000;
  std::size_t consecutive = 0;

  for (std::size_t s = 0; s < samples;) {
    RationalForm omega(2);
    for (std::size_t i = 0; i < closed2.dim(); ++i) {
      long long c = rng.uniform(-5, 5);
      if (c == 0) continue;
      omega = omega + Rational(c) * RationalForm::from_coordinates(closed2.basis().row(i),
                                                                   model.dim(), 2);
    }
    if (!acs::is_nondegenerate(omega, model.dim())) {
      ++result.rejected;
      if (++consecutive >= max_consecutive_rejections)
        throw std::runtime_error(
            "no symplectic form found in ker d^2 after " + std::to_string(consecutive) +
            " consecutive degenerate samples (b2 = " +
            std::to_string(cohomology::CohomologySpace<Rational>(model, 2).dim()) +
            "); the closed 2-forms of this model may all be degenerate");
      continue;
    }
    consecutive = 0;
    ++s;
    bool holds = cohomology::hard_lefschetz(model, omega, 1).holds;
    if (holds) {
      ++result.hl_true;
      if (!result.first_hl_true) result.first_hl_true = omega;
    } else if (!result.first_hl_false) {
      result.first_hl_false = omega;
    }
  }
  result.fraction = static_cast<double>(result.hl_true) / static_cast<double>(result.samples);
  return result;
}

}  // namespace solvsym::confsym
