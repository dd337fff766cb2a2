#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvsym/acs.hpp"
#include "solvsym/cohomology.hpp"
#include "solvsym/hodge.hpp"

namespace solvsym::confsym {

using algebra::LieAlgebraModel;
using algebra::RationalForm;

/// A locally conformally symplectic candidate: d(theta) = 0, eta^n != 0,
/// d(eta) = theta ^ eta. The predicates below check the three conditions
/// exactly; the pair itself is plain data.
struct LCSPair {
  RationalForm eta;
  RationalForm theta;
};

bool is_symplectic(const LieAlgebraModel& model, const RationalForm& omega);

bool is_lcs(const LieAlgebraModel& model, const LCSPair& pair);

struct LeeClass {
  std::vector<Rational> coordinates;  // in the canonical H^1 representative basis
  bool is_zero = true;
};

/// Class of a closed 1-form in H^1. Throws if theta is not closed.
LeeClass lee_class(const LieAlgebraModel& model, const RationalForm& theta);

/// Globally conformally symplectic: the Lee class vanishes (on the
/// invariant complex, exactly when theta = 0).
bool is_gcs(const LieAlgebraModel& model, const LCSPair& pair);

/// Recovers theta from eta alone by solving theta ^ eta = d(eta); unique
/// for nondegenerate eta. On failure the residual names what broke.
struct LeeFormResult {
  std::optional<RationalForm> theta;
  std::string failure;   // empty on success
  RationalForm residual;  // zero form on success
};

LeeFormResult lee_form_from_eta(const LieAlgebraModel& model, const RationalForm& eta);

/// Orthogonal Hodge splitting of a 1-form: harmonic + exact + coexact.
/// On the invariant complex im d^0 = 0, so closed forms are their own
/// harmonic part.
struct HodgeSplit {
  RationalForm harmonic;
  RationalForm exact_part;
  RationalForm coexact_part;
};

HodgeSplit hodge_split(const LieAlgebraModel& model, const RationalForm& theta,
                       const hodge::Metric& metric);

/// The four equivalent degree-1 conditions of an almost-Kahler structure,
/// plus the identity checks feeding their proof. All booleans are exact.
struct LemmaReport {
  std::vector<std::size_t> betti;
  std::size_t lefschetz_rank = 0;

  bool hl1 = false;                     // condition (1)
  bool dc_harmonics_equal = false;      // condition (2)
  bool pure_bidegree_sum = false;       // condition (3)
  bool delbar_mu_intersection = false;  // condition (4)
  bool conditions_agree = false;

  bool weil_identity = false;
  bool almost_kahler_identity = false;
  bool containment_chain = false;
  bool intersection_identity = false;
  bool sl2_injective = false;

  bool all_conditions_hold() const { return hl1 && dc_harmonics_equal && pure_bidegree_sum && delbar_mu_intersection; }
};

/// Requires an almost-Kahler pair: d(omega) = 0, omega^n != 0, J
/// compatible with omega; reports which precondition failed otherwise.
LemmaReport lemma_report(const LieAlgebraModel& model, const RationalForm& omega,
                         const acs::AlmostComplexStructure& j);

enum class TheoremVerdict { ThetaZero, HypothesisFailed, ContradictionCertificate };

std::string to_string(TheoremVerdict v);

/// Full conclusion-by-computation run of the "hard Lefschetz + shared
/// compatible J forces a global conformal rescaling" argument.
struct TheoremReport {
  // Hypothesis flags, in evaluation order.
  bool unimodular = false;
  bool hl1 = false;
  bool j_compat_omega = false;
  bool j_compat_eta = false;
  bool lcs = false;

  // Identity flags (exact checks of the proof's displayed identities).
  std::optional<bool> theta_already_harmonic;  // needs the (omega, J) metric
  bool dc_theta_zero = false;
  bool dc_eta_identity = false;    // d^c eta = -J theta ^ eta
  bool ddc_eta_identity = false;   // d d^c eta^{n-1} = -(n-1)^2 theta ^ J theta ^ eta^{n-1}
  bool ddc_vanishes = false;       // exactness-vanishing of the top form

  /// Top coefficient of theta ^ (J^{-1} theta) ^ eta^{n-1}: nonnegative,
  /// zero exactly when theta = 0 (given J compatible with eta).
  Rational positivity_coefficient = Rational(0);
  bool positivity_ok = false;

  bool theta_zero = false;
  TheoremVerdict verdict = TheoremVerdict::HypothesisFailed;
  std::string failed_hypothesis;  // one of: unimodular, HL1, J-compat-omega, J-compat-eta, lcs
};

TheoremReport theorem1_check(const LieAlgebraModel& model, const RationalForm& omega,
                             const LCSPair& pair, const acs::AlmostComplexStructure& j);

/// Randomized survey of hard Lefschetz in degree 1 over closed 2-forms:
/// samples integer coefficients in [-5, 5] on the canonical ker d^2 basis,
/// rejecting degenerate draws.
struct SurveyResult {
  std::size_t samples = 0;
  std::size_t hl_true = 0;
  std::size_t rejected = 0;
  double fraction = 0.0;
  std::optional<RationalForm> first_hl_false;
  std::optional<RationalForm> first_hl_true;
};

SurveyResult hl_survey(const LieAlgebraModel& model, std::size_t samples, std::uint64_t seed);

}  // namespace solvsym::confsym
