#include <doctest.h>

#include "solvsym/catalog.hpp"
#include "solvsym/confsym.hpp"
#include "test_util.hpp"

using namespace solvsym;
using namespace solvsym::confsym;
using testutil::basis;

namespace {

acs::AlmostComplexStructure catalog_j(const std::string& name) {
  return acs::AlmostComplexStructure(catalog::j_matrix(name));
}

}  // namespace

TEST_CASE("is_symplectic") {
  const auto& paper = catalog::model("paper_example");
  CHECK(is_symplectic(paper, catalog::form("omega")));
  CHECK(!is_symplectic(paper, basis({1, 2})));        // degenerate
  CHECK(!is_symplectic(paper, catalog::form("eta")));  // not closed on paper_example
  CHECK(is_symplectic(catalog::model("kodaira_thurston"), catalog::form("kt_omega")));
}

TEST_CASE("is_lcs on the catalog pair") {
  const auto& paper = catalog::model("paper_example");
  CHECK(is_lcs(paper, {catalog::form("eta"), catalog::form("theta")}));
  // Wrong Lee sign: d(eta) = e134 but (+e3) ^ eta = -e134.
  CHECK(!is_lcs(paper, {catalog::form("eta"), basis({3})}));
  // A symplectic form is LCS with theta = 0.
  CHECK(is_lcs(paper, {catalog::form("omega"), algebra::RationalForm(1)}));
  CHECK(is_lcs(catalog::model("torus4"), {catalog::form("omega"), algebra::RationalForm(1)}));
}

TEST_CASE("conformal-class invariance at constant scale") {
  const auto& paper = catalog::model("paper_example");
  for (long long c : {2, -3, 7}) {
    CHECK(is_lcs(paper, {Rational(c) * catalog::form("eta"), catalog::form("theta")}));
    auto lee = lee_form_from_eta(paper, Rational(c) * catalog::form("eta"));
    REQUIRE(lee.theta.has_value());
    CHECK(*lee.theta == catalog::form("theta"));
  }
}

TEST_CASE("lee_class coordinates and is_gcs") {
  const auto& paper = catalog::model("paper_example");
  auto cls = lee_class(paper, catalog::form("theta"));
  CHECK(cls.coordinates == std::vector<Rational>{Rational(-1), Rational(0)});
  CHECK(!cls.is_zero);
  CHECK(!is_gcs(paper, {catalog::form("eta"), catalog::form("theta")}));

  auto zero = lee_class(paper, algebra::RationalForm(1));
  CHECK(zero.is_zero);
  CHECK(is_gcs(paper, {catalog::form("omega"), algebra::RationalForm(1)}));

  auto e4cls = lee_class(paper, basis({4}));
  CHECK(e4cls.coordinates == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(!e4cls.is_zero);

  CHECK_THROWS_AS(lee_class(paper, basis({1})), std::invalid_argument);  // de1 != 0
}

TEST_CASE("lee_form_from_eta recovers theta") {
  const auto& paper = catalog::model("paper_example");
  auto r = lee_form_from_eta(paper, catalog::form("eta"));
  REQUIRE(r.theta.has_value());
  CHECK(*r.theta == catalog::form("theta"));
  CHECK(r.failure.empty());

  auto sympl = lee_form_from_eta(paper, catalog::form("omega"));
  REQUIRE(sympl.theta.has_value());
  CHECK(sympl.theta->is_zero());

  // On Kodaira-Thurston e12 + e34 is not closed but is LCS with Lee
  // form -e3: d(e34) = -e123 = (-e3) ^ (e12 + e34).
  const auto& kt = catalog::model("kodaira_thurston");
  auto kt_lee = lee_form_from_eta(kt, catalog::form("omega"));
  REQUIRE(kt_lee.theta.has_value());
  CHECK(*kt_lee.theta == catalog::form("theta"));
  CHECK(is_lcs(kt, {catalog::form("omega"), *kt_lee.theta}));

  CHECK_THROWS_AS(lee_form_from_eta(paper, basis({1, 2})), std::invalid_argument);
}

TEST_CASE("lee_form_from_eta reports an obstruction when none exists") {
  // On the torus every 2-form is closed, so eta = e14 + e23 gives
  // d(eta) = 0 with unique solution theta = 0; take a non-closed eta on
  // Kodaira-Thurston instead: eta = e13 + e24 is nondegenerate there and
  // d(eta) = e13^... is not a multiple of eta.
  const auto& kt = catalog::model("kodaira_thurston");
  auto eta = basis({1, 3}) + basis({2, 4});
  auto r = lee_form_from_eta(kt, eta);
  if (!r.theta) {
    CHECK(!r.failure.empty());
    CHECK(!r.residual.is_zero());
  } else {
    // If a Lee form exists it must satisfy the defining equation.
    CHECK(is_lcs(kt, {eta, *r.theta}));
  }
}

TEST_CASE("hodge_split of closed and non-closed forms") {
  const auto& paper = catalog::model("paper_example");
  hodge::Metric id = hodge::Metric::identity(4);

  auto split = hodge_split(paper, catalog::form("theta"), id);
  CHECK(split.harmonic == catalog::form("theta"));
  CHECK(split.exact_part.is_zero());
  CHECK(split.coexact_part.is_zero());

  auto split_t4 = hodge_split(catalog::model("torus4"), basis({1}), id);
  CHECK(split_t4.harmonic == basis({1}));

  // e1 is not closed on paper_example: nonzero coexact part; the parts
  // reconstruct and are orthogonal.
  auto split_e1 = hodge_split(paper, basis({1}), id);
  CHECK(!split_e1.coexact_part.is_zero());
  CHECK(split_e1.harmonic + split_e1.exact_part + split_e1.coexact_part == basis({1}));
  auto g1 = hodge::gram(id, 1);
  CHECK(hodge::inner(split_e1.harmonic.coordinates(4), split_e1.coexact_part.coordinates(4),
                     g1) == Rational(0));
  // d is exact on the invariant complex only from degree 1 up: im d^0 = 0.
  CHECK(split_e1.exact_part.is_zero());
}

TEST_CASE("lemma_report on the torus: all four conditions hold") {
  auto report = lemma_report(catalog::model("torus4"), catalog::form("t4_omega"), catalog_j("j0"));
  CHECK(report.hl1);
  CHECK(report.dc_harmonics_equal);
  CHECK(report.pure_bidegree_sum);
  CHECK(report.delbar_mu_intersection);
  CHECK(report.conditions_agree);
  CHECK(report.all_conditions_hold());
  CHECK(report.weil_identity);
  CHECK(report.almost_kahler_identity);
  CHECK(report.containment_chain);
  CHECK(report.intersection_identity);
  CHECK(report.sl2_injective);
}

TEST_CASE("lemma_report on paper_example: all four conditions hold") {
  auto report = lemma_report(catalog::model("paper_example"), catalog::form("omega"),
                             catalog_j("j0"));
  CHECK(report.all_conditions_hold());
  CHECK(report.conditions_agree);
  CHECK(report.lefschetz_rank == 2);
  CHECK(report.weil_identity);
  CHECK(report.almost_kahler_identity);
}

TEST_CASE("lemma_report on Kodaira-Thurston: all four conditions fail together") {
  auto report = lemma_report(catalog::model("kodaira_thurston"), catalog::form("kt_omega"),
                             catalog_j("j_kt"));
  CHECK(!report.hl1);
  CHECK(!report.dc_harmonics_equal);
  CHECK(!report.pure_bidegree_sum);
  CHECK(!report.delbar_mu_intersection);
  CHECK(report.conditions_agree);
  CHECK(report.weil_identity);
  CHECK(report.almost_kahler_identity);
  CHECK(report.containment_chain);
  CHECK(report.intersection_identity);
  CHECK(report.sl2_injective);
}

TEST_CASE("lemma_report rejects non-almost-Kahler input") {
  const auto& paper = catalog::model("paper_example");
  // eta is not closed on paper_example.
  CHECK_THROWS_AS(lemma_report(paper, catalog::form("eta"), catalog_j("j_eta")),
                  std::invalid_argument);
  // j_eta is not compatible with omega.
  CHECK_THROWS_AS(lemma_report(paper, catalog::form("omega"), catalog_j("j_eta")),
                  std::invalid_argument);
}

TEST_CASE("theorem1_check: symplectic torus case returns ThetaZero") {
  const auto& torus = catalog::model("torus4");
  LCSPair pair{catalog::form("t4_omega"), algebra::RationalForm(1)};
  auto report = theorem1_check(torus, catalog::form("t4_omega"), pair, catalog_j("j0"));
  CHECK(report.verdict == TheoremVerdict::ThetaZero);
  CHECK(report.unimodular);
  CHECK(report.hl1);
  CHECK(report.j_compat_omega);
  CHECK(report.j_compat_eta);
  CHECK(report.lcs);
  CHECK(report.theta_already_harmonic.value_or(false));
  CHECK(report.dc_theta_zero);
  CHECK(report.dc_eta_identity);
  CHECK(report.ddc_eta_identity);
  CHECK(report.ddc_vanishes);
  CHECK(report.positivity_coefficient == Rational(0));
  CHECK(report.positivity_ok);
}

TEST_CASE("theorem1_check: paper_example with J_eta fails J-compat-omega") {
  const auto& paper = catalog::model("paper_example");
  LCSPair pair{catalog::form("eta"), catalog::form("theta")};
  auto report = theorem1_check(paper, catalog::form("omega"), pair, catalog_j("j_eta"));
  CHECK(report.verdict == TheoremVerdict::HypothesisFailed);
  CHECK(report.failed_hypothesis == "J-compat-omega");
  CHECK(report.unimodular);
  CHECK(report.hl1);
  CHECK(!report.j_compat_omega);
  CHECK(report.j_compat_eta);
  CHECK(report.lcs);
  // The positivity coefficient is the exact witness: +1 for theta = -e3.
  CHECK(report.positivity_coefficient == Rational(1));
  CHECK(report.positivity_ok);
  // The Lemma's conclusion d^c theta = 0 genuinely fails here.
  CHECK(!report.dc_theta_zero);
  CHECK(report.ddc_vanishes);
}

TEST_CASE("theorem1_check: Kodaira-Thurston fails HL1") {
  const auto& kt = catalog::model("kodaira_thurston");
  auto lee = lee_form_from_eta(kt, catalog::form("kt_omega"));
  LCSPair pair{catalog::form("kt_omega"), lee.theta.value_or(algebra::RationalForm(1))};
  auto report = theorem1_check(kt, catalog::form("kt_omega"), pair, catalog_j("j_kt"));
  CHECK(report.verdict == TheoremVerdict::HypothesisFailed);
  CHECK(report.failed_hypothesis == "HL1");
}

TEST_CASE("theorem1 soundness sweep over catalog combinations") {
  // No run may pass every hypothesis with theta != 0.
  std::vector<std::pair<std::string, LCSPair>> pairs = {
      {"omega-symplectic", {catalog::form("omega"), algebra::RationalForm(1)}},
      {"eta-lcs", {catalog::form("eta"), catalog::form("theta")}},
      {"kt-omega-symplectic", {catalog::form("kt_omega"), algebra::RationalForm(1)}},
  };
  for (const auto& mname : catalog::model_names()) {
    const auto& model = catalog::model(mname);
    for (const char* jname : {"j0", "j_eta", "j_kt"}) {
      for (const auto& [pname, pair] : pairs) {
        for (const char* oname : {"omega", "kt_omega"}) {
          auto report =
              theorem1_check(model, catalog::form(oname), pair, catalog_j(jname));
          bool all_hypotheses = report.unimodular && report.hl1 && report.j_compat_omega &&
                                report.j_compat_eta && report.lcs;
          CHECK(report.positivity_coefficient >= 0);
          if (all_hypotheses) {
            CHECK(report.theta_zero);
            CHECK(report.verdict == TheoremVerdict::ThetaZero);
          } else {
            CHECK(report.verdict == TheoremVerdict::HypothesisFailed);
          }
          CHECK(report.verdict != TheoremVerdict::ContradictionCertificate);
        }
      }
    }
  }
}

TEST_CASE("hl_survey fractions on the catalog") {
  auto paper = hl_survey(catalog::model("paper_example"), 60, 1);
  CHECK(paper.fraction == 1.0);
  CHECK(paper.hl_true == 60);
  CHECK(!paper.first_hl_false.has_value());

  auto torus = hl_survey(catalog::model("torus4"), 60, 1);
  CHECK(torus.fraction == 1.0);

  auto kt = hl_survey(catalog::model("kodaira_thurston"), 60, 1);
  CHECK(kt.fraction == 0.0);
  CHECK(kt.first_hl_false.has_value());
  CHECK(!kt.first_hl_true.has_value());
}

TEST_CASE("hl_survey is deterministic for a fixed seed") {
  auto a = hl_survey(catalog::model("paper_example"), 25, 7);
  auto b = hl_survey(catalog::model("paper_example"), 25, 7);
  CHECK(a.hl_true == b.hl_true);
  CHECK(a.rejected == b.rejected);
  auto c = hl_survey(catalog::model("paper_example"), 25, 8);
  CHECK((a.rejected != c.rejected || a.hl_true == c.hl_true));  // streams differ, verdicts agree
}
