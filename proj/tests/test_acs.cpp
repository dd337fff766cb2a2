#include <doctest.h>

#include "solvsym/acs.hpp"
#include "solvsym/catalog.hpp"
#include "test_util.hpp"

using namespace solvsym;
using namespace solvsym::acs;
using testutil::basis;
using testutil::Rng;

namespace {

AlmostComplexStructure catalog_j(const std::string& name) {
  return AlmostComplexStructure(catalog::j_matrix(name));
}

linalg::RationalMatrix flipped_block_j() {
  // j0 with the sign of the e3/e4 block reversed.
  linalg::RationalMatrix m(4, 4);
  m(1, 0) = 1;
  m(0, 1) = -1;
  m(3, 2) = -1;
  m(2, 3) = 1;
  return m;
}

struct AlmostKahlerTriple {
  std::string model;
  std::string omega;
  std::string j;
};

const AlmostKahlerTriple kTriples[] = {
    {"torus4", "t4_omega", "j0"},
    {"paper_example", "omega", "j0"},
    {"kodaira_thurston", "kt_omega", "j_kt"},
};

}  // namespace

TEST_CASE("almost complex structure validation") {
  CHECK_NOTHROW(catalog_j("j0"));
  CHECK_NOTHROW(catalog_j("j_eta"));
  CHECK_THROWS_AS(AlmostComplexStructure(linalg::RationalMatrix::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("compatibility of the standard pairs") {
  auto j0 = catalog_j("j0");
  auto compat = is_compatible(j0, catalog::form("omega"));
  REQUIRE(compat.has_value());
  CHECK(compat->frame_metric == linalg::RationalMatrix::identity(4));
  CHECK(compat->metric.matrix() == linalg::RationalMatrix::identity(4));

  auto j_eta = catalog_j("j_eta");
  auto compat_eta = is_compatible(j_eta, catalog::form("eta"));
  REQUIRE(compat_eta.has_value());
  CHECK(compat_eta->frame_metric == linalg::RationalMatrix::identity(4));

  // The flipped block makes the induced bilinear form indefinite.
  CHECK(!is_compatible(AlmostComplexStructure(flipped_block_j()), catalog::form("omega")));

  // j_eta is not compatible with omega: the Example-1 obstruction witness.
  CHECK(!is_compatible(j_eta, catalog::form("omega")));

  CHECK_THROWS_AS(is_compatible(j0, basis({1, 2})), std::invalid_argument);
}

TEST_CASE("compatibility with a scaled form induces a scaled metric") {
  auto j0 = catalog_j("j0");
  auto tau = Rational(2) * basis({1, 2}) + basis({3, 4});
  auto compat = is_compatible(j0, tau);
  REQUIRE(compat.has_value());
  linalg::RationalMatrix expected(4, 4);
  expected(0, 0) = 2;
  expected(1, 1) = 2;
  expected(2, 2) = 1;
  expected(3, 3) = 1;
  CHECK(compat->frame_metric == expected);
  // Coframe inner products are the inverse.
  CHECK(compat->metric.matrix() == *linalg::inverse(expected));
}

TEST_CASE("induced almost-Kahler structure carries omega^n/n! as volume") {
  const auto& paper = catalog::model("paper_example");
  auto st = induced_structure(paper, catalog::form("omega"), catalog_j("j0"));
  CHECK(st.volume.coefficient() == Rational(1));
  CHECK(st.volume.form() == basis({1, 2, 3, 4}));

  CHECK_THROWS_AS(induced_structure(paper, catalog::form("omega"), catalog_j("j_eta")),
                  std::invalid_argument);
}

TEST_CASE("J extension is orthogonal for the induced gram") {
  Rng rng(31);
  const auto& paper = catalog::model("paper_example");
  auto j_eta = catalog_j("j_eta");
  auto st = induced_structure(paper, catalog::form("eta"), j_eta);
  auto grams = hodge::gram_family(st.compatibility.metric, 4);
  for (int k = 0; k <= 4; ++k) {
    auto jf = j_eta.form_action(k);
    for (int trial = 0; trial < 15; ++trial) {
      auto a = testutil::random_form(rng, 4, k).coordinates(4);
      auto b = testutil::random_form(rng, 4, k).coordinates(4);
      CHECK(hodge::inner(jf.mat.apply(a), jf.mat.apply(b), grams[k]) ==
            hodge::inner(a, b, grams[k]));
    }
  }
}

TEST_CASE("canonical compatible J via polar decomposition") {
  hodge::Metric id = hodge::Metric::identity(4);

  auto r1 = canonical_compatible_j(catalog::form("omega"), id, 4);
  REQUIRE(r1.exact);
  CHECK(r1.exact_j->matrix() == catalog::j_matrix("j0"));
  CHECK(r1.residual < 1e-9);
  CHECK(r1.min_eigenvalue > 0.9);

  // The polar part discards the conformal factor 2.
  auto tau2 = Rational(2) * basis({1, 2}) + basis({3, 4});
  auto r2 = canonical_compatible_j(tau2, id, 4);
  REQUIRE(r2.exact);
  CHECK(r2.exact_j->matrix() == catalog::j_matrix("j0"));

  auto r3 = canonical_compatible_j(catalog::form("eta"), id, 4);
  REQUIRE(r3.exact);
  CHECK(r3.exact_j->matrix() == catalog::j_matrix("j_eta"));
  CHECK(is_compatible(*r3.exact_j, catalog::form("eta")).has_value());

  CHECK_THROWS_AS(canonical_compatible_j(basis({1, 2}), id, 4), std::invalid_argument);
}

TEST_CASE("d^c vanishes on the torus") {
  const auto& torus = catalog::model("torus4");
  auto j0 = catalog_j("j0");
  for (int k = 0; k <= 4; ++k) CHECK(dc_operator(torus, j0, k).mat.is_zero());
}

TEST_CASE("d^c of paper_example with j_eta") {
  const auto& paper = catalog::model("paper_example");
  auto dc = dc_operator(paper, catalog_j("j_eta"), 1);
  CHECK(dc.apply(basis({1}), 4).is_zero());
  CHECK(dc.apply(basis({2}), 4).is_zero());
  CHECK(dc.apply(basis({3}), 4) == -Rational(1) * basis({2, 3}));
  CHECK(dc.apply(basis({4}), 4) == basis({2, 4}));
}

TEST_CASE("bidegree projectors resolve the identity") {
  for (const char* jname : {"j0", "j_eta"}) {
    auto j = catalog_j(jname);
    BidegreeProjectors proj(4, j);
    for (int k = 0; k <= 4; ++k) {
      std::size_t total = algebra::binomial(4, k);
      linalg::GaussianMatrix sum(total, total);
      for (int p = 0; p <= k; ++p) {
        const auto& pk = proj.projector(p, k - p);
        CHECK(pk * pk == pk);
        for (int p2 = 0; p2 <= k; ++p2)
          if (p2 != p) CHECK((pk * proj.projector(p2, k - p2)).is_zero());
        sum = sum + pk;
      }
      CHECK(sum == linalg::GaussianMatrix::identity(total));
    }
    // Lambda^{1,0} and Lambda^{0,1} have dimension n = 2.
    CHECK(proj.pq_subspace(1, 0).dim() == 2);
    CHECK(proj.pq_subspace(0, 1).dim() == 2);
    CHECK(proj.pq_subspace(1, 1).dim() == 4);
  }
}

TEST_CASE("bidegree decomposition sums to d and is conjugation-symmetric") {
  for (const auto& mname : catalog::model_names()) {
    const auto& model = catalog::model(mname);
    for (const char* jname : {"j0", "j_eta", "j_kt"}) {
      auto j = catalog_j(jname);
      auto decomp = decompose_d(model, j);  // the sum check runs inside
      for (int k = 0; k <= model.dim(); ++k) {
        CHECK(decomp.mubar.at(k).mat == decomp.mu.at(k).mat.conjugate());
        CHECK(decomp.delbar.at(k).mat == decomp.del.at(k).mat.conjugate());
      }
    }
  }
}

TEST_CASE("all four bidegree components vanish on the torus") {
  auto decomp = decompose_d(catalog::model("torus4"), catalog_j("j0"));
  for (int k = 0; k <= 4; ++k) {
    CHECK(decomp.mubar.at(k).mat.is_zero());
    CHECK(decomp.delbar.at(k).mat.is_zero());
    CHECK(decomp.del.at(k).mat.is_zero());
    CHECK(decomp.mu.at(k).mat.is_zero());
  }
}

TEST_CASE("dual-path d^c equality on every catalog model and J") {
  for (const auto& mname : catalog::model_names()) {
    const auto& model = catalog::model(mname);
    for (const char* jname : {"j0", "j_eta", "j_kt"}) {
      auto j = catalog_j(jname);
      auto via_conjugation = dc_family(model, j);
      auto via_components = dc_from_components(decompose_d(model, j));
      for (int k = 0; k <= model.dim(); ++k)
        CHECK(via_conjugation.at(k).mat == via_components.at(k).mat);
    }
  }
}

TEST_CASE("Weil identity as an exact operator identity on one-forms") {
  for (const auto& triple : kTriples) {
    const auto& model = catalog::model(triple.model);
    auto j = catalog_j(triple.j);
    auto st = induced_structure(model, catalog::form(triple.omega), j);
    int n = model.half_dim();

    auto star1 = hodge_star(st.compatibility.metric, st.volume, 1);
    auto lef = algebra::wedge_operator(
        algebra::wedge_power(catalog::form(triple.omega), n - 1, model.dim()), model.dim(), 1);
    Rational inv_fact(1);
    for (int i = 2; i <= n - 1; ++i) inv_fact /= i;
    CHECK(lef.mat == inv_fact * (star1.mat * j.form_action(1).mat));
  }
}

TEST_CASE("almost-Kahler identity: exact Laplacian matrix equality") {
  for (const auto& triple : kTriples) {
    const auto& model = catalog::model(triple.model);
    auto j = catalog_j(triple.j);
    auto st = induced_structure(model, catalog::form(triple.omega), j);

    auto grams_r = hodge::gram_family(st.compatibility.metric, model.dim());
    std::vector<linalg::GaussianMatrix> grams;
    for (const auto& g : grams_r) grams.push_back(linalg::complexify(g));

    auto decomp = decompose_d(model, j);
    for (int k = 0; k <= model.dim(); ++k) {
      auto lhs = hodge::laplacian(decomp.delbar, grams, k).mat +
                 hodge::laplacian(decomp.mu, grams, k).mat;
      auto rhs = hodge::laplacian(decomp.del, grams, k).mat +
                 hodge::laplacian(decomp.mubar, grams, k).mat;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("degree-1 harmonic interactions of an almost-Kahler structure") {
  for (const auto& triple : kTriples) {
    const auto& model = catalog::model(triple.model);
    auto j = catalog_j(triple.j);
    auto st = induced_structure(model, catalog::form(triple.omega), j);
    int dim = model.dim();
    int n = model.half_dim();

    auto grams_r = hodge::gram_family(st.compatibility.metric, dim);
    std::vector<linalg::GaussianMatrix> grams;
    for (const auto& g : grams_r) grams.push_back(linalg::complexify(g));

    auto d_c = algebra::complexify(algebra::d_family(model));
    auto dc_c = algebra::complexify(dc_family(model, j));
    auto h_d = hodge::harmonics(d_c, grams, 1, dim, "d").space;
    auto h_dc = hodge::harmonics(dc_c, grams, 1, dim, "dc").space;

    auto decomp = decompose_d(model, j);
    auto h_delbar = hodge::harmonics(decomp.delbar, grams, 1, dim, "delbar").space;
    auto h_mu = hodge::harmonics(decomp.mu, grams, 1, dim, "mu").space;

    BidegreeProjectors proj(dim, j);
    auto h10 = intersection(h_d, proj.pq_subspace(1, 0));
    auto h01 = intersection(h_d, proj.pq_subspace(0, 1));
    auto pure_sum = sum(h10, h01);
    auto mixed = intersection(h_delbar, h_mu);

    // Intersection identity in degree 1.
    CHECK(intersection(h_d, h_dc) == pure_sum);

    // Containment chain; the last step is the almost-Kahler identity.
    CHECK(mixed.contains_subspace(pure_sum));
    CHECK(h_d.contains_subspace(mixed));

    // L^{n-1} is injective on the sl(2)-invariant part.
    auto lef = algebra::wedge_operator(
        algebra::complexify(
            algebra::wedge_power(catalog::form(triple.omega), n - 1, dim)),
        dim, 1);
    linalg::GaussianMatrix restricted(lef.mat.rows(), mixed.dim());
    for (std::size_t c = 0; c < mixed.dim(); ++c)
      restricted.set_col(c, lef.mat.apply(mixed.basis().row(c)));
    CHECK(linalg::bareiss_rank(restricted) == mixed.dim());
  }
}
