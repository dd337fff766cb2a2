#include <doctest.h>

#include "solvsym/catalog.hpp"
#include "solvsym/hodge.hpp"
#include "test_util.hpp"

using namespace solvsym;
using namespace solvsym::hodge;
using testutil::basis;
using testutil::Rng;

namespace {

Metric diag_metric(std::initializer_list<int> entries) {
  linalg::RationalMatrix g(entries.size(), entries.size());
  std::size_t i = 0;
  for (int e : entries) {
    g(i, i) = Rational(e);
    ++i;
  }
  return Metric(std::move(g));
}

algebra::RationalForm volume_e1234() { return basis({1, 2, 3, 4}); }

}  // namespace

TEST_CASE("metric validation") {
  CHECK_THROWS_AS(diag_metric({1, 1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(diag_metric({1, 1, 1, -2}), std::invalid_argument);
  linalg::RationalMatrix asym(2, 2);
  asym(0, 0) = 1;
  asym(0, 1) = 1;
  asym(1, 1) = 1;
  CHECK_THROWS_AS(Metric{asym}, std::invalid_argument);
}

TEST_CASE("gram of the induced inner product") {
  Metric id = Metric::identity(4);
  for (int k = 0; k <= 4; ++k)
    CHECK(gram(id, k) ==
          linalg::RationalMatrix::identity(algebra::binomial(4, k)));

  Metric d4 = diag_metric({1, 1, 1, 4});
  auto g2 = gram(d4, 2);
  std::size_t r34 = algebra::multi_index_rank({3, 4}, 4);
  std::size_t r12 = algebra::multi_index_rank({1, 2}, 4);
  CHECK(g2(r34, r34) == Rational(4));
  CHECK(g2(r12, r12) == Rational(1));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (i != j) CHECK(g2(i, j) == Rational(0));
}

TEST_CASE("hodge star on the orthonormal coframe") {
  Metric id = Metric::identity(4);
  VolumeForm vol(volume_e1234(), 4);

  auto star1 = hodge_star(id, vol, 1);
  CHECK(star1.apply(basis({1}), 4) == basis({2, 3, 4}));
  CHECK(star1.apply(basis({2}), 4) == -Rational(1) * basis({1, 3, 4}));
  CHECK(star1.apply(basis({3}), 4) == basis({1, 2, 4}));
  CHECK(star1.apply(basis({4}), 4) == -Rational(1) * basis({1, 2, 3}));

  auto star2 = hodge_star(id, vol, 2);
  CHECK(star2.apply(basis({1, 2}), 4) == basis({3, 4}));
  CHECK(star2.apply(basis({1, 3}), 4) == -Rational(1) * basis({2, 4}));

  auto star0 = hodge_star(id, vol, 0);
  CHECK(star0.apply(algebra::RationalForm::constant(Rational(1)), 4) == volume_e1234());
  auto star4 = hodge_star(id, vol, 4);
  CHECK(star4.apply(volume_e1234(), 4) == algebra::RationalForm::constant(Rational(1)));
}

TEST_CASE("hodge star volume normalization is checked exactly") {
  Metric id = Metric::identity(4);
  algebra::RationalForm bad(4);
  bad.add_term({1, 2, 3, 4}, Rational(2));
  CHECK_THROWS_AS(hodge_star(id, VolumeForm(bad, 4), 1), std::invalid_argument);

  // det G = 4 has rational inverse square root 1/2.
  Metric d4 = diag_metric({1, 1, 1, 4});
  VolumeForm vol4 = metric_volume(d4);
  CHECK(vol4.coefficient() == Rational(1, 2));

  // det G = 2 does not; there is no exact volume form.
  CHECK_THROWS_AS(metric_volume(diag_metric({2, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("star star and star isometry") {
  Rng rng(5);
  for (const Metric& metric : {Metric::identity(4), diag_metric({1, 1, 1, 4}),
                               diag_metric({1, 4, 9, 4})}) {
    VolumeForm vol = metric_volume(metric);
    for (int k = 0; k <= 4; ++k) {
      auto fwd = hodge_star(metric, vol, k);
      auto back = hodge_star(metric, vol, 4 - k);
      auto round = back.mat * fwd.mat;
      auto expected = Rational(k % 2 == 0 ? 1 : -1) *
                      linalg::RationalMatrix::identity(algebra::binomial(4, k));
      CHECK(round == expected);

      auto g_k = gram(metric, k);
      auto g_dual = gram(metric, 4 - k);
      for (int trial = 0; trial < 10; ++trial) {
        auto a = testutil::random_form(rng, 4, k).coordinates(4);
        auto b = testutil::random_form(rng, 4, k).coordinates(4);
        CHECK(inner(fwd.mat.apply(a), fwd.mat.apply(b), g_dual) == inner(a, b, g_k));
      }
    }
  }
}

TEST_CASE("adjoint basics") {
  auto id4 = linalg::RationalMatrix::identity(4);
  algebra::GradedOperator<Rational> zero{1, 2, linalg::RationalMatrix(6, 4)};
  CHECK(adjoint(zero, id4, linalg::RationalMatrix::identity(6)).mat.is_zero());

  linalg::RationalMatrix m(6, 4);
  m(2, 1) = Rational(5);
  m(0, 3) = Rational(-2);
  algebra::GradedOperator<Rational> op{1, 2, m};
  CHECK(adjoint(op, id4, linalg::RationalMatrix::identity(6)).mat == m.transpose());
}

TEST_CASE("adjoint satisfies the defining identity") {
  Rng rng(17);
  Metric metric = diag_metric({1, 4, 1, 9});
  const auto& paper = catalog::model("paper_example");
  auto grams = gram_family(metric, 4);
  for (int k = 0; k < 4; ++k) {
    auto d = algebra::d_operator(paper, k);
    auto d_star = adjoint(d, grams[k], grams[k + 1]);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = testutil::random_form(rng, 4, k).coordinates(4);
      auto b = testutil::random_form(rng, 4, k + 1).coordinates(4);
      CHECK(inner(d.mat.apply(a), b, grams[k + 1]) == inner(a, d_star.mat.apply(b), grams[k]));
    }
  }
}

TEST_CASE("torus Laplacian vanishes and every form is harmonic") {
  const auto& torus = catalog::model("torus4");
  auto grams = gram_family(Metric::identity(4), 4);
  auto d = algebra::d_family(torus);
  for (int k = 0; k <= 4; ++k) {
    auto lap = laplacian(d, grams, k);
    CHECK(lap.mat.is_zero());
  }
  auto h1 = harmonics(d, grams, 1, 4, "d");
  CHECK(h1.space.dim() == 4);
}

TEST_CASE("harmonic one-forms of the catalog models") {
  auto grams = gram_family(Metric::identity(4), 4);

  const auto& paper = catalog::model("paper_example");
  auto h1_paper = harmonics(algebra::d_family(paper), grams, 1, 4, "d");
  CHECK(h1_paper.space.dim() == 2);
  CHECK(h1_paper.space.contains(basis({3}).coordinates(4)));
  CHECK(h1_paper.space.contains(basis({4}).coordinates(4)));

  const auto& kt = catalog::model("kodaira_thurston");
  auto h1_kt = harmonics(algebra::d_family(kt), grams, 1, 4, "d");
  CHECK(h1_kt.space.dim() == 3);
  CHECK(h1_kt.space.contains(basis({1}).coordinates(4)));
  CHECK(h1_kt.space.contains(basis({2}).coordinates(4)));
  CHECK(h1_kt.space.contains(basis({3}).coordinates(4)));
  CHECK(!h1_kt.space.contains(basis({4}).coordinates(4)));
}

TEST_CASE("Hodge decomposition of the finite complex") {
  for (const auto& name : catalog::model_names()) {
    const auto& model = catalog::model(name);
    auto betti = cohomology::betti_numbers(model);
    for (const Metric& metric : {Metric::identity(4), diag_metric({1, 4, 1, 9})}) {
      auto grams = gram_family(metric, model.dim());
      auto d = algebra::d_family<Rational>(model);
      for (int k = 0; k <= model.dim(); ++k) {
        auto h = harmonics(d, grams, k, model.dim(), "d");
        CHECK(h.space.dim() == betti[k]);

        auto im_d = k > 0 ? cohomology::image(d.at(k - 1))
                          : cohomology::Subspace<Rational>(model.space_dim(0));
        auto im_dstar = k < model.dim()
                            ? cohomology::image(adjoint(d.at(k), grams[k], grams[k + 1]))
                            : cohomology::Subspace<Rational>(model.space_dim(model.dim()));
        CHECK(h.space.dim() + im_d.dim() + im_dstar.dim() == model.space_dim(k));
        auto total = sum(sum(h.space, im_d), im_dstar);
        CHECK(total.dim() == model.space_dim(k));

        // Pairwise orthogonality of the three summands.
        auto orthogonal = [&](const cohomology::Subspace<Rational>& u,
                              const cohomology::Subspace<Rational>& v) {
          for (std::size_t i = 0; i < u.dim(); ++i)
            for (std::size_t j = 0; j < v.dim(); ++j)
              if (inner(u.basis().row(i), v.basis().row(j), grams[k]) != 0) return false;
          return true;
        };
        CHECK(orthogonal(h.space, im_d));
        CHECK(orthogonal(h.space, im_dstar));
        CHECK(orthogonal(im_d, im_dstar));

        // Harmonic representatives biject onto cohomology.
        cohomology::CohomologySpace<Rational> coh(model, k);
        if (h.space.dim() > 0) {
          linalg::RationalMatrix classes(h.space.dim(), coh.dim());
          for (std::size_t i = 0; i < h.basis.size(); ++i)
            classes.set_row(i, coh.class_coordinates(h.basis[i]));
          CHECK(linalg::bareiss_rank(classes) == betti[k]);
        }
      }
    }
  }
}

TEST_CASE("Laplacian is self-adjoint and positive semidefinite") {
  Rng rng(23);
  const auto& kt = catalog::model("kodaira_thurston");
  Metric metric = diag_metric({1, 4, 1, 9});
  auto grams = gram_family(metric, 4);
  auto d = algebra::d_family(kt);
  for (int k = 0; k <= 4; ++k) {
    auto lap = laplacian(d, grams, k);
    CHECK(adjoint(lap, grams[k], grams[k]).mat == lap.mat);
    for (int trial = 0; trial < 25; ++trial) {
      auto x = testutil::random_form(rng, 4, k).coordinates(4);
      auto lx = lap.mat.apply(x);
      Rational q = inner(lx, x, grams[k]);
      CHECK(q >= 0);
      bool lx_zero = true;
      for (const auto& v : lx) lx_zero = lx_zero && v == 0;
      CHECK((q == 0) == lx_zero);
    }
  }
}
