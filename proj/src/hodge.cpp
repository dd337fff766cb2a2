#include "solvsym/hodge.hpp"

namespace solvsym::hodge {

Metric::Metric(RationalMatrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols() || g_.rows() == 0)
    throw std::invalid_argument("metric matrix must be square and nonempty");
  if (!linalg::is_symmetric(g_)) throw std::invalid_argument("metric matrix must be symmetric");
  if (!linalg::is_positive_definite(g_))
    throw std::invalid_argument("metric matrix must be positive definite");
}

VolumeForm::VolumeForm(algebra::RationalForm form, int dim) : form_(std::move(form)) {
  if (form_.degree() != dim)
    throw std::invalid_argument("volume form must have top degree " + std::to_string(dim));
  if (form_.terms().size() != 1)
    throw std::invalid_argument("volume form must be a single top-degree term");
  coeff_ = form_.terms().begin()->second;
  if (coeff_ <= 0) throw std::invalid_argument("volume coefficient must be positive");
}

RationalMatrix gram(const Metric& metric, int k) {
  int dim = metric.dim();
  std::size_t n = algebra::binomial(dim, k);
  RationalMatrix g(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    algebra::MultiIndex ia = algebra::multi_index_unrank(a, dim, k);
    for (std::size_t b = a; b < n; ++b) {
      algebra::MultiIndex ib = algebra::multi_index_unrank(b, dim, k);
      RationalMatrix minor(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) minor(r, c) = metric.matrix()(ia[r] - 1, ib[c] - 1);
      Rational v = linalg::determinant(minor);
      g(a, b) = v;
      g(b, a) = v;
    }
  }
  return g;
}

std::vector<RationalMatrix> gram_family(const Metric& metric, int dim) {
  std::vector<RationalMatrix> grams;
  grams.reserve(dim + 1);
  for (int k = 0; k <= dim; ++k) grams.push_back(gram(metric, k));
  return grams;
}

GradedOperator<Rational> hodge_star(const Metric& metric, const VolumeForm& vol, int k) {
  int dim = metric.dim();
  if (k < 0 || k > dim) throw std::invalid_argument("degree out of range");
  Rational det_g = linalg::determinant(metric.matrix());
  if (vol.coefficient() * vol.coefficient() * det_g != 1)
    throw std::invalid_argument(
        "volume form incompatible with metric: v^2 != det(G)^{-1} (v = " +
        to_string(vol.coefficient()) + ", det G = " + to_string(det_g) + ")");

  // e^I ^ star(e^J) = <e^I, e^J> vol pins the complement coefficient:
  // star(e^J)[comp(I)] = sign(I, comp(I)) * v * G_k[I][J].
  RationalMatrix g_k = gram(metric, k);
  std::size_t n_src = algebra::binomial(dim, k);
  std::size_t n_tgt = algebra::binomial(dim, dim - k);
  RationalMatrix star(n_tgt, n_src);
  for (std::size_t a = 0; a < n_src; ++a) {
    algebra::MultiIndex ia = algebra::multi_index_unrank(a, dim, k);
    algebra::MultiIndex comp;
    comp.reserve(dim - k);
    std::size_t t = 0;
    for (int v = 1; v <= dim; ++v) {
      if (t < ia.size() && ia[t] == v) {
        ++t;
        continue;
      }
      comp.push_back(v);
    }
    algebra::MultiIndex merged;
    int sign = algebra::merge_sign(ia, comp, &merged);
    std::size_t comp_rank = algebra::multi_index_rank(comp, dim);
    for (std::size_t b = 0; b < n_src; ++b) {
      if (g_k(a, b) == 0) continue;
      star(comp_rank, b) = Rational(sign) * vol.coefficient() * g_k(a, b);
    }
  }
  return {k, dim - k, std::move(star)};
}

VolumeForm metric_volume(const Metric& metric) {
  Rational det_g = linalg::determinant(metric.matrix());
  auto v = rational_sqrt(Rational(1) / det_g);
  if (!v)
    throw std::invalid_argument(
        "metric determinant " + to_string(det_g) +
        " is not the inverse of a rational square; no exact volume form exists");
  algebra::RationalForm top(metric.dim());
  algebra::MultiIndex all;
  for (int i = 1; i <= metric.dim(); ++i) all.push_back(i);
  top.add_term(all, *v);
  return VolumeForm(std::move(top), metric.dim());
}

}  // namespace solvsym::hodge
