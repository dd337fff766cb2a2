#include "solvsym/cohomology.hpp"

namespace solvsym::cohomology {

std::vector<std::size_t> betti_numbers(const LieAlgebraModel& model) {
  std::vector<std::size_t> b;
  b.reserve(model.dim() + 1);
  for (int k = 0; k <= model.dim(); ++k) b.push_back(CohomologySpace<Rational>(model, k).dim());
  return b;
}

linalg::RationalMatrix lefschetz_map(const LieAlgebraModel& model,
                                     const algebra::RationalForm& omega, int k) {
  if (omega.degree() != 2) throw std::invalid_argument("omega must have degree 2");
  int n = model.half_dim();
  if (k < 0 || k > n) throw std::invalid_argument("degree must satisfy 0 <= k <= n");
  if (!algebra::exterior_derivative(model, omega).is_zero())
    throw std::invalid_argument("omega is not closed");
  CohomologySpace<Rational> source(model, k);
  CohomologySpace<Rational> target(model, 2 * model.half_dim() - k);
  algebra::RationalForm power = algebra::wedge_power(omega, n - k, model.dim());
  linalg::RationalMatrix m(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    algebra::RationalForm image =
        algebra::wedge(power, source.representatives()[j], model.dim());
    m.set_col(j, target.class_coordinates(image));
  }
  return m;
}

HardLefschetzResult hard_lefschetz(const LieAlgebraModel& model,
                                   const algebra::RationalForm& omega, int k) {
  HardLefschetzResult result;
  result.map = lefschetz_map(model, omega, k);
  CohomologySpace<Rational> source(model, k);
  result.b_k = source.dim();
  result.b_dual = result.map.rows();
  result.rank = linalg::bareiss_rank(result.map);
  result.holds = result.b_k == result.b_dual && result.rank == result.b_k;
  if (!result.holds) {
    linalg::RationalMatrix null = linalg::null_space(result.map);
    for (std::size_t r = 0; r < null.rows(); ++r) {
      algebra::RationalForm cls(k);
      for (std::size_t j = 0; j < source.dim(); ++j) {
        if (null(r, j) == 0) continue;
        cls = cls + null(r, j) * source.representatives()[j];
      }
      result.kernel_classes.push_back(std::move(cls));
    }
  }
  return result;
}

}  // namespace solvsym::cohomology
