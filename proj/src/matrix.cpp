#include "solvsym/matrix.hpp"

namespace solvsym::linalg {

bool is_positive_definite(const RationalMatrix& g) {
  if (g.rows() != g.cols()) return false;
  for (std::size_t m = 1; m <= g.rows(); ++m) {
    RationalMatrix minor(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) minor(i, j) = g(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

}  // namespace solvsym::linalg
