#pragma once

#include <string>

#include "solvsym/kform.hpp"
#include "solvsym/model.hpp"

namespace solvsym::algebra {

/// Forms-file document: {"degree": k, "terms": [[coeff, [i1 < ... < ik]], ...]}.
RationalForm parse_form(const std::string& text, int dim);
std::string serialize_form(const RationalForm& form);

/// J-file document: {"dim": 2n, "matrix": [[row-major rational strings]]},
/// the matrix acting on Lambda^1 coordinates.
linalg::RationalMatrix parse_j_matrix(const std::string& text);
std::string serialize_j_matrix(const linalg::RationalMatrix& m);

std::string read_file(const std::string& path);

}  // namespace solvsym::algebra
