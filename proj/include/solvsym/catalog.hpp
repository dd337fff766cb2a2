#pragma once

#include <string>
#include <vector>

#include "solvsym/kform.hpp"
#include "solvsym/model.hpp"

namespace solvsym::catalog {

/// Built-in models, forms and almost-complex-structure matrices. The names
/// are stable public API used by the CLI (`catalog:<name>`).
std::vector<std::string> model_names();
std::vector<std::string> form_names();
std::vector<std::string> j_names();

bool has_model(const std::string& name);
bool has_form(const std::string& name);
bool has_j(const std::string& name);

const algebra::LieAlgebraModel& model(const std::string& name);
const algebra::RationalForm& form(const std::string& name);
const linalg::RationalMatrix& j_matrix(const std::string& name);

/// One-line description shown by the `catalog` listing.
std::string describe_model(const std::string& name);
std::string describe_form(const std::string& name);
std::string describe_j(const std::string& name);

}  // namespace solvsym::catalog
