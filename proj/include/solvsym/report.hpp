#pragma once

#include <json.hpp>

#include <string>

#include "solvsym/confsym.hpp"
#include "solvsym/jsearch.hpp"

namespace solvsym::report {

using nlohmann::ordered_json;

/// Floats are serialized as strings with 17 significant digits so machine
/// documents are byte-stable.
std::string float_str(double x);

ordered_json form_json(const algebra::RationalForm& f);
ordered_json gaussian_form_json(const algebra::GaussianForm& f);
ordered_json rational_matrix_json(const linalg::RationalMatrix& m);
ordered_json double_matrix_json(const std::vector<double>& row_major, int dim);

ordered_json betti_json(const std::vector<std::size_t>& betti);

ordered_json hl_doc(const std::string& model, int degree,
                    const cohomology::HardLefschetzResult& result);
ordered_json lemma_doc(const std::string& model, const confsym::LemmaReport& report);
ordered_json theorem_doc(const std::string& model, const confsym::TheoremReport& report);
ordered_json survey_doc(const std::string& model, std::size_t samples, std::uint64_t seed,
                        const confsym::SurveyResult& result);
ordered_json search_doc(const std::string& model, const jsearch::SearchConfig& cfg,
                        const jsearch::SearchOutcome& outcome);

/// Renders a machine document as indented JSON (the machine format).
std::string to_machine(const ordered_json& doc);

/// Renders the same document as flat `key: value` text. Form documents
/// ({degree, terms}) are pretty-printed, rational-string matrices row by
/// row, and nested keys join with '.'.
std::string to_text(const ordered_json& doc);

}  // namespace solvsym::report
