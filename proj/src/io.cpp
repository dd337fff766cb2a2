#include "solvsym/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace solvsym::algebra {

namespace {

Rational coefficient_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    auto r = try_parse_rational(j.get<std::string>());
    if (!r) throw ParseError(where + ": malformed rational literal '" + j.get<std::string>() + "'");
    return *r;
  }
  throw ParseError(where + ": coefficient must be a rational string or integer");
}

}  // namespace

RationalForm parse_form(const std::string& text, int dim) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("form file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("terms"))
    throw ParseError("form file: expected object with 'degree' and 'terms'");
  if (!doc["degree"].is_number_integer()) throw ParseError("form file: 'degree' must be an integer");
  int degree = doc["degree"].get<int>();
  if (degree < 0 || degree > dim)
    throw ParseError("form file: degree " + std::to_string(degree) + " out of range [0," +
                     std::to_string(dim) + "]");
  if (!doc["terms"].is_array()) throw ParseError("form file: 'terms' must be a list");
  RationalForm form(degree);
  for (const auto& entry : doc["terms"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array())
      throw ParseError("form file: each term must be [coefficient, [indices]]");
    Rational c = coefficient_from_json(entry[0], "form file");
    MultiIndex idx;
    for (const auto& v : entry[1]) {
      if (!v.is_number_integer()) throw ParseError("form file: indices must be integers");
      idx.push_back(v.get<int>());
    }
    if (static_cast<int>(idx.size()) != degree)
      throw ParseError("form file: multi-index length does not match degree");
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (idx[t] < 1 || idx[t] > dim) throw ParseError("form file: index out of range");
      if (t + 1 < idx.size() && idx[t] >= idx[t + 1])
        throw ParseError("form file: indices must be strictly increasing");
    }
    form.add_term(std::move(idx), c);
  }
  return form;
}

std::string serialize_form(const RationalForm& form) {
  nlohmann::ordered_json doc;
  doc["degree"] = form.degree();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : form.terms()) terms.push_back({to_string(c), idx});
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

linalg::RationalMatrix parse_j_matrix(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("J file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix"))
    throw ParseError("J file: expected object with 'dim' and 'matrix'");
  if (!doc["dim"].is_number_integer()) throw ParseError("J file: 'dim' must be an integer");
  int dim = doc["dim"].get<int>();
  if (dim <= 0) throw ParseError("J file: 'dim' must be positive");
  if (!doc["matrix"].is_array() || doc["matrix"].size() != static_cast<std::size_t>(dim))
    throw ParseError("J file: 'matrix' must have " + std::to_string(dim) + " rows");
  linalg::RationalMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = doc["matrix"][i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw ParseError("J file: row " + std::to_string(i + 1) + " must have " +
                       std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j)
      m(i, j) = coefficient_from_json(row[j], "J file row " + std::to_string(i + 1));
  }
  return m;
}

std::string serialize_j_matrix(const linalg::RationalMatrix& m) {
  nlohmann::ordered_json doc;
  doc["dim"] = m.rows();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace solvsym::algebra
