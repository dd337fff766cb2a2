#include <algorithm>
#include "solvsym/model.hpp"

#include <json.hpp>

#include <set>
#include <utility>

#include "solvsym/operators.hpp"

namespace solvsym::algebra {

namespace {

constexpr int kMaxDim = 16;

Rational coefficient_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    auto r = try_parse_rational(j.get<std::string>());
    if (!r) throw ParseError(where + ": malformed rational literal '" + j.get<std::string>() + "'");
    return *r;
  }
  throw ParseError(where + ": coefficient must be a rational string or integer");
}

void validate_d_squared(const LieAlgebraModel& model) {
  for (int k = 0; k <= model.dim(); ++k) {
    std::size_t n_src = model.space_dim(k);
    for (std::size_t j = 0; j < n_src; ++j) {
      MultiIndex idx = multi_index_unrank(j, model.dim(), k);
      RationalForm once = exterior_derivative(model, RationalForm::basis_element(idx));
      RationalForm twice = exterior_derivative(model, once);
      if (!twice.is_zero()) {
        throw ValidationError("d*d != 0 in degree " + std::to_string(k) + " on basis form e" +
                              multi_index_label(idx) + ": d(d(e" + multi_index_label(idx) +
                              ")) = " + twice.to_text());
      }
    }
  }
}

}  // namespace

LieAlgebraModel::LieAlgebraModel(std::string name, int dim, std::vector<std::string> basis,
                                 std::vector<RationalForm> differentials)
    : name_(std::move(name)),
      dim_(dim),
      basis_(std::move(basis)),
      differentials_(std::move(differentials)) {
  if (dim_ <= 0 || dim_ % 2 != 0)
    throw ValidationError("dimension must be a positive even integer, got " + std::to_string(dim_));
  if (dim_ > kMaxDim)
    throw ValidationError("dimension " + std::to_string(dim_) + " exceeds supported maximum " +
                          std::to_string(kMaxDim));
  if (static_cast<int>(basis_.size()) != dim_)
    throw ValidationError("basis has " + std::to_string(basis_.size()) + " labels, expected " +
                          std::to_string(dim_));
  if (static_cast<int>(differentials_.size()) != dim_)
    throw ValidationError("expected one structure differential per generator");
  for (const auto& f : differentials_) {
    if (f.degree() != 2) throw ValidationError("structure differentials must have degree 2");
    for (const auto& [idx, c] : f.terms()) {
      (void)c;
      if (idx.back() > dim_) throw ValidationError("structure index exceeds dimension");
    }
  }
  validate_d_squared(*this);
}

LieAlgebraModel parse_model(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model file: top-level document must be an object");
  for (const char* field : {"name", "dim", "basis", "d"})
    if (!doc.contains(field)) throw ParseError(std::string("model file: missing field '") + field + "'");
  if (!doc["name"].is_string()) throw ParseError("model file: 'name' must be a string");
  if (!doc["dim"].is_number_integer()) throw ParseError("model file: 'dim' must be an integer");
  if (!doc["basis"].is_array()) throw ParseError("model file: 'basis' must be a list of strings");
  if (!doc["d"].is_object()) throw ParseError("model file: 'd' must be a map");

  std::string name = doc["name"].get<std::string>();
  int dim = doc["dim"].get<int>();
  std::vector<std::string> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw ParseError("model file: basis labels must be strings");
    basis.push_back(b.get<std::string>());
  }
  std::set<std::string> label_set(basis.begin(), basis.end());
  if (label_set.size() != basis.size()) throw ParseError("model file: duplicate basis label");

  std::vector<RationalForm> differentials(basis.size(), RationalForm(2));
  for (const auto& [label, entries] : doc["d"].items()) {
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end())
      throw ParseError("model file: 'd' refers to unknown basis label '" + label + "'");
    std::size_t gen = it - basis.begin();
    if (!entries.is_array())
      throw ParseError("model file: d[" + label + "] must be a list of [coefficient, [i, j]]");
    RationalForm form(2);
    std::set<std::pair<int, int>> seen;
    for (const auto& entry : entries) {
      const std::string where = "model file: d[" + label + "]";
      if (!entry.is_array() || entry.size() != 2 || !entry[1].is_array() || entry[1].size() != 2)
        throw ParseError(where + ": each term must be [coefficient, [i, j]]");
      Rational c = coefficient_from_json(entry[0], where);
      if (!entry[1][0].is_number_integer() || !entry[1][1].is_number_integer())
        throw ParseError(where + ": indices must be integers");
      int i = entry[1][0].get<int>();
      int j = entry[1][1].get<int>();
      if (i < 1 || j < 1 || i > dim || j > dim)
        throw ValidationError(where + ": index out of range [1," + std::to_string(dim) + "]");
      if (i >= j)
        throw ValidationError(where + ": indices must satisfy i < j, got [" + std::to_string(i) +
                              "," + std::to_string(j) + "]");
      if (!seen.insert({i, j}).second)
        throw ValidationError(where + ": duplicate index pair [" + std::to_string(i) + "," +
                              std::to_string(j) + "]");
      form.add_term({i, j}, c);
    }
    differentials[gen] = std::move(form);
  }
  return LieAlgebraModel(std::move(name), dim, std::move(basis), std::move(differentials));
}

std::string serialize_model(const LieAlgebraModel& model) {
  nlohmann::ordered_json doc;
  doc["name"] = model.name();
  doc["dim"] = model.dim();
  doc["basis"] = model.basis();
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (int g = 1; g <= model.dim(); ++g) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [idx, c] : model.differential_of(g).terms())
      entries.push_back({to_string(c), {idx[0], idx[1]}});
    d[model.basis()[g - 1]] = std::move(entries);
  }
  doc["d"] = std::move(d);
  return doc.dump(2) + "\n";
}

bool is_unimodular(const LieAlgebraModel& model) {
  return d_operator(model, model.dim() - 1).mat.is_zero();
}

}  // namespace solvsym::algebra
