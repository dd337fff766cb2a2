#include <cmath>
#include "solvsym/report.hpp"

#include <cstdio>

namespace solvsym::report {

std::string float_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ordered_json form_json(const algebra::RationalForm& f) {
  ordered_json doc;
  doc["degree"] = f.degree();
  ordered_json terms = ordered_json::array();
  for (const auto& [idx, c] : f.terms()) terms.push_back({to_string(c), idx});
  doc["terms"] = std::move(terms);
  return doc;
}

ordered_json gaussian_form_json(const algebra::GaussianForm& f) {
  ordered_json doc;
  doc["degree"] = f.degree();
  ordered_json terms = ordered_json::array();
  for (const auto& [idx, c] : f.terms()) terms.push_back({to_string(c), idx});
  doc["terms"] = std::move(terms);
  return doc;
}

ordered_json rational_matrix_json(const linalg::RationalMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json double_matrix_json(const std::vector<double>& row_major, int dim) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < dim; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < dim; ++j) row.push_back(float_str(row_major[i * dim + j]));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json betti_json(const std::vector<std::size_t>& betti) {
  ordered_json b = ordered_json::array();
  for (auto v : betti) b.push_back(v);
  return b;
}

ordered_json hl_doc(const std::string& model, int degree,
                    const cohomology::HardLefschetzResult& result) {
  ordered_json doc;
  doc["command"] = "hl";
  doc["model"] = model;
  doc["degree"] = degree;
  doc["isomorphism"] = result.holds;
  doc["rank"] = result.rank;
  doc["b_k"] = result.b_k;
  doc["b_dual"] = result.b_dual;
  doc["matrix"] = rational_matrix_json(result.map);
  ordered_json kernels = ordered_json::array();
  for (const auto& k : result.kernel_classes) kernels.push_back(form_json(k));
  doc["kernel_classes"] = std::move(kernels);
  return doc;
}

ordered_json lemma_doc(const std::string& model, const confsym::LemmaReport& report) {
  ordered_json doc;
  doc["command"] = "lemma-report";
  doc["model"] = model;
  doc["betti"] = betti_json(report.betti);
  doc["lefschetz_rank"] = report.lefschetz_rank;
  ordered_json conditions;
  conditions["hl1"] = report.hl1;
  conditions["dc_harmonics_equal"] = report.dc_harmonics_equal;
  conditions["pure_bidegree_sum"] = report.pure_bidegree_sum;
  conditions["delbar_mu_intersection"] = report.delbar_mu_intersection;
  doc["conditions"] = std::move(conditions);
  doc["conditions_agree"] = report.conditions_agree;
  doc["all_conditions_hold"] = report.all_conditions_hold();
  ordered_json identities;
  identities["weil"] = report.weil_identity;
  identities["almost_kahler"] = report.almost_kahler_identity;
  identities["containment_chain"] = report.containment_chain;
  identities["intersection"] = report.intersection_identity;
  identities["sl2_injective"] = report.sl2_injective;
  doc["identities"] = std::move(identities);
  return doc;
}

ordered_json theorem_doc(const std::string& model, const confsym::TheoremReport& report) {
  ordered_json doc;
  doc["command"] = "theorem1";
  doc["model"] = model;
  ordered_json hyp;
  hyp["unimodular"] = report.unimodular;
  hyp["hl1"] = report.hl1;
  hyp["j_compat_omega"] = report.j_compat_omega;
  hyp["j_compat_eta"] = report.j_compat_eta;
  hyp["lcs"] = report.lcs;
  doc["hypotheses"] = std::move(hyp);
  ordered_json ident;
  if (report.theta_already_harmonic.has_value())
    ident["theta_already_harmonic"] = *report.theta_already_harmonic;
  else
    ident["theta_already_harmonic"] = nullptr;
  ident["dc_theta_zero"] = report.dc_theta_zero;
  ident["dc_eta_identity"] = report.dc_eta_identity;
  ident["ddc_eta_identity"] = report.ddc_eta_identity;
  ident["ddc_vanishes"] = report.ddc_vanishes;
  doc["identities"] = std::move(ident);
  doc["positivity_coefficient"] = to_string(report.positivity_coefficient);
  doc["positivity_ok"] = report.positivity_ok;
  doc["theta_zero"] = report.theta_zero;
  doc["verdict"] = confsym::to_string(report.verdict);
  doc["failed_hypothesis"] = report.failed_hypothesis;
  return doc;
}

ordered_json survey_doc(const std::string& model, std::size_t samples, std::uint64_t seed,
                        const confsym::SurveyResult& result) {
  ordered_json doc;
  doc["command"] = "survey-hl";
  doc["model"] = model;
  doc["samples"] = samples;
  doc["seed"] = seed;
  doc["hl_true"] = result.hl_true;
  doc["rejected"] = result.rejected;
  doc["fraction"] = float_str(result.fraction);
  doc["counterexample"] =
      result.first_hl_false ? form_json(*result.first_hl_false) : ordered_json(nullptr);
  doc["hl_true_example"] =
      result.first_hl_true ? form_json(*result.first_hl_true) : ordered_json(nullptr);
  return doc;
}

ordered_json search_doc(const std::string& model, const jsearch::SearchConfig& cfg,
                        const jsearch::SearchOutcome& outcome) {
  ordered_json doc;
  doc["command"] = "find-shared-j";
  doc["model"] = model;
  doc["restarts"] = cfg.restarts;
  doc["max_iters"] = cfg.max_iters;
  doc["seed"] = cfg.seed;
  doc["tol_residual"] = float_str(cfg.tol_residual);
  doc["tol_posdef"] = float_str(cfg.tol_posdef);
  doc["found"] = outcome.found;
  doc["found_restart"] = outcome.found_restart;
  doc["exact"] = outcome.exact;
  doc["exactness_required"] = outcome.exactness_required;
  doc["best_residual"] = float_str(outcome.best_residual);
  doc["min_eig_omega"] = float_str(outcome.min_eig_omega);
  doc["min_eig_eta"] = float_str(outcome.min_eig_eta);
  if (outcome.exact_j)
    doc["j"] = rational_matrix_json(outcome.exact_j->matrix());
  else
    doc["j"] = double_matrix_json(outcome.best_j,
                                  static_cast<int>(std::sqrt(outcome.best_j.size())));
  ordered_json trace = ordered_json::array();
  for (const auto& t : outcome.trace) {
    ordered_json row;
    row["restart"] = t.index;
    row["residual"] = float_str(t.residual);
    row["min_eig_omega"] = float_str(t.min_eig_omega);
    row["min_eig_eta"] = float_str(t.min_eig_eta);
    row["iters"] = t.iters;
    trace.push_back(std::move(row));
  }
  doc["trace"] = std::move(trace);
  return doc;
}

std::string to_machine(const ordered_json& doc) { return doc.dump(2) + "\n"; }

namespace {

bool looks_like_form(const ordered_json& j) {
  return j.is_object() && j.size() == 2 && j.contains("degree") && j.contains("terms");
}

std::string form_text(const ordered_json& j) {
  std::string out;
  for (const auto& term : j["terms"]) {
    std::string c = term[0].get<std::string>();
    std::string label;
    for (const auto& idx : term[1]) label += std::to_string(idx.get<int>());
    if (!out.empty()) out += " + ";
    if (label.empty()) {
      out += c;
    } else if (c == "1") {
      out += "e" + label;
    } else if (c == "-1") {
      out += "-e" + label;
    } else {
      out += c + "*e" + label;
    }
  }
  return out.empty() ? "0" : out;
}

bool is_string_matrix(const ordered_json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) return false;
    for (const auto& v : row)
      if (!v.is_string()) return false;
  }
  return true;
}

void render(const ordered_json& j, const std::string& prefix, std::string& out) {
  if (looks_like_form(j)) {
    out += prefix + ": " + form_text(j) + "\n";
    return;
  }
  if (is_string_matrix(j)) {
    out += prefix + ":\n";
    for (const auto& row : j) {
      out += "  [";
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ", ";
        out += row[i].get<std::string>();
      }
      out += "]\n";
    }
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array()) {
    bool scalar_only = true;
    for (const auto& v : j) scalar_only = scalar_only && v.is_primitive();
    if (scalar_only) {
      std::string line = prefix + ": [";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) line += ", ";
        line += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
      }
      out += line + "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) render(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

}  // namespace

std::string to_text(const ordered_json& doc) {
  std::string out;
  render(doc, "", out);
  return out;
}

}  // namespace solvsym::report
