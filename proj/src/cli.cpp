#include "solvsym/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "solvsym/catalog.hpp"
#include "solvsym/io.hpp"
#include "solvsym/report.hpp"

namespace solvsym::cli {

namespace {

using acs::AlmostComplexStructure;
using algebra::LieAlgebraModel;
using algebra::RationalForm;
using report::ordered_json;

constexpr const char* kCatalogPrefix = "catalog:";

bool is_catalog_ref(const std::string& spec, std::string* name) {
  if (spec.rfind(kCatalogPrefix, 0) != 0) return false;
  *name = spec.substr(std::string(kCatalogPrefix).size());
  return true;
}

LieAlgebraModel load_model(const std::string& spec) {
  std::string name;
  if (is_catalog_ref(spec, &name)) return catalog::model(name);
  return algebra::parse_model(algebra::read_file(spec));
}

RationalForm load_form(const std::string& spec, int dim) {
  std::string name;
  if (is_catalog_ref(spec, &name)) return catalog::form(name);
  return algebra::parse_form(algebra::read_file(spec), dim);
}

AlmostComplexStructure load_j(const std::string& spec) {
  std::string name;
  if (is_catalog_ref(spec, &name)) return AlmostComplexStructure(catalog::j_matrix(name));
  return AlmostComplexStructure(algebra::parse_j_matrix(algebra::read_file(spec)));
}

hodge::Metric load_metric(const std::string& spec) {
  // Metric files reuse the matrix document of J files.
  return hodge::Metric(algebra::parse_j_matrix(algebra::read_file(spec)));
}

struct MetricPack {
  hodge::Metric metric;
  hodge::VolumeForm volume;
  std::string kind;
};

MetricPack resolve_metric(const LieAlgebraModel& model, const std::string& omega_spec,
                          const std::string& j_spec) {
  if (!omega_spec.empty() && !j_spec.empty()) {
    auto st = acs::induced_structure(model, load_form(omega_spec, model.dim()), load_j(j_spec));
    return {std::move(st.compatibility.metric), std::move(st.volume), "induced"};
  }
  if (!omega_spec.empty() || !j_spec.empty())
    throw std::invalid_argument("an induced metric needs both --omega and --j");
  hodge::Metric metric = hodge::Metric::identity(model.dim());
  return {metric, hodge::metric_volume(metric), "identity"};
}

void emit(const ordered_json& doc, const std::string& format, std::ostream& out) {
  out << (format == "machine" ? report::to_machine(doc) : report::to_text(doc));
}

struct Options {
  std::string model, omega, eta, theta, j, form, g0, delta = "d";
  std::string format = "text";
  int degree = 1;
  int samples = 200;
  int restarts = 100;
  int max_iters = 500;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  if (command == "catalog") {
    ordered_json doc;
    doc["command"] = "catalog";
    ordered_json models = ordered_json::array();
    for (const auto& name : catalog::model_names()) {
      const auto& m = catalog::model(name);
      ordered_json entry;
      entry["name"] = name;
      entry["dim"] = m.dim();
      entry["unimodular"] = algebra::is_unimodular(m);
      entry["betti"] = report::betti_json(cohomology::betti_numbers(m));
      entry["description"] = catalog::describe_model(name);
      models.push_back(std::move(entry));
    }
    doc["models"] = std::move(models);
    ordered_json forms = ordered_json::array();
    for (const auto& name : catalog::form_names()) {
      ordered_json entry;
      entry["name"] = name;
      entry["form"] = report::form_json(catalog::form(name));
      entry["description"] = catalog::describe_form(name);
      forms.push_back(std::move(entry));
    }
    doc["forms"] = std::move(forms);
    ordered_json js = ordered_json::array();
    for (const auto& name : catalog::j_names()) {
      ordered_json entry;
      entry["name"] = name;
      entry["matrix"] = report::rational_matrix_json(catalog::j_matrix(name));
      entry["description"] = catalog::describe_j(name);
      js.push_back(std::move(entry));
    }
    doc["js"] = std::move(js);
    emit(doc, opt.format, out);
    return 0;
  }

  if (command == "validate") {
    ordered_json doc;
    doc["command"] = "validate";
    try {
      LieAlgebraModel model = load_model(opt.model);
      doc["model"] = model.name();
      doc["dim"] = model.dim();
      doc["valid"] = true;
      doc["unimodular"] = algebra::is_unimodular(model);
      emit(doc, opt.format, out);
      return 0;
    } catch (const algebra::ValidationError& e) {
      doc["valid"] = false;
      doc["error"] = e.what();
      emit(doc, opt.format, out);
      return 1;
    }
  }

  LieAlgebraModel model = load_model(opt.model);
  const int dim = model.dim();

  if (command == "betti") {
    ordered_json doc;
    doc["command"] = "betti";
    doc["model"] = model.name();
    doc["betti"] = report::betti_json(cohomology::betti_numbers(model));
    doc["unimodular"] = algebra::is_unimodular(model);
    emit(doc, opt.format, out);
    return 0;
  }

  if (command == "hl") {
    auto result = cohomology::hard_lefschetz(model, load_form(opt.omega, dim), opt.degree);
    emit(report::hl_doc(model.name(), opt.degree, result), opt.format, out);
    return result.holds ? 0 : 1;
  }

  if (command == "star") {
    auto pack = resolve_metric(model, opt.omega, opt.j);
    auto star = hodge::hodge_star(pack.metric, pack.volume, opt.degree);
    ordered_json doc;
    doc["command"] = "star";
    doc["model"] = model.name();
    doc["degree"] = opt.degree;
    doc["metric"] = pack.kind;
    if (!opt.form.empty()) {
      RationalForm input = load_form(opt.form, dim);
      doc["input"] = report::form_json(input);
      doc["output"] = report::form_json(star.apply(input, dim));
    } else {
      doc["matrix"] = report::rational_matrix_json(star.mat);
    }
    emit(doc, opt.format, out);
    return 0;
  }

  if (command == "harmonics") {
    auto pack = resolve_metric(model, opt.omega, opt.j);
    auto grams_r = hodge::gram_family(pack.metric, dim);
    std::vector<linalg::GaussianMatrix> grams;
    for (const auto& g : grams_r) grams.push_back(linalg::complexify(g));

    algebra::OperatorFamily<GaussianRational> family;
    if (opt.delta == "d") {
      family = algebra::complexify(algebra::d_family(model));
    } else {
      if (opt.j.empty()) throw std::invalid_argument("--delta " + opt.delta + " needs --j");
      auto j = load_j(opt.j);
      if (opt.delta == "dc") {
        family = algebra::complexify(acs::dc_family(model, j));
      } else {
        auto decomp = acs::decompose_d(model, j);
        if (opt.delta == "mubar")
          family = decomp.mubar;
        else if (opt.delta == "delbar")
          family = decomp.delbar;
        else if (opt.delta == "del")
          family = decomp.del;
        else if (opt.delta == "mu")
          family = decomp.mu;
        else
          throw std::invalid_argument("unknown --delta: " + opt.delta);
      }
    }
    auto h = hodge::harmonics(family, grams, opt.degree, dim, opt.delta);
    ordered_json doc;
    doc["command"] = "harmonics";
    doc["model"] = model.name();
    doc["delta"] = opt.delta;
    doc["degree"] = opt.degree;
    doc["metric"] = pack.kind;
    doc["dim"] = h.space.dim();
    ordered_json basis = ordered_json::array();
    for (const auto& f : h.basis) basis.push_back(report::gaussian_form_json(f));
    doc["basis"] = std::move(basis);
    emit(doc, opt.format, out);
    return 0;
  }

  if (command == "check-symplectic") {
    RationalForm omega = load_form(opt.omega, dim);
    bool ok = confsym::is_symplectic(model, omega);
    ordered_json doc;
    doc["command"] = "check-symplectic";
    doc["model"] = model.name();
    doc["omega"] = report::form_json(omega);
    doc["symplectic"] = ok;
    emit(doc, opt.format, out);
    return ok ? 0 : 1;
  }

  if (command == "check-lcs") {
    RationalForm eta = load_form(opt.eta, dim);
    ordered_json doc;
    doc["command"] = "check-lcs";
    doc["model"] = model.name();
    doc["eta"] = report::form_json(eta);
    RationalForm theta(1);
    bool derived = opt.theta.empty();
    if (derived) {
      auto lee = confsym::lee_form_from_eta(model, eta);
      if (!lee.theta) {
        doc["theta_derived"] = true;
        doc["lcs"] = false;
        doc["error"] = lee.failure;
        doc["residual"] = report::form_json(lee.residual);
        emit(doc, opt.format, out);
        return 1;
      }
      theta = *lee.theta;
    } else {
      theta = load_form(opt.theta, dim);
    }
    doc["theta"] = report::form_json(theta);
    doc["theta_derived"] = derived;
    bool ok = confsym::is_lcs(model, {eta, theta});
    doc["lcs"] = ok;
    emit(doc, opt.format, out);
    return ok ? 0 : 1;
  }

  if (command == "lee-class") {
    RationalForm theta = load_form(opt.theta, dim);
    auto cls = confsym::lee_class(model, theta);
    ordered_json doc;
    doc["command"] = "lee-class";
    doc["model"] = model.name();
    doc["theta"] = report::form_json(theta);
    ordered_json coords = ordered_json::array();
    for (const auto& c : cls.coordinates) coords.push_back(to_string(c));
    doc["class"] = std::move(coords);
    doc["zero"] = cls.is_zero;
    doc["gcs"] = cls.is_zero;
    emit(doc, opt.format, out);
    return cls.is_zero ? 0 : 1;
  }

  if (command == "lemma-report") {
    auto report_data = confsym::lemma_report(model, load_form(opt.omega, dim), load_j(opt.j));
    emit(report::lemma_doc(model.name(), report_data), opt.format, out);
    return report_data.all_conditions_hold() && report_data.conditions_agree ? 0 : 1;
  }

  if (command == "theorem1") {
    RationalForm omega = load_form(opt.omega, dim);
    RationalForm eta = load_form(opt.eta, dim);
    RationalForm theta(1);
    if (opt.theta.empty()) {
      auto lee = confsym::lee_form_from_eta(model, eta);
      if (!lee.theta)
        throw std::invalid_argument("eta admits no Lee form (" + lee.failure +
                                    "); pass --theta explicitly");
      theta = *lee.theta;
    } else {
      theta = load_form(opt.theta, dim);
    }
    auto report_data = confsym::theorem1_check(model, omega, {eta, theta}, load_j(opt.j));
    emit(report::theorem_doc(model.name(), report_data), opt.format, out);
    return report_data.verdict == confsym::TheoremVerdict::ThetaZero ? 0 : 1;
  }

  if (command == "canonical-j") {
    RationalForm omega = load_form(opt.omega, dim);
    hodge::Metric g0 = opt.g0.empty() ? hodge::Metric::identity(dim) : load_metric(opt.g0);
    auto result = acs::canonical_compatible_j(omega, g0, dim);
    ordered_json doc;
    doc["command"] = "canonical-j";
    doc["model"] = model.name();
    doc["exact"] = result.exact;
    if (result.exact)
      doc["j"] = report::rational_matrix_json(result.exact_j->matrix());
    else
      doc["j"] = report::double_matrix_json(result.approx_j, dim);
    doc["residual"] = report::float_str(result.residual);
    doc["min_eigenvalue"] = report::float_str(result.min_eigenvalue);
    emit(doc, opt.format, out);
    return 0;
  }

  if (command == "find-shared-j") {
    jsearch::SearchConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.max_iters = opt.max_iters;
    cfg.tol_residual = opt.tol;
    cfg.seed = opt.seed;
    auto outcome =
        jsearch::find_shared_j(model, load_form(opt.omega, dim), load_form(opt.eta, dim), cfg);
    emit(report::search_doc(model.name(), cfg, outcome), opt.format, out);
    return outcome.found ? 0 : 1;
  }

  if (command == "survey-hl") {
    auto result = confsym::hl_survey(model, opt.samples, opt.seed);
    emit(report::survey_doc(model.name(), opt.samples, opt.seed, result), opt.format, out);
    return 0;
  }

  throw std::invalid_argument("unhandled command: " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of invariant cohomology, hard Lefschetz and "
               "conformally symplectic structures on Lie-algebra models"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_model = true) {
    if (needs_model)
      sub->add_option("--model", opt.model, "model file or catalog:NAME")->required();
    sub->add_option("--format", opt.format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    return sub;
  };

  add_common(app.add_subcommand("validate", "parse and validate a model file"));
  add_common(app.add_subcommand("betti", "Betti numbers of the invariant complex"));

  auto* hl = add_common(app.add_subcommand("hl", "hard Lefschetz check"));
  hl->add_option("--omega", opt.omega, "closed 2-form")->required();
  hl->add_option("--degree", opt.degree, "cohomology degree (default 1)");

  auto* star = add_common(app.add_subcommand("star", "Hodge star operator"));
  star->add_option("--degree", opt.degree, "source degree (default 1)");
  star->add_option("--form", opt.form, "form to apply the star to");
  star->add_option("--omega", opt.omega, "2-form for the induced metric");
  star->add_option("--j", opt.j, "J for the induced metric");

  auto* harm = add_common(app.add_subcommand("harmonics", "harmonic forms of a Laplacian"));
  harm->add_option("--degree", opt.degree, "form degree (default 1)");
  harm->add_option("--delta", opt.delta, "d|dc|mubar|delbar|del|mu (default d)")
      ->check(CLI::IsMember({"d", "dc", "mubar", "delbar", "del", "mu"}));
  harm->add_option("--omega", opt.omega, "2-form for the induced metric");
  harm->add_option("--j", opt.j, "almost complex structure");

  auto* symp = add_common(app.add_subcommand("check-symplectic", "closed and nondegenerate"));
  symp->add_option("--omega", opt.omega, "2-form")->required();

  auto* lcs = add_common(app.add_subcommand("check-lcs", "locally conformally symplectic"));
  lcs->add_option("--eta", opt.eta, "nondegenerate 2-form")->required();
  lcs->add_option("--theta", opt.theta, "Lee 1-form (derived from eta when omitted)");

  auto* lee = add_common(app.add_subcommand("lee-class", "class of a closed 1-form in H^1"));
  lee->add_option("--theta", opt.theta, "closed 1-form")->required();

  auto* lemma = add_common(app.add_subcommand(
      "lemma-report", "the four equivalent degree-1 conditions of an almost-Kahler structure"));
  lemma->add_option("--omega", opt.omega, "symplectic form")->required();
  lemma->add_option("--j", opt.j, "compatible J")->required();

  auto* thm = add_common(app.add_subcommand(
      "theorem1", "hard Lefschetz + shared compatible J forces a global conformal rescaling"));
  thm->add_option("--omega", opt.omega, "symplectic form")->required();
  thm->add_option("--eta", opt.eta, "LCS 2-form")->required();
  thm->add_option("--theta", opt.theta, "Lee form (derived from eta when omitted)");
  thm->add_option("--j", opt.j, "candidate shared J")->required();

  auto* canon = add_common(app.add_subcommand("canonical-j", "polar-decomposition compatible J"));
  canon->add_option("--omega", opt.omega, "nondegenerate 2-form")->required();
  canon->add_option("--g0", opt.g0, "background metric file (identity when omitted)");

  auto* search = add_common(
      app.add_subcommand("find-shared-j", "numerical search for a mutually compatible J"));
  search->add_option("--omega", opt.omega, "first nondegenerate 2-form")->required();
  search->add_option("--eta", opt.eta, "second nondegenerate 2-form")->required();
  search->add_option("--restarts", opt.restarts, "random restarts (default 100)");
  search->add_option("--seed", opt.seed, "RNG seed (default 0)");
  search->add_option("--tol", opt.tol, "residual tolerance (default 1e-8)");
  search->add_option("--max-iters", opt.max_iters, "iterations per restart (default 500)");

  auto* survey = add_common(app.add_subcommand("survey-hl", "sampled hard Lefschetz survey"));
  survey->add_option("--samples", opt.samples, "number of symplectic samples (default 200)");
  survey->add_option("--seed", opt.seed, "RNG seed")->required();

  add_common(app.add_subcommand("catalog", "list built-in models, forms and Js"), false);

  std::vector<std::string> argv_like = args;
  argv_like.insert(argv_like.begin(), "solvsym");
  std::vector<const char*> argv;
  argv.reserve(argv_like.size());
  for (const auto& a : argv_like) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << "run with --help for usage\n";
    return 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt, out);
  } catch (const algebra::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const algebra::ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace solvsym::cli
