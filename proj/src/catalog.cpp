#include "solvsym/catalog.hpp"

#include <map>
#include <stdexcept>

namespace solvsym::catalog {

namespace {

using algebra::LieAlgebraModel;
using algebra::RationalForm;
using linalg::RationalMatrix;

RationalForm two_form(std::initializer_list<std::pair<std::pair<int, int>, int>> terms) {
  RationalForm f(2);
  for (const auto& [idx, c] : terms) f.add_term({idx.first, idx.second}, Rational(c));
  return f;
}

RationalForm one_form(std::initializer_list<std::pair<int, int>> terms) {
  RationalForm f(1);
  for (const auto& [i, c] : terms) f.add_term({i}, Rational(c));
  return f;
}

LieAlgebraModel make_model(const std::string& name,
                           std::initializer_list<RationalForm> differentials) {
  std::vector<std::string> basis;
  std::vector<RationalForm> d(differentials);
  const int dim = static_cast<int>(d.size());
  for (int i = 1; i <= dim; ++i) basis.push_back("e" + std::to_string(i));
  return LieAlgebraModel(name, dim, std::move(basis), std::move(d));
}

RationalMatrix j_from_images(std::initializer_list<std::pair<int, int>> images, int dim) {
  // images: generator index -> (target index, sign): J(e^i) = sign * e^target.
  RationalMatrix m(dim, dim);
  int col = 0;
  for (const auto& [target, sign] : images) {
    m(target - 1, col) = Rational(sign);
    ++col;
  }
  return m;
}

struct CatalogData {
  std::map<std::string, LieAlgebraModel> models;
  std::map<std::string, RationalForm> forms;
  std::map<std::string, RationalMatrix> js;
  std::map<std::string, std::string> model_notes;
  std::map<std::string, std::string> form_notes;
  std::map<std::string, std::string> j_notes;

  CatalogData() {
    RationalForm zero2(2);
    models.emplace("torus4", make_model("torus4", {zero2, zero2, zero2, zero2}));
    model_notes["torus4"] = "abelian; the 4-torus (zero differential)";

    models.emplace("kodaira_thurston",
                   make_model("kodaira_thurston",
                              {zero2, zero2, zero2, two_form({{{1, 2}, 1}})}));
    model_notes["kodaira_thurston"] =
        "nilpotent; de4 = e12; symplectic non-Kahler with b1 = 3";

    models.emplace("paper_example",
                   make_model("paper_example", {two_form({{{1, 3}, 1}}), two_form({{{2, 3}, -1}}),
                                                zero2, zero2}));
    // The algebra is solvable but not nilpotent; the catalog keeps the
    // conventional name.
    model_notes["paper_example"] =
        "solvable non-nilpotent; de1 = e13, de2 = -e23";

    forms.emplace("omega", two_form({{{1, 2}, 1}, {{3, 4}, 1}}));
    form_notes["omega"] = "e12 + e34; symplectic on torus4 and paper_example";
    forms.emplace("eta", two_form({{{1, 4}, 1}, {{2, 3}, 1}}));
    form_notes["eta"] = "e14 + e23; the LCS 2-form of paper_example";
    forms.emplace("theta", one_form({{3, -1}}));
    form_notes["theta"] = "-e3; Lee form paired with eta on paper_example";
    forms.emplace("kt_omega", two_form({{{1, 4}, 1}, {{2, 3}, 1}}));
    form_notes["kt_omega"] = "e14 + e23; symplectic on kodaira_thurston";
    forms.emplace("t4_omega", two_form({{{1, 2}, 1}, {{3, 4}, 1}}));
    form_notes["t4_omega"] = "e12 + e34; standard symplectic form on torus4";

    js.emplace("j0", j_from_images({{2, 1}, {1, -1}, {4, 1}, {3, -1}}, 4));
    j_notes["j0"] = "e1 -> e2, e2 -> -e1, e3 -> e4, e4 -> -e3; compatible with omega";
    js.emplace("j_eta", j_from_images({{4, 1}, {3, 1}, {2, -1}, {1, -1}}, 4));
    j_notes["j_eta"] = "e1 -> e4, e2 -> e3, e3 -> -e2, e4 -> -e1; compatible with eta";
    js.emplace("j_kt", j_from_images({{4, 1}, {3, 1}, {2, -1}, {1, -1}}, 4));
    j_notes["j_kt"] = "same matrix as j_eta; compatible with kt_omega";
  }
};

const CatalogData& data() {
  static const CatalogData d;
  return d;
}

template <typename M>
std::vector<std::string> keys(const M& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

}  // namespace

std::vector<std::string> model_names() { return keys(data().models); }
std::vector<std::string> form_names() { return keys(data().forms); }
std::vector<std::string> j_names() { return keys(data().js); }

bool has_model(const std::string& name) { return data().models.count(name) != 0; }
bool has_form(const std::string& name) { return data().forms.count(name) != 0; }
bool has_j(const std::string& name) { return data().js.count(name) != 0; }

const algebra::LieAlgebraModel& model(const std::string& name) {
  auto it = data().models.find(name);
  if (it == data().models.end()) throw std::invalid_argument("unknown catalog model: " + name);
  return it->second;
}

const algebra::RationalForm& form(const std::string& name) {
  auto it = data().forms.find(name);
  if (it == data().forms.end()) throw std::invalid_argument("unknown catalog form: " + name);
  return it->second;
}

const linalg::RationalMatrix& j_matrix(const std::string& name) {
  auto it = data().js.find(name);
  if (it == data().js.end()) throw std::invalid_argument("unknown catalog J: " + name);
  return it->second;
}

std::string describe_model(const std::string& name) { return data().model_notes.at(name); }
std::string describe_form(const std::string& name) { return data().form_notes.at(name); }
std::string describe_j(const std::string& name) { return data().j_notes.at(name); }

}  // namespace solvsym::catalog
