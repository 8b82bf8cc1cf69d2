#include "gammatri/io.hpp"

#include <fstream>

namespace gammatri {

namespace {

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError(what + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

BigInt parse_coefficient(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) throw FormatError("polynomial coefficient must be a decimal string or integer");
  const auto s = j.get<std::string>();
  const std::size_t digits_from = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos)
    throw FormatError("polynomial coefficient '" + s + "' is not a decimal integer");
  return BigInt(s);
}

int parse_exponent(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw FormatError("polynomial exponent must be a nonnegative integer");
  return j.get<int>();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Complex complex_from_json(const Json& j) {
  auto vertices = string_list(member(j, "vertices", "complex"), "complex vertices");
  const Json& facets = member(j, "facets", "complex");
  if (!facets.is_array()) throw FormatError("complex facets must be an array of arrays");
  std::vector<std::vector<std::string>> fs;
  for (const auto& f : facets) fs.push_back(string_list(f, "complex facet"));
  return Complex::from_facets(std::move(vertices), fs);
}

Json complex_to_json(const Complex& c) {
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(c.labels_of(f));
  return Json{{"vertices", c.vertices()}, {"facets", facets}};
}

Subdivision subdivision_from_json(const Json& j) {
  Complex c = complex_from_json(member(j, "complex", "subdivision"));
  auto index_set = string_list(member(j, "index_set", "subdivision"), "subdivision index_set");
  const Json& sigma = member(j, "sigma", "subdivision");
  if (!sigma.is_object()) throw FormatError("subdivision sigma must be an object mapping vertices to index labels");
  std::map<std::string, std::vector<std::string>> sig;
  for (const auto& [v, labels] : sigma.items()) sig[v] = string_list(labels, "sigma of '" + v + "'");
  Subdivision s = Subdivision::from_labels(std::move(c), std::move(index_set), sig);
  validate_ball_property(s);
  return s;
}

Json subdivision_to_json(const Subdivision& s) {
  Json sigma = Json::object();
  const auto& vs = s.complex().vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) sigma[vs[v]] = s.labels_of(s.carriers()[v]);
  return Json{{"complex", complex_to_json(s.complex())}, {"index_set", s.index_set()}, {"sigma", sigma}};
}

CoxeterDiagram diagram_from_json(const Json& j) {
  auto vertices = string_list(member(j, "vertices", "diagram"), "diagram vertices");
  std::vector<CoxeterEdge> edges;
  if (j.contains("edges")) {
    const Json& es = j["edges"];
    if (!es.is_array()) throw FormatError("diagram edges must be an array");
    for (const auto& e : es) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_string() || !e[1].is_string())
        throw FormatError("diagram edge must be [u, v] or [u, v, m]");
      int label = 3;
      if (e.size() == 3) {
        if (!e[2].is_number_integer()) throw FormatError("diagram edge label must be an integer");
        label = e[2].get<int>();
      }
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), label});
    }
  }
  return CoxeterDiagram(std::move(vertices), std::move(edges));
}

Json diagram_to_json(const CoxeterDiagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges()) edges.push_back(Json::array({e.u, e.v, e.label}));
  return Json{{"vertices", d.vertices()}, {"edges", edges}};
}

Json poly_to_json(const IntPoly1& p) {
  Json out = Json::array();
  for (const auto& [i, c] : p.terms()) out.push_back(Json::array({i, c.str()}));
  return out;
}

Json poly_to_json(const IntPoly2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.i, e.j, c.str()}));
  return out;
}

IntPoly1 poly1_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("univariate polynomial must be an array of [i, c]");
  IntPoly1 p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw FormatError("univariate term must be [i, c]");
    p.add_term(parse_exponent(t[0]), parse_coefficient(t[1]));
  }
  return p;
}

IntPoly2 poly2_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be an array of [i, j, c]");
  IntPoly2 p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw FormatError("polynomial term must be [i, j, c]");
    p.add_term(parse_exponent(t[0]), parse_exponent(t[1]), parse_coefficient(t[2]));
  }
  return p;
}

Json gamma_triangle_to_json(const GammaTriangle& g) {
  return Json{{"degree", g.degree()}, {"coefficients", poly_to_json(g.coefficients())}};
}

Json series_to_json(const IntSeries& s) {
  Json coeffs = Json::array();
  for (int n = 0; n < s.order(); ++n) coeffs.push_back(poly_to_json(s.coeff(n)));
  return Json{{"order", s.order()}, {"coefficients", coeffs}};
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  return Json{{"suite", r.suite}, {"passed", r.ok()}, {"checks", checks}};
}

}  // namespace gammatri
