// gammatri: F, H and Gamma triangles of subdivisions and Coxeter types,
// generating series, and the verification suites.

#include "gammatri/clustermodels.hpp"
#include "gammatri/coxgamma.hpp"
#include "gammatri/io.hpp"
#include "gammatri/serieslab.hpp"
#include "gammatri/verify.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gammatri;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool use_color() { return isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr; }

std::string paint(const std::string& text, const char* code) {
  return use_color() ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string gamma_vector_string(const GammaVector& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.entries.size(); ++i) s += (i ? ", " : "") + g.entries[i].str();
  return s + ")";
}

Json gamma_vector_json(const GammaVector& g) {
  Json out = Json::array();
  for (const auto& e : g.entries) out.push_back(e.str());
  return out;
}

void print_gamma(const GammaTriangle& g, const std::string& out, const std::string& title) {
  if (out == "json") {
    Json j = gamma_triangle_to_json(g);
    j["type"] = title;
    j["gamma_vector"] = gamma_vector_json(g.row_sums());
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << title << "\nGamma-triangle (d = " << g.degree() << "): " << g.coefficients().to_string() << "\n"
            << render_matrix(g.coefficients(), g.degree(), TriangleShape::Gamma)
            << "gamma-vector: " << gamma_vector_string(g.row_sums()) << "\n";
}

// Prints F and H, then Gamma or the extraction failure. Returns the exit code.
int print_triangles(const SphereWithFacet& sph, const std::string& out) {
  const int d = sph.degree();
  const IntPoly2 F = f_triangle(sph);
  const IntPoly2 H = h_triangle_from_f(F, d);
  std::optional<GammaTriangle> gamma;
  std::optional<NotGammaRepresentable> failure;
  try {
    gamma = gamma_triangle_from_h(H, d);
  } catch (const NotGammaRepresentable& e) {
    failure = e;
  }
  if (out == "json") {
    Json j{{"degree", d}, {"F", poly_to_json(F)}, {"H", poly_to_json(H)}};
    if (gamma) {
      j["Gamma"] = poly_to_json(gamma->coefficients());
      j["gamma_vector"] = gamma_vector_json(gamma->row_sums());
    } else {
      j["Gamma"] = nullptr;
      j["not_gamma_representable"] = Json{{"row", failure->row()}, {"residual", failure->residual()}};
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "F-triangle (d = " << d << "): " << F.to_string() << "\n"
              << render_matrix(F, d, TriangleShape::F) << "\nH-triangle: " << H.to_string() << "\n"
              << render_matrix(H, d, TriangleShape::H) << "\n";
    if (gamma) {
      std::cout << "Gamma-triangle: " << gamma->coefficients().to_string() << "\n"
                << render_matrix(gamma->coefficients(), d, TriangleShape::Gamma)
                << "gamma-vector: " << gamma_vector_string(gamma->row_sums()) << "\n";
    } else {
      std::cout << "not Gamma-representable: row j = " << failure->row() << ", residual " << failure->residual() << "\n";
    }
  }
  return gamma ? 0 : 1;
}

GammaTriangle cluster_gamma(const std::string& type, int rank, int label, const std::string& method) {
  const auto components = normalize_type(type, rank, label);
  if (method == "local-sum") return gamma_triangle_diagram(standard_diagram(components));
  if (components.size() != 1)
    throw UsageError("method '" + method + "' needs an irreducible type; " + type + std::to_string(rank) +
                     " splits into several components, use --method local-sum");
  const TypedComponent& c = components.front();
  if (method == "model") {
    if (c.kind == CoxeterKind::A) return type_a_model_gamma(c.rank);
    if (c.kind == CoxeterKind::I2) return triangle_pipeline(sphere(dihedral_subdivision(c.dihedral_label))).Gamma;
    throw UsageError("method 'model' is available for types A and I2 only");
  }
  if (method == "formula") {
    switch (c.kind) {
      case CoxeterKind::A: return closed_form_triangle(ClosedKind::A, c.rank);
      case CoxeterKind::B: return closed_form_triangle(ClosedKind::B, c.rank);
      case CoxeterKind::D: return gamma_triangle_D(c.rank);
      case CoxeterKind::I2: return rank23_formula(c.dihedral_label, 2);
      case CoxeterKind::H3: return rank23_formula(10, 3);
      default: throw UsageError("no closed formula for " + c.name() + "; use --method local-sum");
    }
  }
  throw UsageError("unknown method '" + method + "'");
}

IntSeries named_series(const std::string& name, int order, const std::string& route) {
  const bool closed = route == "closed";
  if (name == "g") return closed ? g_base(order) : g_expansion_sum(order);
  if (name == "gA") return closed ? g_closed(SeriesKind::A, order) : g_sum(SeriesKind::A, order);
  if (name == "gB") return closed ? g_closed(SeriesKind::B, order) : g_sum(SeriesKind::B, order);
  if (name == "gD") return closed ? g_closed(SeriesKind::D, order) : g_sum(SeriesKind::D, order);
  if (name == "GA") return closed ? G_closed(SeriesKind::A, order) : G_sum(SeriesKind::A, order);
  if (name == "GB") return closed ? G_closed(SeriesKind::B, order) : G_sum(SeriesKind::B, order);
  if (name == "GD") return closed ? G_closed(SeriesKind::D, order) : G_D_assembled(order);
  throw UsageError("unknown series '" + name + "'");
}

int print_report(const Report& r, const std::string& out) {
  if (out == "json") {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else {
    for (const auto& c : r.checks)
      std::cout << (c.passed ? paint("PASS", "32") : paint("FAIL", "31")) << "  " << c.name << "  " << c.detail << "\n";
    std::cout << r.suite << ": " << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"F, H and Gamma triangles of simplicial subdivisions and finite Coxeter types"};
  app.require_subcommand(1);
  int exit_code = 0;
  const std::vector<std::string> out_choices{"table", "json"};

  auto* tri = app.add_subcommand("triangles", "F, H and Gamma triangles of a complex with a facet, or of a subdivision");
  std::string complex_file, facet, subdivision_file, tri_out = "table";
  auto* opt_complex = tri->add_option("--complex", complex_file, "Complex JSON file");
  tri->add_option("--facet", facet, "distinguished facet, comma-separated vertex labels")->needs(opt_complex);
  auto* opt_sub = tri->add_option("--subdivision", subdivision_file, "Subdivision JSON file");
  opt_complex->excludes(opt_sub);
  tri->add_option("--out", tri_out)->check(CLI::IsMember(out_choices));

  auto* cluster = app.add_subcommand("cluster", "Gamma triangle of a finite Coxeter type");
  std::string type, method = "local-sum", cluster_out = "table";
  int rank = 0, label = 0;
  cluster->add_option("--type", type, "A, B, C, D, E, F, G, H or I2")->required();
  cluster->add_option("--rank", rank, "rank (for I2 without --label: the dihedral label)")->required();
  cluster->add_option("--label", label, "dihedral label m of I2(m)");
  cluster->add_option("--method", method)->check(CLI::IsMember({"model", "formula", "local-sum"}));
  cluster->add_option("--out", cluster_out)->check(CLI::IsMember(out_choices));

  auto* diagram = app.add_subcommand("diagram", "classify a Coxeter diagram and print its Gamma triangle");
  std::string diagram_file, diagram_out = "table";
  diagram->add_option("--file", diagram_file, "Diagram JSON file")->required();
  diagram->add_option("--out", diagram_out)->check(CLI::IsMember(out_choices));

  auto* local = app.add_subcommand("local", "local h- and gamma-polynomials of a subdivision");
  std::string local_file, local_out = "table";
  local->add_option("--subdivision", local_file, "Subdivision JSON file")->required();
  local->add_option("--out", local_out)->check(CLI::IsMember(out_choices));

  auto* series = app.add_subcommand("series", "truncated generating series");
  std::string series_name, route = "closed", series_out = "json";
  int series_order = 10;
  series->add_option("--name", series_name)->required()->check(CLI::IsMember({"g", "gA", "gB", "gD", "GA", "GB", "GD"}));
  series->add_option("--order", series_order, "truncation order N (terms t^0 .. t^{N-1})")->check(CLI::Range(1, 200));
  series->add_option("--route", route)->check(CLI::IsMember({"closed", "sum"}));
  series->add_option("--out", series_out)->check(CLI::IsMember(out_choices));

  auto* family = app.add_subcommand("family", "u_n of the Lucas or Pell recursion");
  std::string family_name, family_out = "table";
  int family_n = 0;
  family->add_option("--name", family_name)->required()->check(CLI::IsMember({"lucas", "pell"}));
  family->add_option("--n", family_n)->required()->check(CLI::NonNegativeNumber);
  family->add_option("--out", family_out)->check(CLI::IsMember(out_choices));

  auto* verify = app.add_subcommand("verify", "run a verification suite; exit status 0 iff every check passes");
  std::string suite = "all", verify_out = "table";
  int order = 24, max_rank = 6;
  verify->add_option("--suite", suite)->check(CLI::IsMember({"tables", "series", "crosscheck", "all"}));
  verify->add_option("--order", order)->check(CLI::Range(6, 200));
  verify->add_option("--max-rank,--max_rank", max_rank)->check(CLI::Range(1, 8));
  verify->add_option("--out", verify_out)->check(CLI::IsMember(out_choices));

  auto* exporter = app.add_subcommand("export", "write a model subdivision as Subdivision JSON");
  std::string model, export_file;
  int model_n = 0;
  exporter->add_option("--model", model, "A (rank n) or I2 (label m)")->required()->check(CLI::IsMember({"A", "I2"}));
  exporter->add_option("--n", model_n)->required();
  exporter->add_option("--output", export_file, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tri) {
      if (!complex_file.empty()) {
        if (facet.empty()) throw UsageError("--complex needs --facet");
        const Complex c = complex_from_json(read_json_file(complex_file));
        exit_code = print_triangles(SphereWithFacet(c, c.face_from_labels(split_labels(facet))), tri_out);
      } else if (!subdivision_file.empty()) {
        exit_code = print_triangles(sphere(subdivision_from_json(read_json_file(subdivision_file))), tri_out);
      } else {
        throw UsageError("give --complex with --facet, or --subdivision");
      }
    } else if (*cluster) {
      const GammaTriangle g = cluster_gamma(type, rank, label, method);
      std::string title = type + std::to_string(rank);
      if (label) title += "(" + std::to_string(label) + ")";
      print_gamma(g, cluster_out, title + " via " + method);
    } else if (*diagram) {
      const CoxeterDiagram dgm = diagram_from_json(read_json_file(diagram_file));
      std::string types;
      for (const auto& c : classify(dgm)) types += (types.empty() ? "" : " x ") + c.name();
      print_gamma(gamma_triangle_diagram(dgm), diagram_out, types.empty() ? "empty diagram" : types);
    } else if (*local) {
      const Subdivision s = subdivision_from_json(read_json_file(local_file));
      const IntPoly1 h = local_h(s);
      const GammaVector g = gamma_from_h(h, s.rank());
      if (local_out == "json") {
        std::cout << Json{{"rank", s.rank()}, {"local_h", poly_to_json(h)}, {"local_gamma", poly_to_json(g.as_polynomial())}}.dump()
                  << "\n";
      } else {
        std::cout << "local h: " << h.to_string() << "\nlocal gamma: " << g.as_polynomial().to_string() << "\n";
      }
    } else if (*series) {
      const IntSeries s = named_series(series_name, series_order, route);
      if (series_out == "json") {
        Json j = series_to_json(s);
        j["name"] = series_name;
        j["route"] = route;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << series_name << " = " << s.to_string() << "\n";
      }
    } else if (*family) {
      const IntPoly2 u = family_recursion(family_name == "lucas" ? Family::Lucas : Family::Pell, family_n);
      if (family_out == "json")
        std::cout << Json{{"name", family_name}, {"n", family_n}, {"u", poly_to_json(u)}}.dump() << "\n";
      else
        std::cout << "u_" << family_n << " = " << u.to_string() << "\n";
    } else if (*verify) {
      exit_code = print_report(run_suite(suite, order, max_rank), verify_out);
    } else if (*exporter) {
      const Subdivision s = model == "A" ? type_a_subdivision(model_n) : dihedral_subdivision(model_n);
      const std::string text = subdivision_to_json(s).dump(2) + "\n";
      if (export_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(export_file);
        if (!f) throw FormatError(export_file + ": cannot open for writing");
        f << text;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const ClassificationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotGammaRepresentable& e) {
    std::cerr << "not Gamma-representable: row j = " << e.row() << ", residual " << e.residual() << "\n";
    return 1;
  }
  return exit_code;
}
