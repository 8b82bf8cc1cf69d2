#include "gammatri/verify.hpp"

#include "gammatri/clustermodels.hpp"
#include "gammatri/serieslab.hpp"

namespace gammatri {

namespace {

std::string show(const IntPoly2& p) { return p.to_string(); }

void add_equal(Report& r, const std::string& name, const IntPoly2& got, const IntPoly2& expected) {
  if (got == expected)
    r.add(name, true, show(got));
  else
    r.add(name, false, "got " + show(got) + ", expected " + show(expected));
}

void add_equal(Report& r, const std::string& name, const IntPoly1& got, const IntPoly1& expected) {
  if (got == expected)
    r.add(name, true, got.to_string());
  else
    r.add(name, false, "got " + got.to_string() + ", expected " + expected.to_string());
}

// γ_{0,j} = [j = d] and every entry >= 0.
void add_shape_checks(Report& r, const std::string& name, const GammaTriangle& g) {
  bool top = true;
  for (int j = 0; j <= g.degree(); ++j)
    if (g.coeff(0, j) != (j == g.degree() ? 1 : 0)) top = false;
  r.add(name + ".first_column", top, top ? "gamma_{0,j} = [j = d]" : show(g.coefficients()));
  bool nonneg = true;
  for (const auto& [e, c] : g.coefficients().terms())
    if (c < 0) nonneg = false;
  r.add(name + ".nonnegative", nonneg, nonneg ? "all entries >= 0" : show(g.coefficients()));
}

// Row sums of Γ against the γ-vector of H(x, 1) with H rebuilt from Γ.
void add_row_sum_check(Report& r, const std::string& name, const GammaTriangle& g) {
  const IntPoly1 h = h_triangle_from_gamma(g).at_y_one();
  const bool ok = gamma_from_h(h, g.degree()) == g.row_sums();
  r.add(name + ".row_sums", ok, ok ? "row sums give the gamma-vector of H(x,1)" : "row sums disagree with H(x,1)");
}

Subdivision type_a_cached(int n) {
  static std::map<int, Subdivision> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, type_a_subdivision(n)).first;
  return it->second;
}

}  // namespace

TriangleSet triangle_pipeline(const SphereWithFacet& sph) {
  TriangleSet t;
  t.degree = sph.degree();
  t.F = f_triangle(sph);
  t.H = h_triangle_from_f(t.F, t.degree);
  t.Gamma = gamma_triangle_from_h(t.H, t.degree);
  return t;
}

Complex polygon_boundary(int n) {
  if (n < 3) throw DomainError("polygon needs at least 3 vertices");
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
  for (int k = 0; k < n; ++k) vertices.push_back("v" + std::to_string(k));
  for (int k = 0; k < n; ++k) edges.push_back({vertices[k], vertices[(k + 1) % n]});
  return Complex::from_facets(vertices, edges);
}

TriangleSet polygon_expected(int n) {
  if (n < 3) throw DomainError("polygon needs at least 3 vertices");
  TriangleSet t;
  t.degree = 2;
  t.F = IntPoly2{{0, 2, 1}, {0, 1, 2}, {1, 1, 2}, {0, 0, 1}, {1, 0, n - 2}, {2, 0, n - 3}};
  t.H = IntPoly2{{2, 2, 1}, {1, 1, 2}, {0, 0, 1}, {1, 0, n - 4}};
  t.Gamma = GammaTriangle(IntPoly2{{0, 2, 1}, {1, 0, n - 4}}, 2);
  return t;
}

GammaTriangle type_a_model_gamma(int n) { return triangle_pipeline(sphere(type_a_cached(n))).Gamma; }

Report model_invariants(const Subdivision& s, const std::string& name) {
  Report r;
  r.suite = "model";
  const SphereWithFacet sph = sphere(s);
  const int d = s.rank();
  const TriangleSet t = triangle_pipeline(sph);

  add_equal(r, name + ".F_at_y_equals_x", t.F.at_y_equals_x(), f_polynomial(sph.complex()));
  add_equal(r, name + ".H_at_y_one", t.H.at_y_one(), h_from_f(f_polynomial(sph.complex()), d));
  add_equal(r, name + ".F_H_round_trip", f_triangle_from_h(t.H, d), t.F);
  add_equal(r, name + ".H_direct", h_triangle_direct(s), t.H);
  add_equal(r, name + ".Gamma_local_sum", gamma_from_local_sum(s).coefficients(), t.Gamma.coefficients());
  add_equal(r, name + ".Gamma_H_round_trip", h_triangle_from_gamma(t.Gamma), t.H);
  add_equal(r, name + ".Gamma_bottom_row", t.Gamma.bottom_row(), local_gamma(s));

  const IntPoly1 hl = local_h(s);
  r.add(name + ".local_h_symmetric", hl.is_symmetric(d), hl.to_string());

  const auto all = local_h_all(s);
  IntPoly1 total;
  for (const auto& p : all) total += p;
  add_equal(r, name + ".mobius_inversion", total, h_from_f(f_polynomial(s.complex()), d));

  add_row_sum_check(r, name, t.Gamma);
  return r;
}

Report tables_suite() {
  Report r;
  r.suite = "tables";

  const TableReport tables = verify_tables();
  for (const auto& name : tables.tables_checked) {
    std::string detail;
    for (const auto& m : tables.mismatches)
      if (m.table == name && detail.empty())
        detail = "(i,j)=(" + std::to_string(m.i) + "," + std::to_string(m.j) + ") expected " + m.expected.str() +
                 " got " + m.got.str();
    r.add("table." + name, detail.empty(), detail.empty() ? "all entries reproduced" : detail);
  }
  for (const auto& table : reference_tables()) {
    const GammaTriangle g = gamma_triangle_diagram(standard_diagram(table.type));
    add_shape_checks(r, "table." + table.name, g);
    add_row_sum_check(r, "table." + table.name, g);
  }

  for (int h = 2; h <= 12; ++h) {
    const std::string name = "rank2.h" + std::to_string(h);
    const IntPoly2 formula = rank23_formula(h, 2).coefficients();
    add_equal(r, name + ".diagram", gamma_triangle_diagram(standard_diagram(normalize_type("I2", 2, h))).coefficients(),
              formula);
    add_equal(r, name + ".model", triangle_pipeline(sphere(dihedral_subdivision(h))).Gamma.coefficients(), formula);
  }
  const std::vector<std::pair<int, std::vector<TypedComponent>>> rank3 = {
      {2, {{CoxeterKind::A, 1, 0}, {CoxeterKind::A, 1, 0}, {CoxeterKind::A, 1, 0}}},
      {4, {{CoxeterKind::A, 3, 0}}},
      {6, {{CoxeterKind::B, 3, 0}}},
      {10, {{CoxeterKind::H3, 3, 0}}},
  };
  for (const auto& [h, type] : rank3)
    add_equal(r, "rank3.h" + std::to_string(h), gamma_triangle_diagram(standard_diagram(type)).coefficients(),
              rank23_formula(h, 3).coefficients());

  for (int n = 1; n <= 8; ++n)
    add_equal(r, "closed_A" + std::to_string(n), closed_form_triangle(ClosedKind::A, n).coefficients(),
              gamma_triangle_diagram(standard_diagram(normalize_type("A", n))).coefficients());
  for (int n = 2; n <= 8; ++n)
    add_equal(r, "closed_B" + std::to_string(n), closed_form_triangle(ClosedKind::B, n).coefficients(),
              gamma_triangle_diagram(standard_diagram(normalize_type("B", n))).coefficients());
  for (int n = 3; n <= 8; ++n)
    add_equal(r, "closed_D" + std::to_string(n), gamma_triangle_D(n).coefficients(),
              gamma_triangle_diagram(standard_diagram(normalize_type("D", n))).coefficients());

  r.add("pell_discriminant", pell_discriminant_check(), show(pell_discriminant()));
  return r;
}

Report series_suite(int order) {
  Report r = verify_identities(order);
  r.suite = "series";
  r.append(convolution_check(6, 6, 6));
  r.append(binomial_identity_check(40));
  const IntSeries GA = G_sum(SeriesKind::A, std::min(order, 9));
  for (int n = 1; n < GA.order(); ++n)
    add_equal(r, "GA_coefficient_t" + std::to_string(n), GA.coeff(n),
              gamma_triangle_diagram(standard_diagram(normalize_type("A", n))).coefficients());
  return r;
}

Report crosscheck_suite(int max_rank) {
  if (max_rank < 1) throw DomainError("max rank must be >= 1");
  Report r;
  r.suite = "crosscheck";

  for (int n = 1; n <= max_rank; ++n) {
    const std::string name = "A" + std::to_string(n);
    const Subdivision s = type_a_cached(n);
    const TriangleSet t = triangle_pipeline(sphere(s));
    const IntPoly2 closed = closed_form_triangle(ClosedKind::A, n).coefficients();
    add_equal(r, name + ".model_vs_local_sum", t.Gamma.coefficients(), gamma_from_local_sum(s).coefficients());
    add_equal(r, name + ".model_vs_closed_form", t.Gamma.coefficients(), closed);
    add_equal(r, name + ".model_vs_diagram", t.Gamma.coefficients(),
              gamma_triangle_diagram(standard_diagram(normalize_type("A", n))).coefficients());
    r.append(model_invariants(s, name));

    const SphereWithFacet sph = sphere(s);
    const BigInt catalan = exact_div(binom(2 * n + 2, n + 1), n + 2, "Catalan number");
    r.add(name + ".facet_count", BigInt(sph.complex().facets().size()) == catalan,
          std::to_string(sph.complex().facets().size()) + " facets, Catalan " + catalan.str());
    r.add(name + ".flag", is_flag(sph.complex()), "sphere is flag");

    IntPoly1 roots;
    for (const auto& [support, count] : count_roots_by_support(n)) roots.add_term(n - support, count);
    IntPoly1 second_column;
    for (int l = 0; l <= n; ++l) second_column.add_term(l, t.Gamma.coeff(1, l));
    add_equal(r, name + ".gamma_1_root_supports", second_column, roots);
    add_shape_checks(r, name, t.Gamma);
  }

  for (int m = 2; m <= 10; ++m) r.append(model_invariants(dihedral_subdivision(m), "I2(" + std::to_string(m) + ")"));

  for (int n = 3; n <= 12; ++n) {
    const std::string name = "polygon" + std::to_string(n);
    const TriangleSet expected = polygon_expected(n);
    const Complex poly = polygon_boundary(n);
    const TriangleSet got = n == 3 ? triangle_pipeline(SphereWithFacet(poly, Face{0, 1}))
                                   : triangle_pipeline(sphere(dihedral_subdivision(n - 2)));
    add_equal(r, name + ".F", got.F, expected.F);
    add_equal(r, name + ".H", got.H, expected.H);
    add_equal(r, name + ".Gamma", got.Gamma.coefficients(), expected.Gamma.coefficients());
  }

  {
    const Subdivision a2 = type_a_cached(2);
    add_equal(r, "join_A2_A2.local_gamma", local_gamma(join(a2, a2)), local_gamma(a2) * local_gamma(a2));
  }
  return r;
}

Report run_suite(const std::string& name, int order, int max_rank) {
  if (name == "tables") return tables_suite();
  if (name == "series") return series_suite(order);
  if (name == "crosscheck") return crosscheck_suite(max_rank);
  if (name == "all") {
    Report r = tables_suite();
    r.append(series_suite(order));
    r.append(crosscheck_suite(max_rank));
    r.suite = "all";
    return r;
  }
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace gammatri
