#include "gammatri/coxgamma.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace gammatri {

namespace {

constexpr int kMaxDiagramSize = 20;

std::string component_labels(const CoxeterDiagram& dgm, std::uint32_t mask) {
  std::string s;
  for (int v = 0; v < dgm.size(); ++v)
    if (mask & (1u << v)) s += (s.empty() ? "" : ",") + dgm.vertices()[v];
  return "{" + s + "}";
}

TypedComponent classify_component(const CoxeterDiagram& dgm, std::uint32_t mask) {
  std::vector<int> verts;
  for (int v = 0; v < dgm.size(); ++v)
    if (mask & (1u << v)) verts.push_back(v);
  const int n = static_cast<int>(verts.size());
  auto fail = [&](const std::string& why) {
    return ClassificationError("component " + component_labels(dgm, mask) + " is not of finite type: " + why);
  };
  if (n == 1) return {CoxeterKind::A, 1, 0};

  std::map<int, int> degree;
  int edge_count = 0;
  std::vector<std::pair<int, int>> heavy;
  for (int a : verts) {
    for (int b : verts) {
      if (a < b && dgm.label(a, b) > 2) {
        ++edge_count;
        ++degree[a];
        ++degree[b];
        if (dgm.label(a, b) > 3) heavy.emplace_back(a, b);
      }
    }
  }
  if (edge_count != n - 1) throw fail("contains a cycle");
  if (n == 2) {
    int m = dgm.label(verts[0], verts[1]);
    if (m == 3) return {CoxeterKind::A, 2, 0};
    return {CoxeterKind::I2, 2, m};
  }
  if (heavy.size() > 1) throw fail("more than one edge labelled above 3");
  int max_degree = 0;
  for (const auto& [v, d] : degree) max_degree = std::max(max_degree, d);

  if (heavy.empty()) {
    if (max_degree <= 2) return {CoxeterKind::A, n, 0};
    std::vector<int> branch;
    for (const auto& [v, d] : degree)
      if (d >= 3) branch.push_back(v);
    if (branch.size() != 1 || max_degree != 3) throw fail("branching not of type D or E");
    const int center = branch.front();
    CoxeterDiagram rest = dgm.induced(mask & ~(1u << center));
    std::vector<int> arms;
    for (auto comp : rest.components()) arms.push_back(std::popcount(comp));
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw fail("branching not of type D or E");
    if (arms[0] == 1 && arms[1] == 1) return {CoxeterKind::D, n, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return {CoxeterKind::E6, 6, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return {CoxeterKind::E7, 7, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return {CoxeterKind::E8, 8, 0};
    throw fail("branch arms of lengths not in a finite type");
  }

  if (max_degree > 2) throw fail("branched diagram with a labelled edge");
  const auto [a, b] = heavy.front();
  const int m = dgm.label(a, b);
  const bool at_end = degree[a] == 1 || degree[b] == 1;
  if (m == 4 && at_end) return {CoxeterKind::B, n, 0};
  if (m == 4 && n == 4) return {CoxeterKind::F4, 4, 0};
  if (m == 5 && at_end && n == 3) return {CoxeterKind::H3, 3, 0};
  if (m == 5 && at_end && n == 4) return {CoxeterKind::H4, 4, 0};
  throw fail("labelled edge not in a finite type position");
}

IntPoly1 stored_local_gamma(CoxeterKind kind) {
  // bottom rows of the reference tables; H3 from the rank 3 formula at h = 10
  switch (kind) {
    case CoxeterKind::H3: return IntPoly1{{1, 8}};
    case CoxeterKind::H4: return IntPoly1{{1, 42}, {2, 40}};
    case CoxeterKind::F4: return IntPoly1{{1, 10}, {2, 9}};
    case CoxeterKind::E6: return IntPoly1{{1, 7}, {2, 35}, {3, 13}};
    case CoxeterKind::E7: return IntPoly1{{1, 16}, {2, 124}, {3, 112}};
    case CoxeterKind::E8: return IntPoly1{{1, 44}, {2, 484}, {3, 784}, {4, 120}};
    default: break;
  }
  throw std::logic_error("no stored local gamma for this type");
}

}  // namespace

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> vertices, std::vector<CoxeterEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (size() > kMaxDiagramSize) throw FormatError("diagram has more than " + std::to_string(kMaxDiagramSize) + " vertices");
  labels_.assign(vertices_.size(), std::vector<int>(vertices_.size(), 2));
  auto index = [&](const std::string& l) {
    auto it = std::find(vertices_.begin(), vertices_.end(), l);
    if (it == vertices_.end()) throw FormatError("edge endpoint '" + l + "' is not a vertex");
    return static_cast<int>(it - vertices_.begin());
  };
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b)
      if (vertices_[a] == vertices_[b]) throw FormatError("duplicate diagram vertex '" + vertices_[a] + "'");
  for (const auto& e : edges_) {
    int a = index(e.u), b = index(e.v);
    if (a == b) throw FormatError("loop at diagram vertex '" + e.u + "'");
    if (e.label < 3) throw FormatError("edge label below 3 between '" + e.u + "' and '" + e.v + "'");
    if (labels_[a][b] != 2) throw FormatError("repeated edge between '" + e.u + "' and '" + e.v + "'");
    labels_[a][b] = labels_[b][a] = e.label;
  }
}

CoxeterDiagram CoxeterDiagram::induced(std::uint32_t keep) const {
  std::vector<std::string> vs;
  for (int v = 0; v < size(); ++v)
    if (keep & (1u << v)) vs.push_back(vertices_[v]);
  std::vector<CoxeterEdge> es;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if ((keep & (1u << a)) && (keep & (1u << b)) && labels_[a][b] > 2) es.push_back({vertices_[a], vertices_[b], labels_[a][b]});
  return CoxeterDiagram(std::move(vs), std::move(es));
}

std::vector<std::uint32_t> CoxeterDiagram::components() const {
  std::vector<std::uint32_t> out;
  std::uint32_t seen = 0;
  for (int start = 0; start < size(); ++start) {
    if (seen & (1u << start)) continue;
    std::uint32_t comp = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < size(); ++w) {
        if (labels_[v][w] > 2 && !(comp & (1u << w))) {
          comp |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::string TypedComponent::name() const {
  switch (kind) {
    case CoxeterKind::A: return "A" + std::to_string(rank);
    case CoxeterKind::B: return "B" + std::to_string(rank);
    case CoxeterKind::D: return "D" + std::to_string(rank);
    case CoxeterKind::I2: return "I2(" + std::to_string(dihedral_label) + ")";
    case CoxeterKind::H3: return "H3";
    case CoxeterKind::H4: return "H4";
    case CoxeterKind::F4: return "F4";
    case CoxeterKind::E6: return "E6";
    case CoxeterKind::E7: return "E7";
    case CoxeterKind::E8: return "E8";
  }
  return "?";
}

std::vector<TypedComponent> classify(const CoxeterDiagram& dgm) {
  std::vector<TypedComponent> out;
  for (auto comp : dgm.components()) out.push_back(classify_component(dgm, comp));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TypedComponent> normalize_type(const std::string& kind_in, int rank, int label) {
  std::string kind = kind_in;
  if (kind == "C") kind = "B";
  auto bad = [&] { return DomainError("no finite type " + kind_in + " of rank " + std::to_string(rank)); };
  const TypedComponent a1{CoxeterKind::A, 1, 0};
  if (kind == "I2" || kind == "I") {
    if (label == 0) label = rank;  // "I2 --rank m" shorthand
    if (label == 2) return {a1, a1};
    if (label == 3) return {{CoxeterKind::A, 2, 0}};
    if (label < 2) throw DomainError("dihedral label must be >= 2");
    return {{CoxeterKind::I2, 2, label}};
  }
  if (rank < 1) throw bad();
  if (kind == "A") return {{CoxeterKind::A, rank, 0}};
  if (kind == "B") {
    if (rank == 1) return {a1};
    if (rank == 2) return {{CoxeterKind::I2, 2, 4}};
    return {{CoxeterKind::B, rank, 0}};
  }
  if (kind == "D") {
    if (rank == 2) return {a1, a1};
    if (rank == 3) return {{CoxeterKind::A, 3, 0}};
    if (rank < 2) throw bad();
    return {{CoxeterKind::D, rank, 0}};
  }
  if (kind == "G" && rank == 2) return {{CoxeterKind::I2, 2, 6}};
  if (kind == "F" && rank == 4) return {{CoxeterKind::F4, 4, 0}};
  if (kind == "H" && rank == 3) return {{CoxeterKind::H3, 3, 0}};
  if (kind == "H" && rank == 4) return {{CoxeterKind::H4, 4, 0}};
  if (kind == "E" && rank == 6) return {{CoxeterKind::E6, 6, 0}};
  if (kind == "E" && rank == 7) return {{CoxeterKind::E7, 7, 0}};
  if (kind == "E" && rank == 8) return {{CoxeterKind::E8, 8, 0}};
  throw bad();
}

CoxeterDiagram standard_diagram(const std::vector<TypedComponent>& components) {
  std::vector<std::string> vertices;
  std::vector<CoxeterEdge> edges;
  for (const auto& c : components) {
    const int base = static_cast<int>(vertices.size());
    auto v = [&](int k) { return std::to_string(base + k); };
    for (int k = 1; k <= c.rank; ++k) vertices.push_back(v(k));
    auto path = [&](int upto) {
      for (int k = 1; k < upto; ++k) edges.push_back({v(k), v(k + 1), 3});
    };
    switch (c.kind) {
      case CoxeterKind::A: path(c.rank); break;
      case CoxeterKind::B:
      case CoxeterKind::H3:
      case CoxeterKind::H4:
        edges.push_back({v(1), v(2), c.kind == CoxeterKind::B ? 4 : 5});
        for (int k = 2; k < c.rank; ++k) edges.push_back({v(k), v(k + 1), 3});
        break;
      case CoxeterKind::D:
        path(c.rank - 1);
        edges.push_back({v(c.rank - 2), v(c.rank), 3});
        break;
      case CoxeterKind::E6:
      case CoxeterKind::E7:
      case CoxeterKind::E8:
        path(c.rank - 1);
        edges.push_back({v(3), v(c.rank), 3});
        break;
      case CoxeterKind::F4:
        path(4);
        edges[edges.size() - 2].label = 4;
        break;
      case CoxeterKind::I2: edges.push_back({v(1), v(2), c.dihedral_label}); break;
    }
  }
  return CoxeterDiagram(std::move(vertices), std::move(edges));
}

IntPoly1 local_gamma_D_formula(int n) {
  if (n < 2) throw DomainError("D local gamma formula needs n >= 2");
  IntPoly1 p;
  for (int k = 1; 2 * k <= n; ++k) {
    const int m = n - 2 * k;
    BigInt num = BigInt(2 * k + m - 2) * binom(2 * k - 2, k - 1) * binom(2 * k + m - 2, 2 * k - 2);
    p.add_term(k, exact_div(num, k, "D local gamma"));
  }
  return p;
}

IntPoly1 local_gamma_poly(const TypedComponent& c) {
  IntPoly1 p;
  switch (c.kind) {
    case CoxeterKind::A:
      for (int k = 1; 2 * k <= c.rank; ++k) {
        const int m = c.rank - 2 * k;
        p.add_term(k, exact_div(binom(2 * k + m, k) * binom(k + m - 1, k - 1), k + m + 1, "A local gamma"));
      }
      return p;
    case CoxeterKind::B:
      for (int k = 1; 2 * k <= c.rank; ++k) {
        const int m = c.rank - 2 * k;
        p.add_term(k, binom(2 * k + m, k) * binom(k + m - 1, k - 1));
      }
      return p;
    case CoxeterKind::D: return local_gamma_D_formula(c.rank);
    case CoxeterKind::I2: return IntPoly1{{1, c.dihedral_label - 2}};
    default: return stored_local_gamma(c.kind);
  }
}

GammaTriangle gamma_triangle_diagram(const CoxeterDiagram& dgm) {
  const int d = dgm.size();
  std::map<TypedComponent, IntPoly1> cache;
  IntPoly2 gamma;
  for (std::uint32_t keep = 0; keep < (1u << d); ++keep) {
    IntPoly1 product = IntPoly1::constant(1);
    CoxeterDiagram sub = dgm.induced(keep);
    for (const auto& comp : classify(sub)) {
      auto it = cache.find(comp);
      if (it == cache.end()) it = cache.emplace(comp, local_gamma_poly(comp)).first;
      product *= it->second;
      if (product.is_zero()) break;
    }
    gamma += IntPoly2::from_x(product, d - std::popcount(keep));
  }
  return GammaTriangle(std::move(gamma), d);
}

BigInt gamma_coeff_closed(ClosedKind kind, int n, int k, int l) {
  if (k < 0 || l < 0 || l + 2 * k > n) throw DomainError("closed-form coefficient outside 0 <= k, 0 <= l, l + 2k <= n");
  if (k == 0) return l == n ? 1 : 0;
  BigInt core = binom(n, k) * binom(n - k - l - 1, k - 1);
  if (kind == ClosedKind::B) return core;
  return exact_div(core * (l + 1), n - k + 1, "type A closed form");
}

GammaTriangle closed_form_triangle(ClosedKind kind, int n) {
  if (n < 1) throw DomainError("closed form needs n >= 1");
  IntPoly2 gamma;
  for (int k = 0; 2 * k <= n; ++k)
    for (int l = 0; l + 2 * k <= n; ++l) gamma.add_term(k, l, gamma_coeff_closed(kind, n, k, l));
  return GammaTriangle(std::move(gamma), n);
}

GammaTriangle gamma_triangle_D(int n) {
  if (n < 3) throw DomainError("gamma_triangle_D needs n >= 3");
  IntPoly2 gamma = closed_form_triangle(ClosedKind::B, n - 1).coefficients().shifted(0, 1);
  gamma += IntPoly2::from_x(local_gamma_D_formula(n));
  return GammaTriangle(std::move(gamma), n);
}

GammaTriangle rank23_formula(int h, int rank) {
  if (rank == 2) {
    if (h < 2) throw DomainError("rank 2 formula needs h >= 2");
    return GammaTriangle(IntPoly2{{0, 2, 1}, {1, 0, h - 2}}, 2);
  }
  if (rank != 3) throw DomainError("rank23_formula covers ranks 2 and 3 only");
  if (h != 2 && h != 4 && h != 6 && h != 10) throw DomainError("rank 3 Coxeter number must be 2, 4, 6 or 10");
  BigInt xy, x;
  try {
    xy = exact_div(BigInt(6 * (h - 2)), h + 2, "rank 3 xy entry");
    x = exact_div(BigInt(3 * (h - 2) * (h - 2)), 2 * (h + 2), "rank 3 x entry");
  } catch (const std::logic_error& e) {
    throw DomainError(e.what());
  }
  return GammaTriangle(IntPoly2{{0, 3, 1}, {1, 1, xy}, {1, 0, x}}, 3);
}

IntPoly2 family_recursion(Family family, int n) {
  if (n < 0) throw DomainError("family index must be >= 0");
  IntPoly2 prev;                         // u_0
  IntPoly2 cur = IntPoly2::constant(1);  // u_1
  if (n == 0) return prev;
  const IntPoly2 p = family == Family::Lucas ? IntPoly2{{0, 2, 1}, {1, 0, 2}} : IntPoly2::y();
  const IntPoly2 q = family == Family::Lucas ? IntPoly2{{2, 0, -1}, {1, 1, 1}} : IntPoly2::x();
  for (int k = 1; k < n; ++k) {
    IntPoly2 next = p * cur + q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly2 pell_discriminant() {
  const IntPoly2 p = IntPoly2::y();
  const IntPoly2 q = IntPoly2::x();
  return p * p + q * BigInt(4);
}

bool pell_discriminant_check() {
  return pell_discriminant() == gamma_triangle_diagram(standard_diagram(normalize_type("I2", 2, 6))).coefficients();
}

GammaTriangle ReferenceTable::triangle() const {
  const int d = static_cast<int>(rows.size()) - 1;
  IntPoly2 gamma;
  for (int r = 0; r <= d; ++r)
    for (std::size_t i = 0; i < rows[r].size(); ++i) gamma.add_term(static_cast<int>(i), d - r, rows[r][i]);
  return GammaTriangle(std::move(gamma), d);
}

const std::vector<ReferenceTable>& reference_tables() {
  using K = CoxeterKind;
  static const std::vector<ReferenceTable> tables = {
      {"A4", {{K::A, 4, 0}}, {{1}, {0}, {0, 3}, {0, 2}, {0, 1, 2}}},
      {"B4", {{K::B, 4, 0}}, {{1}, {0}, {0, 4}, {0, 4}, {0, 4, 6}}},
      {"D4", {{K::D, 4, 0}}, {{1}, {0}, {0, 3}, {0, 3}, {0, 2, 2}}},
      {"F4", {{K::F4, 4, 0}}, {{1}, {0}, {0, 4}, {0, 6}, {0, 10, 9}}},
      {"H4", {{K::H4, 4, 0}}, {{1}, {0}, {0, 5}, {0, 9}, {0, 42, 40}}},
      {"E6", {{K::E6, 6, 0}}, {{1}, {0}, {0, 5}, {0, 5}, {0, 6, 11}, {0, 7, 23}, {0, 7, 35, 13}}},
      {"E7",
       {{K::E7, 7, 0}},
       {{1}, {0}, {0, 6}, {0, 6}, {0, 7, 16}, {0, 9, 36}, {0, 12, 69, 28}, {0, 16, 124, 112}}},
      {"E8",
       {{K::E8, 8, 0}},
       {{1}, {0}, {0, 7}, {0, 7}, {0, 8, 22}, {0, 10, 48}, {0, 14, 94, 46}, {0, 22, 192, 194}, {0, 44, 484, 784, 120}}},
      {"B5", {{K::B, 5, 0}}, {{1}, {0}, {0, 5}, {0, 5}, {0, 5, 10}, {0, 5, 20}}},
      {"D6", {{K::D, 6, 0}}, {{1}, {0}, {0, 5}, {0, 5}, {0, 5, 10}, {0, 5, 20}, {0, 4, 24, 8}}},
  };
  return tables;
}

TableReport verify_tables() {
  TableReport report;
  for (const auto& table : reference_tables()) {
    const GammaTriangle expected = table.triangle();
    const GammaTriangle got = gamma_triangle_diagram(standard_diagram(table.type));
    report.tables_checked.push_back(table.name);
    const int d = std::max(expected.degree(), got.degree());
    for (int j = 0; j <= d; ++j) {
      for (int i = 0; 2 * i + j <= d; ++i) {
        if (expected.coeff(i, j) != got.coeff(i, j)) {
          report.mismatches.push_back({table.name, i, j, expected.coeff(i, j), got.coeff(i, j)});
        }
      }
    }
    if (expected.degree() != got.degree()) {
      report.mismatches.push_back({table.name, -1, -1, expected.degree(), got.degree()});
    }
  }
  return report;
}

}  // namespace gammatri
