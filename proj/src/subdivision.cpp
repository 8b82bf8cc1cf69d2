#include "gammatri/subdivision.hpp"

#include <algorithm>

namespace gammatri {

namespace {

std::string mask_string(const Subdivision& s, IndexMask m) {
  std::string out = "{";
  for (const auto& l : s.labels_of(m)) out += (out.size() > 1 ? "," : "") + l;
  return out + "}";
}

// Face counts by (carrier, cardinality), the empty face included.
std::vector<std::vector<long>> carrier_profile(const Subdivision& s) {
  const auto faces = all_faces(s.complex());
  std::vector<std::vector<long>> counts(std::size_t{1} << s.rank(), std::vector<long>(faces.size(), 0));
  for (std::size_t size = 0; size < faces.size(); ++size)
    for (const auto& f : faces[size]) ++counts[s.carrier(f)][size];
  return counts;
}

// Maps the bits of m that lie in K onto consecutive positions.
IndexMask compress(IndexMask m, IndexMask K) {
  IndexMask out = 0;
  int pos = 0;
  for (int b = 0; b < 32; ++b) {
    if (!(K & (IndexMask{1} << b))) continue;
    if (m & (IndexMask{1} << b)) out |= IndexMask{1} << pos;
    ++pos;
  }
  return out;
}

}  // namespace

Subdivision::Subdivision(Complex complex, std::vector<std::string> index_set, std::vector<IndexMask> carriers)
    : complex_(std::move(complex)), index_set_(std::move(index_set)), carriers_(std::move(carriers)) {
  if (rank() > kMaxIndexSetSize) throw DomainError("index set larger than " + std::to_string(kMaxIndexSetSize));
  if (carriers_.size() != complex_.vertex_count()) throw FormatError("carrier map does not cover every vertex");
  for (std::size_t a = 0; a < index_set_.size(); ++a) {
    if (complex_.vertex_index(index_set_[a])) throw FormatError("index label '" + index_set_[a] + "' is also a vertex label");
    for (std::size_t b = a + 1; b < index_set_.size(); ++b)
      if (index_set_[a] == index_set_[b]) throw FormatError("duplicate index label '" + index_set_[a] + "'");
  }
  for (std::size_t v = 0; v < carriers_.size(); ++v) {
    if (carriers_[v] == 0) throw FormatError("vertex '" + complex_.vertices()[v] + "' has an empty carrier");
    if (carriers_[v] & ~full_mask()) throw FormatError("vertex '" + complex_.vertices()[v] + "' has a carrier outside I");
  }
}

Subdivision Subdivision::from_labels(Complex complex, std::vector<std::string> index_set,
                                     const std::map<std::string, std::vector<std::string>>& sigma) {
  std::vector<IndexMask> carriers;
  for (const auto& v : complex.vertices()) {
    auto it = sigma.find(v);
    if (it == sigma.end()) throw FormatError("vertex '" + v + "' has no carrier");
    IndexMask m = 0;
    for (const auto& l : it->second) {
      auto pos = std::find(index_set.begin(), index_set.end(), l);
      if (pos == index_set.end()) throw FormatError("carrier of '" + v + "' uses unknown index '" + l + "'");
      m |= IndexMask{1} << (pos - index_set.begin());
    }
    carriers.push_back(m);
  }
  for (const auto& [v, _] : sigma) {
    if (!complex.vertex_index(v)) throw FormatError("carrier given for unknown vertex '" + v + "'");
  }
  return Subdivision(std::move(complex), std::move(index_set), std::move(carriers));
}

IndexMask Subdivision::carrier(const Face& f) const {
  IndexMask m = 0;
  for (int v : f) m |= carriers_.at(v);
  return m;
}

IndexMask Subdivision::mask_of(const std::vector<std::string>& labels) const {
  IndexMask m = 0;
  for (const auto& l : labels) {
    auto pos = std::find(index_set_.begin(), index_set_.end(), l);
    if (pos == index_set_.end()) throw DomainError("'" + l + "' is not in the index set");
    m |= IndexMask{1} << (pos - index_set_.begin());
  }
  return m;
}

std::vector<std::string> Subdivision::labels_of(IndexMask m) const {
  std::vector<std::string> out;
  for (int b = 0; b < rank(); ++b)
    if (m & (IndexMask{1} << b)) out.push_back(index_set_[b]);
  return out;
}

Complex restrict(const Subdivision& s, IndexMask J) {
  if (J & ~s.full_mask()) throw DomainError("restriction set is not a subset of the index set");
  std::vector<Face> pieces;
  for (const auto& facet : s.complex().facets()) {
    Face piece;
    for (int v : facet)
      if ((s.carriers()[v] & ~J) == 0) piece.push_back(v);
    pieces.push_back(std::move(piece));
  }
  return Complex::generated_by(s.complex().vertices(), std::move(pieces));
}

Subdivision restrict_subdivision(const Subdivision& s, IndexMask K) {
  Complex c = restrict(s, K);
  std::vector<IndexMask> carriers;
  for (const auto& label : c.vertices()) {
    int old = *s.complex().vertex_index(label);
    carriers.push_back(compress(s.carriers()[old], K));
  }
  return Subdivision(std::move(c), s.labels_of(K), std::move(carriers));
}

BallValidation validate_ball_property(const Subdivision& s) {
  BallValidation report;
  report.checks_run = {"carrier map structure", "purity of every restriction", "dimension |J|-1 of every restriction",
                       "Euler characteristic 1 of every restriction"};
  const auto profile = carrier_profile(s);
  for (IndexMask J = 1; J <= s.full_mask() && J != 0; ++J) {
    Complex c = restrict(s, J);
    const std::string name = "restriction to " + mask_string(s, J);
    if (!is_pure(c)) throw FormatError(name + " is not pure");
    if (dimension(c) != popcount(J) - 1) {
      throw FormatError(name + " has dimension " + std::to_string(dimension(c)) + ", expected " +
                        std::to_string(popcount(J) - 1));
    }
    long euler = 0;
    for (IndexMask sub = J;; sub = (sub - 1) & J) {
      for (std::size_t size = 1; size < profile[sub].size(); ++size)
        euler += (size % 2 == 1 ? 1 : -1) * profile[sub][size];
      if (sub == 0) break;
    }
    if (euler != 1) throw FormatError(name + " has Euler characteristic " + std::to_string(euler) + ", expected 1");
    ++report.restrictions_checked;
  }
  return report;
}

std::vector<IntPoly1> restriction_f_polynomials(const Subdivision& s) {
  auto counts = carrier_profile(s);
  const int d = s.rank();
  // sum over subsets
  for (int b = 0; b < d; ++b) {
    for (IndexMask J = 0; J < counts.size(); ++J) {
      if (!(J & (IndexMask{1} << b))) continue;
      for (std::size_t k = 0; k < counts[J].size(); ++k) counts[J][k] += counts[J ^ (IndexMask{1} << b)][k];
    }
  }
  std::vector<IntPoly1> out;
  for (const auto& row : counts) {
    IntPoly1 f;
    for (std::size_t k = 0; k < row.size(); ++k) f.add_term(static_cast<int>(k), BigInt(row[k]));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<IntPoly1> restriction_h_polynomials(const Subdivision& s) {
  auto f = restriction_f_polynomials(s);
  std::vector<IntPoly1> h;
  for (IndexMask J = 0; J < f.size(); ++J) h.push_back(h_from_f(f[J], popcount(J)));
  return h;
}

std::vector<IntPoly1> local_h_all(const Subdivision& s) {
  const auto h = restriction_h_polynomials(s);
  std::vector<IntPoly1> local(h.size());
  for (IndexMask K = 0; K < h.size(); ++K) {
    for (IndexMask J = K;; J = (J - 1) & K) {
      if (popcount(K ^ J) % 2 == 0) {
        local[K] += h[J];
      } else {
        local[K] -= h[J];
      }
      if (J == 0) break;
    }
  }
  return local;
}

IntPoly1 local_h(const Subdivision& s) { return local_h_all(s).back(); }

IntPoly1 local_gamma(const Subdivision& s) { return gamma_from_h(local_h(s), s.rank()).as_polynomial(); }

SphereWithFacet::SphereWithFacet(Complex complex, Face facet) : complex_(std::move(complex)), facet_(std::move(facet)) {
  std::sort(facet_.begin(), facet_.end());
  if (!complex_.is_facet(facet_)) throw DomainError("distinguished face is not a facet");
}

SphereWithFacet sphere(const Subdivision& s) {
  std::vector<std::string> vertices = s.complex().vertices();
  const int offset = static_cast<int>(vertices.size());
  vertices.insert(vertices.end(), s.index_set().begin(), s.index_set().end());

  std::vector<Face> generators;
  for (const auto& group : all_faces(s.complex())) {
    for (const auto& f : group) {
      Face g = f;
      IndexMask free = s.full_mask() & ~s.carrier(f);
      for (int b = 0; b < s.rank(); ++b)
        if (free & (IndexMask{1} << b)) g.push_back(offset + b);
      generators.push_back(std::move(g));
    }
  }
  Complex c = Complex::generated_by(vertices, std::move(generators));
  Face T;
  for (const auto& l : s.index_set()) T.push_back(*c.vertex_index(l));
  return SphereWithFacet(std::move(c), std::move(T));
}

IntPoly2 f_triangle(const SphereWithFacet& sph) {
  const Face& T = sph.distinguished_facet();
  IntPoly2 F;
  for (const auto& group : all_faces(sph.complex())) {
    for (const auto& f : group) {
      auto inside = std::count_if(f.begin(), f.end(), [&](int v) { return std::binary_search(T.begin(), T.end(), v); });
      F.add_term(static_cast<int>(f.size() - inside), static_cast<int>(inside), 1);
    }
  }
  return F;
}

GammaTriangle gamma_from_local_sum(const Subdivision& s) {
  const auto local = local_h_all(s);
  const int d = s.rank();
  IntPoly2 gamma;
  for (IndexMask K = 0; K < local.size(); ++K) {
    const int k = popcount(K);
    IntPoly1 g = K == 0 ? IntPoly1::constant(1) : gamma_from_h(local[K], k).as_polynomial();
    gamma += IntPoly2::from_x(g, d - k);
  }
  return GammaTriangle(std::move(gamma), d);
}

IntPoly2 h_triangle_direct(const Subdivision& s) {
  const auto h = restriction_h_polynomials(s);
  IntPoly2 H;
  for (IndexMask J = 0; J < h.size(); ++J) {
    const int j = popcount(J);
    H += IntPoly2::from_x(h[s.full_mask() & ~J]).shifted(j, j);
  }
  return H;
}

Subdivision join(const Subdivision& a, const Subdivision& b) {
  if (a.rank() + b.rank() > kMaxIndexSetSize) throw DomainError("joined index set too large");
  std::vector<std::string> taken = a.complex().vertices();
  taken.insert(taken.end(), a.index_set().begin(), a.index_set().end());
  taken.insert(taken.end(), b.complex().vertices().begin(), b.complex().vertices().end());

  std::vector<std::string> index_set = a.index_set();
  for (const auto& l : b.index_set()) {
    std::string fresh = fresh_label(l, taken);
    taken.push_back(fresh);
    index_set.push_back(fresh);
  }
  std::vector<std::string> vertices = a.complex().vertices();
  std::vector<std::string> avoid = index_set;
  avoid.insert(avoid.end(), vertices.begin(), vertices.end());
  for (const auto& l : b.complex().vertices()) {
    std::string fresh = fresh_label(l, avoid);
    avoid.push_back(fresh);
    vertices.push_back(fresh);
  }

  const int offset = static_cast<int>(a.complex().vertex_count());
  const std::vector<Face> empty_only{Face{}};
  const auto& fa = a.complex().facets().empty() ? empty_only : a.complex().facets();
  const auto& fb = b.complex().facets().empty() ? empty_only : b.complex().facets();
  std::vector<Face> facets;
  for (const auto& f : fa) {
    for (const auto& g : fb) {
      Face u = f;
      for (int v : g) u.push_back(v + offset);
      facets.push_back(std::move(u));
    }
  }
  Complex c = Complex::generated_by(vertices, std::move(facets));

  std::vector<IndexMask> carriers;
  for (const auto& label : c.vertices()) {
    int v = static_cast<int>(std::find(vertices.begin(), vertices.end(), label) - vertices.begin());
    carriers.push_back(v < offset ? a.carriers()[v] : b.carriers()[v - offset] << a.rank());
  }
  return Subdivision(std::move(c), std::move(index_set), std::move(carriers));
}

}  // namespace gammatri
