#include "gammatri/facecomplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gammatri {

namespace {

bool is_subset(const Face& small, const Face& big) {
  return small.size() <= big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Keeps the maximal elements of a list of sorted faces, sorted and deduplicated.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (auto& f : faces) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Face& k) { return k.size() > f.size() && is_subset(f, k); });
    if (!dominated) kept.push_back(std::move(f));
  }
  if (kept.size() == 1 && kept.front().empty()) kept.clear();
  std::sort(kept.begin(), kept.end());
  return kept;
}

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& clique, std::vector<int> candidates,
                   std::vector<int> excluded, std::vector<std::vector<int>>& out) {
  if (candidates.empty() && excluded.empty()) {
    auto c = clique;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  // pivot: the vertex covering most candidates
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* pool : {&candidates, &excluded}) {
    for (int u : *pool) {
      std::size_t n = std::count_if(candidates.begin(), candidates.end(), [&](int v) { return adj[u][v]; });
      if (pivot < 0 || n > best) {
        pivot = u;
        best = n;
      }
    }
  }
  std::vector<int> branch;
  for (int v : candidates)
    if (!adj[pivot][v]) branch.push_back(v);
  for (int v : branch) {
    std::vector<int> next_candidates, next_excluded;
    for (int u : candidates)
      if (adj[v][u]) next_candidates.push_back(u);
    for (int u : excluded)
      if (adj[v][u]) next_excluded.push_back(u);
    clique.push_back(v);
    bron_kerbosch(adj, clique, std::move(next_candidates), std::move(next_excluded), out);
    clique.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

}  // namespace

Complex Complex::from_facets(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& facets) {
  Complex c;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], static_cast<int>(i)).second) {
      throw FormatError("duplicate vertex label '" + vertices[i] + "'");
    }
  }
  c.vertices_ = std::move(vertices);

  std::vector<Face> faces;
  for (const auto& labels : facets) {
    Face f;
    for (const auto& l : labels) {
      auto it = index.find(l);
      if (it == index.end()) throw FormatError("facet uses unknown vertex '" + l + "'");
      f.push_back(it->second);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw FormatError("facet repeats a vertex");
    faces.push_back(std::move(f));
  }
  if (faces.size() == 1 && faces.front().empty()) faces.clear();

  for (std::size_t a = 0; a < faces.size(); ++a) {
    for (std::size_t b = 0; b < faces.size(); ++b) {
      if (a != b && is_subset(faces[a], faces[b])) {
        throw FormatError("facet {" + [&] {
          std::string s;
          for (int v : faces[a]) s += (s.empty() ? "" : ",") + c.vertices_[v];
          return s;
        }() + "} is not maximal");
      }
    }
  }
  std::vector<bool> used(c.vertices_.size(), false);
  for (const auto& f : faces)
    for (int v : f) used[v] = true;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) throw FormatError("vertex '" + c.vertices_[i] + "' lies in no facet");
  }
  std::sort(faces.begin(), faces.end());
  c.facets_ = std::move(faces);
  return c;
}

Complex Complex::generated_by(const std::vector<std::string>& vertices, std::vector<Face> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertices.size()) throw DomainError("face refers to a missing vertex");
    }
  }
  auto kept = maximal_faces(std::move(faces));

  std::vector<int> remap(vertices.size(), -1);
  for (const auto& f : kept)
    for (int v : f) remap[v] = 0;
  Complex c;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (remap[i] == 0) {
      remap[i] = static_cast<int>(c.vertices_.size());
      c.vertices_.push_back(vertices[i]);
    }
  }
  for (auto& f : kept)
    for (int& v : f) v = remap[v];
  std::sort(kept.begin(), kept.end());
  c.facets_ = std::move(kept);
  return c;
}

std::optional<int> Complex::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

Face Complex::face_from_labels(const std::vector<std::string>& labels) const {
  Face f;
  for (const auto& l : labels) {
    auto i = vertex_index(l);
    if (!i) throw DomainError("unknown vertex label '" + l + "'");
    f.push_back(*i);
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<std::string> Complex::labels_of(const Face& f) const {
  std::vector<std::string> out;
  for (int v : f) out.push_back(vertices_.at(v));
  return out;
}

bool Complex::contains_face(const Face& f) const {
  if (f.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(f, g); });
}

bool Complex::is_facet(const Face& f) const {
  if (f.empty()) return facets_.empty();
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::vector<std::vector<Face>> all_faces(const Complex& c) {
  std::vector<std::set<Face>> by_size(1);
  by_size[0].insert(Face{});
  for (const auto& facet : c.facets()) {
    if (facet.size() > 30) throw DomainError("facet too large to enumerate its faces");
    if (by_size.size() <= facet.size()) by_size.resize(facet.size() + 1);
    const std::uint32_t n = static_cast<std::uint32_t>(facet.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      Face f;
      for (std::uint32_t b = 0; b < n; ++b)
        if (mask & (std::uint32_t{1} << b)) f.push_back(facet[b]);
      by_size[f.size()].insert(std::move(f));
    }
  }
  std::vector<std::vector<Face>> out;
  for (auto& s : by_size) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<BigInt> f_vector(const Complex& c) {
  std::vector<BigInt> f;
  for (const auto& group : all_faces(c)) f.emplace_back(group.size());
  return f;
}

IntPoly1 f_polynomial(const Complex& c) { return IntPoly1::from_dense(f_vector(c)); }

bool is_pure(const Complex& c) {
  const auto& fs = c.facets();
  return std::all_of(fs.begin(), fs.end(), [&](const Face& f) { return f.size() == fs.front().size(); });
}

int dimension(const Complex& c) {
  std::size_t m = 0;
  for (const auto& f : c.facets()) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool is_flag(const Complex& c) {
  const std::size_t n = c.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& f : c.facets())
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) adj[f[a]][f[b]] = adj[f[b]][f[a]] = true;
  for (const auto& clique : maximal_cliques(adj)) {
    if (!c.contains_face(clique)) return false;
  }
  return true;
}

std::string fresh_label(std::string label, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), label) != taken.end()) label += '\'';
  return label;
}

Complex join(const Complex& a, const Complex& b) {
  std::vector<std::string> vertices = a.vertices();
  for (const auto& l : b.vertices()) vertices.push_back(fresh_label(l, vertices));
  const int offset = static_cast<int>(a.vertex_count());

  const std::vector<Face> empty_only{Face{}};
  const auto& fa = a.facets().empty() ? empty_only : a.facets();
  const auto& fb = b.facets().empty() ? empty_only : b.facets();
  std::vector<Face> facets;
  for (const auto& f : fa) {
    for (const auto& g : fb) {
      Face u = f;
      for (int v : g) u.push_back(v + offset);
      facets.push_back(std::move(u));
    }
  }
  return Complex::generated_by(vertices, std::move(facets));
}

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency) {
  std::vector<int> all(adjacency.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  std::vector<int> clique;
  if (!all.empty()) bron_kerbosch(adjacency, clique, all, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gammatri
