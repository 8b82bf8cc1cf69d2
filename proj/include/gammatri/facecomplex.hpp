#pragma once

// Finite abstract simplicial complexes stored by their facets.

#include "gammatri/exactpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gammatri {

/// A face as a sorted list of vertex indices.
using Face = std::vector<int>;

/// Raised when an input complex, subdivision or diagram violates its invariants.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite simplicial complex given by its maximal faces. The face set is
/// every subset of a facet, the empty face included. The default-constructed
/// complex is {∅}.
class Complex {
 public:
  Complex() = default;

  /// Validating constructor from labels. Rejects unknown or repeated labels,
  /// non-maximal facets, and listed vertices that lie in no facet.
  static Complex from_facets(std::vector<std::string> vertices,
                             const std::vector<std::vector<std::string>>& facets);

  /// The complex generated by arbitrary faces over `vertices`: only maximal
  /// generators are kept and vertices lying in no generator are dropped.
  static Complex generated_by(const std::vector<std::string>& vertices, std::vector<Face> faces);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::optional<int> vertex_index(const std::string& label) const;
  /// Sorted face from labels; throws DomainError on an unknown label.
  Face face_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Face& f) const;

  bool contains_face(const Face& f) const;
  bool is_facet(const Face& f) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Face> facets_;  // sorted, each sorted
};

/// Every face of c, grouped by cardinality (index 0 holds the empty face).
std::vector<std::vector<Face>> all_faces(const Complex& c);

/// (f_{-1}, f_0, ..., f_{dim})
std::vector<BigInt> f_vector(const Complex& c);

/// Σ f_{i-1} x^i
IntPoly1 f_polynomial(const Complex& c);

bool is_pure(const Complex& c);

/// Maximal facet cardinality minus one; -1 for {∅}.
int dimension(const Complex& c);

/// Every clique of the 1-skeleton is a face.
bool is_flag(const Complex& c);

/// Facets are unions of a facet of a with a facet of b. Labels of b that
/// collide with labels of a get primes appended until unique.
Complex join(const Complex& a, const Complex& b);

/// Maximal cliques of the graph with the given symmetric adjacency matrix,
/// each sorted, in deterministic order.
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency);

/// Appends primes to `label` until it is not in `taken`.
std::string fresh_label(std::string label, const std::vector<std::string>& taken);

}  // namespace gammatri
