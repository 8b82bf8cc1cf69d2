#pragma once

// Gamma triangles of finite Coxeter diagrams, assembled as a sum over
// subdiagrams of products of local gamma polynomials of the connected
// components, together with the closed forms for types A, B and D, the rank
// 2 and 3 formulas, stored reference tables, and two linear recursions.

#include "gammatri/facecomplex.hpp"
#include "gammatri/triangles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gammatri {

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoxeterEdge {
  std::string u;
  std::string v;
  int label = 3;
};

/// A simple graph whose edges carry labels m >= 3; absent edges mean m = 2.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  /// Throws FormatError on unknown endpoints, loops, repeated edges or labels < 3.
  CoxeterDiagram(std::vector<std::string> vertices, std::vector<CoxeterEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<CoxeterEdge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  /// 2 when the vertices are not joined.
  int label(int a, int b) const { return labels_[a][b]; }

  CoxeterDiagram induced(std::uint32_t keep) const;
  /// Connected components as vertex masks, ordered by lowest vertex.
  std::vector<std::uint32_t> components() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<CoxeterEdge> edges_;
  std::vector<std::vector<int>> labels_;
};

enum class CoxeterKind { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

struct TypedComponent {
  CoxeterKind kind = CoxeterKind::A;
  int rank = 1;
  int dihedral_label = 0;  // m for I2(m), 0 otherwise

  std::string name() const;
  friend auto operator<=>(const TypedComponent&, const TypedComponent&) = default;
};

/// Irreducible types of the connected components, sorted. A two-vertex
/// component with label m >= 4 is I2(m) (B2 = I2(4), G2 = I2(6)).
std::vector<TypedComponent> classify(const CoxeterDiagram& dgm);

/// Parses a type such as "A", "B", "C", "D", "E", "F", "G", "H", "I2" with
/// rank (and label m for I2) and applies the low-rank normalizations C -> B,
/// B1 -> A1, B2 -> I2(4), D2 -> A1 x A1, D3 -> A3, I2(2) -> A1 x A1,
/// I2(3) -> A2, G2 -> I2(6).
std::vector<TypedComponent> normalize_type(const std::string& kind, int rank, int label = 0);

/// The standard diagram of a component list, vertices numbered from 1.
CoxeterDiagram standard_diagram(const std::vector<TypedComponent>& components);

IntPoly1 local_gamma_poly(const TypedComponent& c);

/// The D_n local gamma formula, valid from n = 2 (D2 gives 0, D3 gives x).
IntPoly1 local_gamma_D_formula(int n);

/// Σ_{J ⊆ I} γ^ℓ_{I-J}(x) y^{|J|}, γ^ℓ multiplicative over components and 1
/// on the empty subdiagram.
GammaTriangle gamma_triangle_diagram(const CoxeterDiagram& dgm);

enum class ClosedKind { A, B };

/// Closed-form coefficient of x^k y^l in the Gamma triangle of A_n or B_n.
BigInt gamma_coeff_closed(ClosedKind kind, int n, int k, int l);

/// Full triangle assembled from gamma_coeff_closed.
GammaTriangle closed_form_triangle(ClosedKind kind, int n);

/// y Γ(B_{n-1}) plus the D_n local gamma polynomial as the bottom row.
GammaTriangle gamma_triangle_D(int n);

/// Rank 2: y² + (h-2)x. Rank 3 (h in {2,4,6,10}):
/// y³ + 6(h-2)/(h+2) xy + 3(h-2)²/(2(h+2)) x.
GammaTriangle rank23_formula(int h, int rank);

enum class Family { Lucas, Pell };

/// u_0 = 0, u_1 = 1 and
///   Lucas: u_{n+1} = (y² + 2x) u_n - x² u_{n-1} + xy u_{n-1}
///   Pell:  u_{n+1} = y u_n + x u_{n-1}
IntPoly2 family_recursion(Family family, int n);

/// Discriminant p² + 4q of u_{n+1} = p u_n + q u_{n-1} for the Pell family.
IntPoly2 pell_discriminant();

/// pell_discriminant() == Γ(I2(6)).
bool pell_discriminant_check();

struct ReferenceTable {
  std::string name;
  std::vector<TypedComponent> type;
  /// Rows as printed: top row is y^d, each row lists x^0, x^1, ...
  std::vector<std::vector<long>> rows;

  GammaTriangle triangle() const;
};

const std::vector<ReferenceTable>& reference_tables();

struct TableMismatch {
  std::string table;
  int i = 0;
  int j = 0;
  BigInt expected;
  BigInt got;
};

struct TableReport {
  std::vector<std::string> tables_checked;
  std::vector<TableMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Recomputes every stored table from its diagram and compares entrywise.
TableReport verify_tables();

}  // namespace gammatri
