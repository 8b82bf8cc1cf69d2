#pragma once

// Simplicial subdivisions (C₊, σ) of a simplex 2^I: restrictions, local h and
// gamma polynomials, the associated sphere, and the local description of the
// Gamma triangle.

#include "gammatri/facecomplex.hpp"
#include "gammatri/triangles.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gammatri {

/// A subset of the index set I, as a bitmask over its positions.
using IndexMask = std::uint32_t;

inline constexpr int kMaxIndexSetSize = 20;

inline int popcount(IndexMask m) { return std::popcount(m); }

/// A complex C₊ with a carrier map σ from its vertices to nonempty subsets of
/// I. The carrier of a face is the union of the carriers of its vertices.
class Subdivision {
 public:
  /// Structural checks only (sizes, carriers nonempty and inside I, index
  /// labels distinct and disjoint from vertex labels). The ball property is
  /// checked separately by validate_ball_property.
  Subdivision(Complex complex, std::vector<std::string> index_set, std::vector<IndexMask> carriers);

  static Subdivision from_labels(Complex complex, std::vector<std::string> index_set,
                                 const std::map<std::string, std::vector<std::string>>& sigma);

  const Complex& complex() const { return complex_; }
  const std::vector<std::string>& index_set() const { return index_set_; }
  const std::vector<IndexMask>& carriers() const { return carriers_; }
  int rank() const { return static_cast<int>(index_set_.size()); }
  IndexMask full_mask() const { return rank() == 0 ? 0 : (IndexMask{1} << rank()) - 1; }

  IndexMask carrier(const Face& f) const;
  IndexMask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(IndexMask m) const;

 private:
  Complex complex_;
  std::vector<std::string> index_set_;
  std::vector<IndexMask> carriers_;
};

struct BallValidation {
  int restrictions_checked = 0;
  std::vector<std::string> checks_run;
};

/// For every nonempty J ⊆ I: C₊(J) is pure of dimension |J| - 1 and has Euler
/// characteristic 1. Throws FormatError naming the first violation.
BallValidation validate_ball_property(const Subdivision& s);

/// The subcomplex C₊(J) of faces whose carrier lies in J.
Complex restrict(const Subdivision& s, IndexMask J);

/// C₊(K) viewed as a subdivision of 2^K.
Subdivision restrict_subdivision(const Subdivision& s, IndexMask K);

/// f_{C₊(J)} for every J ⊆ I, indexed by mask.
std::vector<IntPoly1> restriction_f_polynomials(const Subdivision& s);

/// h_{C₊(J)} with d = |J| for every J ⊆ I, indexed by mask.
std::vector<IntPoly1> restriction_h_polynomials(const Subdivision& s);

/// Local h polynomial of every restriction C₊(K), indexed by K.
std::vector<IntPoly1> local_h_all(const Subdivision& s);

IntPoly1 local_h(const Subdivision& s);

/// Throws NotGammaRepresentable when the local h polynomial is not symmetric.
IntPoly1 local_gamma(const Subdivision& s);

/// A pure complex with a distinguished facet T.
class SphereWithFacet {
 public:
  /// Throws DomainError when `facet` is not a facet of `complex`.
  SphereWithFacet(Complex complex, Face facet);

  const Complex& complex() const { return complex_; }
  const Face& distinguished_facet() const { return facet_; }
  int degree() const { return static_cast<int>(facet_.size()); }

 private:
  Complex complex_;
  Face facet_;
};

/// Sphere(C₊): faces F ∪ J with F a face of C₊, J ⊆ I and σ(F) ∩ J = ∅;
/// the distinguished facet is I.
SphereWithFacet sphere(const Subdivision& s);

/// Σ F_{i,j} x^i y^j, F_{i,j} counting faces with i vertices outside T and j in T.
IntPoly2 f_triangle(const SphereWithFacet& sph);

/// Σ_K γ^ℓ_{C₊(K)}(x) y^{|I-K|}, with the empty restriction contributing 1.
GammaTriangle gamma_from_local_sum(const Subdivision& s);

/// Σ_J (xy)^{|J|} h_{C₊(I-J)}(x)
IntPoly2 h_triangle_direct(const Subdivision& s);

/// Join of complexes with disjoint index sets; each vertex keeps its carrier.
Subdivision join(const Subdivision& a, const Subdivision& b);

}  // namespace gammatri
