#pragma once

// Positive parts of cluster complexes of type A (diagonals of an (n+3)-gon
// against a zig-zag "snake" triangulation) and of dihedral type I2(m).

#include "gammatri/subdivision.hpp"

#include <map>
#include <string>
#include <vector>

namespace gammatri {

/// A diagonal {a, b} of a convex polygon with vertices 0 .. size-1, a < b.
struct Diagonal {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Strict interleaving; diagonals sharing an endpoint never cross.
bool diagonals_cross(const Diagonal& p, const Diagonal& q);

/// "d{a}-{b}"
std::string diagonal_label(const Diagonal& d);

/// The snake s_i joins vertices ⌈i/2⌉ and n + 2 - ⌊i/2⌋ of the (n+3)-gon, so
/// s_1 = {1, n+2}, s_2 = {1, n+1}, s_3 = {2, n+1}, ... Consecutive snake
/// diagonals share a triangle, so the index set carries the A_n path.
struct PolygonModel {
  int rank = 0;
  int polygon_size = 0;
  std::vector<Diagonal> snake;     // s_1 .. s_n
  std::vector<Diagonal> positive;  // every other diagonal, lexicographic
};

PolygonModel polygon_model(int n);

/// C₊ of type A_n: vertices are the positive diagonals, faces their pairwise
/// noncrossing sets, σ(δ) = the snake diagonals crossed by δ.
Subdivision type_a_subdivision(int n);

/// Path p_1 .. p_m with σ(p_1) = {s1}, σ(p_m) = {s2}, σ(p_i) = {s1, s2} otherwise.
Subdivision dihedral_subdivision(int m);

/// Number of non-simple positive roots of A_n by support size, roots being
/// intervals [a, b] of {1..n} with b > a.
std::map<int, long> count_roots_by_support(int n);

}  // namespace gammatri
