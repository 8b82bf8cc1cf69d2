#pragma once

// Basis changes between f, h and gamma vectors, and between the F, H and
// Gamma triangles of a sphere with a distinguished facet.
//
// Every substitution formula is implemented in its cleared polynomial form:
//   h(x)    = Σ f_{i-1} x^i (1-x)^{d-i}
//   f(x)    = Σ h_i x^i (1+x)^{d-i}
//   h(x)    = Σ γ_i x^i (1+x)^{d-2i}
//   H(x,y)  = Σ F_{i,j} x^{i+j} y^j (1-x)^{d-i-j}
//   F(x,y)  = Σ H_{a,b} x^{a-b} y^b (1+x)^{d-a}
//   H(x,y)  = Σ γ_{i,j} x^i (1+xy)^j (1+x)^{d-2i-j}
//   F(x,y)  = Σ γ_{i,j} (x(1+x))^i (1+x+y)^j (1+2x)^{d-2i-j}

#include "gammatri/exactpoly.hpp"

#include <string>
#include <vector>

namespace gammatri {

/// The input is not a combination of the requested gamma basis. `row` is the
/// power of y whose slice failed, or -1 for a univariate extraction.
class NotGammaRepresentable : public std::runtime_error {
 public:
  NotGammaRepresentable(int row, std::string residual);
  int row() const { return row_; }
  const std::string& residual() const { return residual_; }

 private:
  int row_;
  std::string residual_;
};

struct GammaVector {
  int degree = 0;
  std::vector<BigInt> entries;  // γ_0 .. γ_{⌊d/2⌋}

  IntPoly1 as_polynomial() const { return IntPoly1::from_dense(entries); }
  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// Coefficients γ_{i,j} with 2i + j ≤ d.
class GammaTriangle {
 public:
  GammaTriangle() = default;
  /// Throws DomainError when a nonzero entry falls outside 2i + j ≤ d.
  GammaTriangle(IntPoly2 coefficients, int degree);

  const IntPoly2& coefficients() const { return coefficients_; }
  int degree() const { return degree_; }
  BigInt coeff(int i, int j) const { return coefficients_.coeff(i, j); }

  /// γ_i = Σ_j γ_{i,j}
  GammaVector row_sums() const;
  /// The j = 0 row, which is the local gamma polynomial.
  IntPoly1 bottom_row() const { return coefficients_.at_y_zero(); }

  friend bool operator==(const GammaTriangle&, const GammaTriangle&) = default;

 private:
  IntPoly2 coefficients_;
  int degree_ = 0;
};

IntPoly1 h_from_f(const IntPoly1& f, int d);
IntPoly1 f_from_h(const IntPoly1& h, int d);
GammaVector gamma_from_h(const IntPoly1& h, int d);
IntPoly1 h_from_gamma(const GammaVector& g);

IntPoly2 h_triangle_from_f(const IntPoly2& F, int d);
IntPoly2 f_triangle_from_h(const IntPoly2& H, int d);
GammaTriangle gamma_triangle_from_h(const IntPoly2& H, int d);
IntPoly2 h_triangle_from_gamma(const GammaTriangle& g);
IntPoly2 f_triangle_from_gamma(const GammaTriangle& g);

enum class TriangleShape { F, H, Gamma };

/// Triangle as a text matrix: rows are powers of y from d down to 0, columns powers
/// of x from 0 upward. Positions outside the shape are left blank.
std::string render_matrix(const IntPoly2& p, int d, TriangleShape shape);

}  // namespace gammatri
