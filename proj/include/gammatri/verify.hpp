#pragma once

// Verification suites run by `gammatri verify`, and the F -> H -> Gamma
// pipeline shared with the command line.

#include "gammatri/coxgamma.hpp"
#include "gammatri/report.hpp"
#include "gammatri/subdivision.hpp"

#include <string>

namespace gammatri {

struct TriangleSet {
  int degree = 0;
  IntPoly2 F;
  IntPoly2 H;
  GammaTriangle Gamma;
};

/// F from face counts, H from F, Gamma extracted from H. Throws
/// NotGammaRepresentable when the extraction fails.
TriangleSet triangle_pipeline(const SphereWithFacet& sph);

/// Boundary of the n-gon (n >= 3) on vertices v0 .. v{n-1}.
Complex polygon_boundary(int n);

/// Expected triangles of the n-gon with an edge as distinguished facet:
/// F = y² + 2y + 2xy + 1 + (n-2)x + (n-3)x², H = x²y² + 2xy + 1 + (n-4)x,
/// Gamma = y² + (n-4)x.
TriangleSet polygon_expected(int n);

/// Γ of the A_n model through the sphere, F, H and extraction.
GammaTriangle type_a_model_gamma(int n);

/// Invariants of one model subdivision: specializations, local h symmetry,
/// Möbius inversion, agreement of the two H routes and the two Gamma routes.
Report model_invariants(const Subdivision& s, const std::string& name);

Report tables_suite();
Report series_suite(int order);
Report crosscheck_suite(int max_rank);

/// "tables", "series", "crosscheck" or "all" (the three in that order).
Report run_suite(const std::string& name, int order, int max_rank);

}  // namespace gammatri
