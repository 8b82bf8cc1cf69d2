#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammatri/clustermodels.hpp"
#include "gammatri/subdivision.hpp"
#include "gammatri/triangles.hpp"
#include "oracles.hpp"

using namespace gammatri;

namespace {

constexpr int kCases = 200;
constexpr int kMaxDegree = 8;

}  // namespace

TEST_CASE("f and h round trip") {
  oracle::Random rng(101);
  for (int trial = 0; trial < kCases; ++trial) {
    const int d = rng.integer(0, kMaxDegree);
    const IntPoly1 f = rng.poly1(d, 50);
    const IntPoly1 h = h_from_f(f, d);
    CHECK(f_from_h(h, d) == f);
    CHECK(h_from_f(f_from_h(f, d), d) == f);
  }
}

TEST_CASE("h and gamma round trip") {
  oracle::Random rng(202);
  for (int trial = 0; trial < kCases; ++trial) {
    const int d = rng.integer(0, kMaxDegree);
    const GammaVector g = rng.gamma_vector(d, 30);
    const IntPoly1 h = h_from_gamma(g);
    CHECK(h.is_symmetric(d));
    CHECK(gamma_from_h(h, d) == g);
  }
}

TEST_CASE("F and H round trip") {
  oracle::Random rng(303);
  for (int trial = 0; trial < kCases; ++trial) {
    const int d = rng.integer(0, kMaxDegree);
    const IntPoly2 F = rng.f_shaped(d, 20);
    CHECK(f_triangle_from_h(h_triangle_from_f(F, d), d) == F);
    const IntPoly2 H = rng.h_shaped(d, 20);
    CHECK(h_triangle_from_f(f_triangle_from_h(H, d), d) == H);
  }
}

TEST_CASE("H and Gamma round trip") {
  oracle::Random rng(404);
  for (int trial = 0; trial < kCases; ++trial) {
    const int d = rng.integer(0, kMaxDegree);
    const GammaTriangle g = rng.gamma_shaped(d, 20);
    const IntPoly2 H = h_triangle_from_gamma(g);
    CHECK(gamma_triangle_from_h(H, d) == g);
    CHECK(f_triangle_from_gamma(g) == f_triangle_from_h(H, d));
    CHECK(H.at_y_one() == h_from_gamma(g.row_sums()));
  }
}

TEST_CASE("H from Gamma agrees with the rational basis expansion") {
  oracle::Random rng(505);
  for (int trial = 0; trial < kCases; ++trial) {
    const int d = rng.integer(0, kMaxDegree);
    const GammaTriangle g = rng.gamma_shaped(d, 20);
    const IntPoly2 H = h_triangle_from_gamma(g);
    const IntPoly2 F = f_triangle_from_gamma(g);
    const Rational x(3, 7), y(-5, 2);
    Rational h_expected = 0, f_expected = 0;
    for (const auto& [e, c] : g.coefficients().terms()) {
      Rational hb = Rational(c), fb = Rational(c);
      for (int k = 0; k < e.i; ++k) {
        hb *= x;
        fb *= x * (1 + x);
      }
      for (int k = 0; k < e.j; ++k) {
        hb *= 1 + x * y;
        fb *= 1 + x + y;
      }
      for (int k = 0; k < d - 2 * e.i - e.j; ++k) {
        hb *= 1 + x;
        fb *= 1 + 2 * x;
      }
      h_expected += hb;
      f_expected += fb;
    }
    CHECK(oracle::eval(H, x, y) == h_expected);
    CHECK(oracle::eval(F, x, y) == f_expected);
  }
}

TEST_CASE("perturbed H triangles are rejected") {
  oracle::Random rng(606);
  int rejected = 0;
  for (int trial = 0; trial < kCases; ++trial) {
    const int d = rng.integer(2, kMaxDegree);
    IntPoly2 H = h_triangle_from_gamma(rng.gamma_shaped(d, 20));
    // x - x^d is not palindromic, so its y^0 slice leaves the gamma basis
    H.add_term(1, 0, 1);
    H.add_term(d, 0, -1);
    try {
      gamma_triangle_from_h(H, d);
    } catch (const NotGammaRepresentable&) {
      ++rejected;
    }
  }
  CHECK(rejected == kCases);
}

TEST_CASE("specializations on the models") {
  std::vector<Subdivision> models;
  for (int n = 1; n <= 5; ++n) models.push_back(type_a_subdivision(n));
  for (int m = 2; m <= 8; ++m) models.push_back(dihedral_subdivision(m));
  for (const Subdivision& s : models) {
    const SphereWithFacet sph = sphere(s);
    const int d = s.rank();
    const IntPoly2 F = f_triangle(sph);
    const IntPoly1 f = f_polynomial(sph.complex());
    CHECK(F.at_y_equals_x() == f);
    CHECK(h_triangle_from_f(F, d).at_y_one() == h_from_f(f, d));
    CHECK(local_h(s).is_symmetric(d));
    IntPoly1 total;
    for (const auto& p : local_h_all(s)) total += p;
    CHECK(total == h_from_f(f_polynomial(s.complex()), d));
  }
}

TEST_CASE("join multiplicativity") {
  const Subdivision a2 = type_a_subdivision(2);
  CHECK(local_gamma(join(a2, a2)) == IntPoly1{{2, 1}});
  oracle::Random rng(707);
  for (int trial = 0; trial < 6; ++trial) {
    const Subdivision a = dihedral_subdivision(rng.integer(2, 7));
    const Subdivision b = rng.integer(0, 1) ? type_a_subdivision(rng.integer(1, 3)) : dihedral_subdivision(rng.integer(2, 6));
    const Subdivision j = join(a, b);
    CHECK(local_gamma(j) == local_gamma(a) * local_gamma(b));
    CHECK(gamma_from_local_sum(j).coefficients() ==
          gamma_from_local_sum(a).coefficients() * gamma_from_local_sum(b).coefficients());
  }
}
