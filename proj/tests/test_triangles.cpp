#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammatri/triangles.hpp"
#include "oracles.hpp"

using namespace gammatri;

namespace {

const IntPoly2 kPentagonF{{0, 0, 1}, {1, 0, 3}, {2, 0, 2}, {0, 1, 2}, {1, 1, 2}, {0, 2, 1}};
const IntPoly2 kPentagonH{{0, 0, 1}, {1, 0, 1}, {1, 1, 2}, {2, 2, 1}};
const IntPoly2 kPentagonGamma{{0, 2, 1}, {1, 0, 1}};

// A3 matrices, rows y^3 down to y^0
const IntPoly2 kA3F{{0, 3, 1}, {0, 2, 3}, {1, 2, 3}, {0, 1, 3}, {1, 1, 8}, {2, 1, 5},
                    {0, 0, 1}, {1, 0, 6}, {2, 0, 10}, {3, 0, 5}};
const IntPoly2 kA3H{{3, 3, 1}, {2, 2, 3}, {1, 1, 3}, {2, 1, 2}, {0, 0, 1}, {1, 0, 3}, {2, 0, 1}};
const IntPoly2 kA3Gamma{{0, 3, 1}, {1, 1, 2}, {1, 0, 1}};

}  // namespace

TEST_CASE("h from f") {
  CHECK(h_from_f(IntPoly1{{0, 1}, {1, 5}, {2, 5}}, 2) == IntPoly1{{0, 1}, {1, 3}, {2, 1}});
  CHECK(h_from_f(IntPoly1{{0, 1}}, 0) == IntPoly1{{0, 1}});
  CHECK(h_from_f(IntPoly1{{0, 1}, {1, 3}, {2, 2}}, 2) == IntPoly1{{0, 1}, {1, 1}});
  CHECK_THROWS_AS(h_from_f(IntPoly1{{3, 1}}, 2), DomainError);
}

TEST_CASE("f from h") {
  CHECK(f_from_h(IntPoly1{{0, 1}, {1, 3}, {2, 1}}, 2) == IntPoly1{{0, 1}, {1, 5}, {2, 5}});
  CHECK(f_from_h(IntPoly1{{0, 1}}, 3) == pow(IntPoly1{{0, 1}, {1, 1}}, 3));
  CHECK_THROWS_AS(f_from_h(IntPoly1{{4, 1}}, 3), DomainError);
}

TEST_CASE("gamma vector from h") {
  CHECK(gamma_from_h(IntPoly1{{0, 1}, {1, 3}, {2, 1}}, 2).entries == std::vector<BigInt>{1, 1});
  CHECK(gamma_from_h(IntPoly1{{0, 1}}, 0).entries == std::vector<BigInt>{1});
  CHECK(gamma_from_h(IntPoly1{{0, 1}, {2, 1}}, 2).entries == std::vector<BigInt>{1, -2});
  CHECK_THROWS_AS(gamma_from_h(IntPoly1{{0, 1}, {1, 1}}, 2), NotGammaRepresentable);
}

TEST_CASE("H from F") {
  CHECK(h_triangle_from_f(kPentagonF, 2) == kPentagonH);
  CHECK(h_triangle_from_f(IntPoly2{{0, 0, 1}, {0, 1, 1}}, 1) == IntPoly2{{0, 0, 1}, {1, 0, -1}, {1, 1, 1}});
  CHECK(h_triangle_from_f(kA3F, 3) == kA3H);
  CHECK_THROWS_AS(h_triangle_from_f(IntPoly2{{2, 1, 1}}, 2), DomainError);
}

TEST_CASE("F from H") {
  CHECK(f_triangle_from_h(kPentagonH, 2) == kPentagonF);
  CHECK(f_triangle_from_h(IntPoly2::constant(1), 2) == IntPoly2{{0, 0, 1}, {1, 0, 2}, {2, 0, 1}});
  CHECK(f_triangle_from_h(kA3H, 3) == kA3F);
  CHECK_THROWS_AS(f_triangle_from_h(IntPoly2{{0, 1, 1}}, 2), DomainError);
}

TEST_CASE("Gamma from H") {
  CHECK(gamma_triangle_from_h(kPentagonH, 2).coefficients() == kPentagonGamma);
  const IntPoly2 three_gon_H{{0, 0, 1}, {1, 0, -1}, {1, 1, 2}, {2, 2, 1}};
  const GammaTriangle g3 = gamma_triangle_from_h(three_gon_H, 2);
  CHECK(g3.coefficients() == IntPoly2{{0, 2, 1}, {1, 0, -1}});
  CHECK(g3.coeff(1, 0) == -1);
  CHECK(gamma_triangle_from_h(kA3H, 3).coefficients() == kA3Gamma);
}

TEST_CASE("Gamma extraction failures name the row") {
  // x*y alone: slice y^1 is x, which leaves residual after one basis term
  try {
    gamma_triangle_from_h(IntPoly2{{0, 0, 1}, {1, 1, 1}}, 2);
    FAIL("expected NotGammaRepresentable");
  } catch (const NotGammaRepresentable& e) {
    CHECK(e.row() >= 0);
  }
  // slice y^2 = x: not divisible by x^2
  CHECK_THROWS_AS(gamma_triangle_from_h(IntPoly2{{1, 2, 1}}, 3), NotGammaRepresentable);
}

TEST_CASE("H and F from Gamma") {
  CHECK(h_triangle_from_gamma(GammaTriangle(kPentagonGamma, 2)) == kPentagonH);
  CHECK(h_triangle_from_gamma(GammaTriangle(kA3Gamma, 3)) ==
        IntPoly2{{0, 0, 1}, {1, 0, 3}, {2, 0, 1}, {1, 1, 3}, {2, 1, 2}, {2, 2, 3}, {3, 3, 1}});
  CHECK(h_triangle_from_gamma(GammaTriangle(IntPoly2::constant(1), 0)) == IntPoly2::constant(1));
  CHECK(f_triangle_from_gamma(GammaTriangle(kPentagonGamma, 2)) == kPentagonF);
  CHECK(f_triangle_from_gamma(GammaTriangle(IntPoly2::y(), 1)) == IntPoly2{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  CHECK(f_triangle_from_gamma(GammaTriangle(kA3Gamma, 3)) == kA3F);
}

TEST_CASE("Gamma triangle shape is enforced") {
  CHECK_THROWS_AS(GammaTriangle(IntPoly2{{1, 1, 1}}, 2), DomainError);
  CHECK_NOTHROW(GammaTriangle(IntPoly2{{1, 1, 1}}, 3));
  CHECK(GammaTriangle(kA3Gamma, 3).row_sums().entries == std::vector<BigInt>{1, 3});
}

TEST_CASE("specialization chain on the fixed examples") {
  for (auto [F, d] : {std::pair{kPentagonF, 2}, std::pair{kA3F, 3}}) {
    const IntPoly2 H = h_triangle_from_f(F, d);
    const IntPoly1 f = F.at_y_equals_x();
    CHECK(H.at_y_one() == h_from_f(f, d));
    const GammaTriangle g = gamma_triangle_from_h(H, d);
    CHECK(g.row_sums() == gamma_from_h(H.at_y_one(), d));
  }
}

TEST_CASE("h from f agrees with rational substitution") {
  oracle::Random rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.integer(0, 7);
    const IntPoly1 f = rng.poly1(d, 9);
    const IntPoly1 h = h_from_f(f, d);
    for (const Rational& x : oracle::sample_points()) {
      Rational scale = 1;
      for (int k = 0; k < d; ++k) scale *= (1 - x);
      CHECK(oracle::eval(h, x) == scale * oracle::eval(f, x / (1 - x)));
    }
  }
}

TEST_CASE("H from F agrees with rational substitution") {
  oracle::Random rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.integer(0, 6);
    const IntPoly2 F = rng.f_shaped(d, 9);
    const IntPoly2 H = h_triangle_from_f(F, d);
    const Rational x(2, 9), y(-7, 3);
    Rational scale = 1;
    for (int k = 0; k < d; ++k) scale *= (1 - x);
    CHECK(oracle::eval(H, x, y) == scale * oracle::eval(F, x / (1 - x), x * y / (1 - x)));
  }
}

TEST_CASE("matrix rendering places rows from y^d down") {
  const std::string m = render_matrix(kPentagonF, 2, TriangleShape::F);
  CHECK(m == "1\n2 2\n1 3 2\n");
  const std::string h = render_matrix(kPentagonH, 2, TriangleShape::H);
  CHECK(h == "    1\n  2 0\n1 1 0\n");
}
