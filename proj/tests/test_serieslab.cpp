#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammatri/clustermodels.hpp"
#include "gammatri/coxgamma.hpp"
#include "gammatri/serieslab.hpp"
#include "gammatri/verify.hpp"
#include "oracles.hpp"

using namespace gammatri;

namespace {

RatSeries rat(std::initializer_list<std::pair<int, RatPoly2>> terms, int order) {
  RatSeries s(order);
  for (const auto& [n, c] : terms) s.coeff(n) = c;
  return s;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const IntSeries t = IntSeries::t(5);
  const IntSeries one = IntSeries::one(5);
  const IntSeries geometric = (one - t).inverse();
  for (int n = 0; n < 5; ++n) CHECK(geometric.coeff(n) == IntPoly2::constant(1));
  CHECK((geometric * (one - t)) == one);
  CHECK(IntSeries::monomial(IntPoly2::constant(1), 3, 6).euler_theta() ==
        IntSeries::monomial(IntPoly2::constant(3), 3, 6));
  CHECK((one - t).d_dt() == IntSeries::constant(IntPoly2::constant(-1), 4));
  CHECK(t.times_t(2).order() == 7);
  CHECK(t.times_t().divided_by_t(2) == IntSeries::one(4));
  CHECK_THROWS(one.divided_by_t());
  CHECK_THROWS_AS(IntSeries::constant(IntPoly2::x(), 3).inverse(), DomainError);
  CHECK_THROWS_AS(one.truncated(6), DomainError);
  CHECK_THROWS_AS((one - t).inverse().coeff(5), DomainError);
}

TEST_CASE("x over t and x times t substitutions") {
  IntSeries s(5);
  s.coeff(2) = IntPoly2::x();
  s.coeff(4) = IntPoly2{{2, 0, 3}};
  const IntSeries over = s.substitute_x_over_t();
  CHECK(over.order() == 3);
  CHECK(over.coeff(1) == IntPoly2::x());
  CHECK(over.coeff(2) == IntPoly2{{2, 0, 3}});
  CHECK(over.substitute_x_times_t().coeff(2) == IntPoly2::x());

  IntSeries bad(3);
  bad.coeff(1) = IntPoly2::x();
  CHECK_THROWS(bad.substitute_x_over_t());
}

TEST_CASE("square root") {
  const RatSeries a = rat({{0, RatPoly2::constant(1)}, {2, RatPoly2{{1, 0, -4}}}}, 6);
  const RatSeries r = series_sqrt(a);
  CHECK(r == rat({{0, RatPoly2::constant(1)}, {2, RatPoly2{{1, 0, -2}}}, {4, RatPoly2{{2, 0, -2}}}}, 6));
  CHECK(r * r == a);
  CHECK_THROWS_AS(series_sqrt(rat({{0, RatPoly2::constant(4)}}, 3)), DomainError);

  oracle::Random rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RatSeries b(7);
    b.coeff(0) = RatPoly2::constant(1);
    for (int n = 1; n < 7; ++n) b.coeff(n) = to_rational(rng.f_shaped(2, 5));
    const RatSeries root = series_sqrt(b);
    CHECK(root * root == b);
  }
}

TEST_CASE("expansion of g") {
  const IntSeries g = g_base(7);
  CHECK(g.coeff(0) == IntPoly2::constant(1));
  CHECK(g.coeff(1) == IntPoly2::constant(-1));
  CHECK(g.coeff(2) == IntPoly2{{1, 0, -2}});
  CHECK(g.coeff(3) == IntPoly2{{1, 0, -2}});
  CHECK(g.coeff(4) == IntPoly2{{1, 0, -2}, {2, 0, -2}});
  CHECK(g_alternate(12) == g_base(12));
  CHECK(g_expansion_sum(12) == g_base(12));
}

TEST_CASE("local gamma series against the models") {
  const IntSeries gA = g_sum(SeriesKind::A, 7);
  CHECK(gA.coeff(0) == IntPoly2::constant(1));
  for (int n = 1; n < 7; ++n) CHECK(gA.coeff(n) == IntPoly2::from_x(local_gamma(type_a_subdivision(n))));

  const IntSeries gB = g_sum(SeriesKind::B, 7);
  CHECK(gB.coeff(1).is_zero());
  CHECK(gB.coeff(2) == IntPoly2::from_x(local_gamma(dihedral_subdivision(4))));
  CHECK(gB.coeff(4) == IntPoly2{{1, 0, 4}, {2, 0, 6}});

  const IntSeries gD = g_sum(SeriesKind::D, 7);
  CHECK(gD.coeff(3) == IntPoly2::x());
  CHECK(gD.coeff(4) == IntPoly2{{1, 0, 2}, {2, 0, 2}});
  CHECK(gD.coeff(6) == IntPoly2{{1, 0, 4}, {2, 0, 24}, {3, 0, 8}});

  for (auto kind : {SeriesKind::A, SeriesKind::B, SeriesKind::D}) CHECK(g_closed(kind, 14) == g_sum(kind, 14));
}

TEST_CASE("Gamma series coefficients") {
  const IntSeries GA = G_sum(SeriesKind::A, 8);
  CHECK(GA.coeff(0) == IntPoly2::constant(1));
  CHECK(GA.coeff(3) == IntPoly2{{0, 3, 1}, {1, 1, 2}, {1, 0, 1}});
  for (int n = 1; n <= 5; ++n) CHECK(GA.coeff(n) == type_a_model_gamma(n).coefficients());
  const IntSeries GB = G_sum(SeriesKind::B, 8);
  CHECK(GB.coeff(4) == IntPoly2{{0, 4, 1}, {1, 2, 4}, {1, 1, 4}, {2, 0, 6}, {1, 0, 4}});
  CHECK(G_closed(SeriesKind::A, 12) == G_sum(SeriesKind::A, 12));
  CHECK(G_closed(SeriesKind::B, 12) == G_sum(SeriesKind::B, 12));
  CHECK(G_closed(SeriesKind::D, 12) == G_D_assembled(12));
  CHECK(G_D_assembled(5).coeff(2) == IntPoly2{{0, 2, 1}});
}

TEST_CASE("identities vanish") {
  const Report r = verify_identities(24);
  CHECK(r.checks.size() >= 13);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("perturbing one series breaks the identities") {
  SeriesBundle b = series_bundle(12);
  b.gA.coeff(4) = IntPoly2();
  const Report r = verify_identities(b);
  CHECK_FALSE(r.ok());
  bool ga_relation_failed = false;
  for (const auto& c : r.checks)
    if (!c.passed && c.name.find("GA") != std::string::npos) ga_relation_failed = true;
  CHECK(ga_relation_failed);
}

TEST_CASE("convolutions") {
  CHECK(convolution_closed(ConvolutionKind::A, 1, 0, 0) == 2);
  CHECK(convolution_closed(ConvolutionKind::B, 1, 0, 0) == 3);
  CHECK(convolution_sum(ConvolutionKind::A, 1, 0, 0) == 2);
  CHECK(convolution_sum(ConvolutionKind::B, 1, 0, 0) == 3);
  for (int m = 1; m <= 4; ++m)
    for (int l = 0; l <= 3; ++l)
      for (auto kind : {ConvolutionKind::A, ConvolutionKind::B}) {
        CHECK(convolution_sum(kind, 0, m, l) == 0);
        CHECK(convolution_closed(kind, 0, m, l) == 0);
      }
  CHECK(convolution_sum(ConvolutionKind::A, 0, 0, 3) == 1);
  CHECK_THROWS_AS(convolution_closed(ConvolutionKind::A, 0, 0, 1), DomainError);
  for (int k = 1; k <= 3; ++k)
    for (int m = 0; m <= 3; ++m)
      for (int l = 0; l <= 3; ++l) {
        CHECK(convolution_sum_weighted(ConvolutionKind::A, k, m, l) == convolution_sum(ConvolutionKind::A, k, m, l));
        CHECK(convolution_sum_weighted(ConvolutionKind::B, k, m, l) == convolution_sum(ConvolutionKind::B, k, m, l));
      }
  const Report r = convolution_check(6, 6, 6);
  CHECK(r.ok());
  CHECK(r.checks.size() >= 2);
}

TEST_CASE("binomial identity") {
  CHECK(binomial_identity_sides(4, 2) == std::pair<Rational, Rational>{1, 1});
  CHECK(binomial_identity_sides(2, 1) == std::pair<Rational, Rational>{1, 1});
  const auto [lhs, rhs] = binomial_identity_sides(10, 3);
  CHECK(lhs == rhs);
  CHECK(binomial_identity_check(40).ok());
}
