#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammatri/clustermodels.hpp"
#include "gammatri/verify.hpp"

using namespace gammatri;

namespace {

void require_clean(const Report& r) {
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, r.suite << " " << c.name << ": " << c.detail);
  CHECK(r.ok());
  CHECK(r.failures() == 0);
}

}  // namespace

TEST_CASE("report bookkeeping") {
  Report r;
  CHECK(r.ok());
  r.add("a", true, "");
  Report other;
  other.add("b", false, "x");
  r.append(other);
  CHECK(r.checks.size() == 2);
  CHECK_FALSE(r.ok());
  CHECK(r.failures() == 1);
}

TEST_CASE("polygon boundary and expected triangles") {
  CHECK(polygon_boundary(6).facets().size() == 6);
  CHECK_THROWS_AS(polygon_boundary(2), DomainError);
  const TriangleSet t = polygon_expected(5);
  CHECK(t.Gamma.coefficients() == IntPoly2{{0, 2, 1}, {1, 0, 1}});
  const TriangleSet got = triangle_pipeline(SphereWithFacet(polygon_boundary(7), Face{0, 1}));
  CHECK(got.F == polygon_expected(7).F);
  CHECK(got.H == polygon_expected(7).H);
  CHECK(got.Gamma == polygon_expected(7).Gamma);
}

TEST_CASE("model invariants hold on a non-cluster subdivision") {
  const Complex c = Complex::from_facets({"p", "m", "q"}, {{"p", "m"}, {"m", "q"}});
  const Subdivision s = Subdivision::from_labels(c, {"a", "b"}, {{"p", {"a"}}, {"q", {"b"}}, {"m", {"a", "b"}}});
  require_clean(model_invariants(s, "edge"));
}

TEST_CASE("tables suite") { require_clean(tables_suite()); }

TEST_CASE("series suite") { require_clean(series_suite(24)); }

TEST_CASE("crosscheck suite") {
  const Report r = crosscheck_suite(6);
  require_clean(r);
  CHECK(r.checks.size() > 100);
}

TEST_CASE("suite dispatch") {
  CHECK(run_suite("tables", 24, 6).suite == "tables");
  CHECK_THROWS_AS(run_suite("bogus", 24, 6), DomainError);
  CHECK_THROWS_AS(crosscheck_suite(0), DomainError);
}
