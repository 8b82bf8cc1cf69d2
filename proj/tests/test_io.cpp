#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammatri/clustermodels.hpp"
#include "gammatri/io.hpp"
#include "gammatri/verify.hpp"

using namespace gammatri;

namespace {

std::string data(const std::string& name) { return std::string(GAMMATRI_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("complex round trip") {
  const Complex c = complex_from_json(read_json_file(data("pentagon.json")));
  CHECK(c.vertex_count() == 5);
  CHECK(c.facets().size() == 5);
  CHECK(complex_from_json(complex_to_json(c)) == c);
}

TEST_CASE("complex rejections") {
  CHECK_THROWS_AS(complex_from_json(read_json_file(data("nonmaximal.json"))), FormatError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": ["a"]})")), FormatError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": ["a"], "facets": [["b"]]})")), FormatError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": "a", "facets": []})")), FormatError);
  CHECK_THROWS_AS(read_json_file(data("missing.json")), FormatError);
  try {
    read_json_file(data("missing.json"));
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("missing.json") != std::string::npos);
  }
}

TEST_CASE("subdivision round trip") {
  const Subdivision s = subdivision_from_json(read_json_file(data("a3_subdivision.json")));
  CHECK(s.rank() == 3);
  CHECK(triangle_pipeline(sphere(s)).Gamma.coefficients() == IntPoly2{{0, 3, 1}, {1, 1, 2}, {1, 0, 1}});
  const Subdivision back = subdivision_from_json(subdivision_to_json(s));
  CHECK(back.complex() == s.complex());
  CHECK(back.carriers() == s.carriers());
  CHECK(back.index_set() == s.index_set());

  const Subdivision d = dihedral_subdivision(5);
  CHECK(subdivision_from_json(subdivision_to_json(d)).carriers() == d.carriers());
}

TEST_CASE("subdivision rejections") {
  CHECK_THROWS_AS(subdivision_from_json(read_json_file(data("not_a_ball.json"))), FormatError);
  CHECK_THROWS_AS(subdivision_from_json(Json::parse(
                      R"({"complex": {"vertices": ["p"], "facets": [["p"]]}, "index_set": ["s"], "sigma": {}})")),
                  FormatError);
  CHECK_THROWS_AS(subdivision_from_json(Json::parse(R"({"index_set": ["s"], "sigma": {}})")), FormatError);
}

TEST_CASE("diagram round trip and rejection") {
  const CoxeterDiagram e6 = diagram_from_json(read_json_file(data("e6_diagram.json")));
  CHECK(classify(e6).front().name() == "E6");
  const CoxeterDiagram h3 = diagram_from_json(Json::parse(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b", 5], ["b", "c"]]})"));
  CHECK(h3.label(0, 1) == 5);
  CHECK(h3.label(1, 2) == 3);
  const CoxeterDiagram again = diagram_from_json(diagram_to_json(h3));
  CHECK(again.vertices() == h3.vertices());
  CHECK(again.label(0, 1) == 5);
  CHECK_THROWS_AS(classify(diagram_from_json(read_json_file(data("affine_diagram.json")))), ClassificationError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"vertices": ["a"], "edges": [["a"]]})")), FormatError);
}

TEST_CASE("polynomial encoding") {
  const IntPoly2 p{{0, 2, 1}, {1, 0, -3}};
  CHECK(poly_to_json(p).dump() == R"([[0,2,"1"],[1,0,"-3"]])");
  CHECK(poly2_from_json(poly_to_json(p)) == p);
  CHECK(poly2_from_json(Json::parse(R"([[0, 2, 1], [1, 0, "-3"]])")) == p);
  const BigInt big = pow(IntPoly1::constant(10), 30).coeff(0);
  const IntPoly1 q = IntPoly1::monomial(4, big);
  CHECK(poly_to_json(q).dump() == "[[4,\"" + big.str() + "\"]]");
  CHECK(poly1_from_json(poly_to_json(q)) == q);
  CHECK_THROWS_AS(poly2_from_json(Json::parse(R"([[0, "x", 1]])")), FormatError);
}

TEST_CASE("triangle, series and report encodings") {
  const Json g = gamma_triangle_to_json(GammaTriangle(IntPoly2{{0, 2, 1}, {1, 0, 1}}, 2));
  CHECK(g.at("degree") == 2);
  CHECK(g.at("coefficients").dump() == R"([[0,2,"1"],[1,0,"1"]])");

  const Json s = series_to_json(IntSeries::t(3));
  CHECK(s.at("order") == 3);
  CHECK(s.at("coefficients").dump() == R"([[],[[0,0,"1"]],[]])");

  Report r;
  r.suite = "demo";
  r.add("one", true, "fine");
  r.add("two", false, "broken");
  const Json j = report_to_json(r);
  CHECK(j.at("suite") == "demo");
  CHECK(j.at("passed") == false);
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("checks")[1].at("status") == "fail");
}
