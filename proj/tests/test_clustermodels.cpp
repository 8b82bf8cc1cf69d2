#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammatri/clustermodels.hpp"
#include "oracles.hpp"

using namespace gammatri;

TEST_CASE("crossing diagonals") {
  CHECK(diagonals_cross({0, 2}, {1, 3}));
  CHECK(diagonals_cross({1, 3}, {0, 2}));
  CHECK_FALSE(diagonals_cross({0, 2}, {2, 4}));
  CHECK_FALSE(diagonals_cross({0, 2}, {0, 3}));
  CHECK_FALSE(diagonals_cross({1, 2}, {0, 4}));
  CHECK(diagonal_label({2, 5}) == "d2-5");
}

TEST_CASE("snake triangulation") {
  const PolygonModel m = polygon_model(2);
  CHECK(m.polygon_size == 5);
  CHECK(m.snake == std::vector<Diagonal>{{1, 4}, {1, 3}});
  CHECK(m.positive == std::vector<Diagonal>{{0, 2}, {0, 3}, {2, 4}});

  const PolygonModel m3 = polygon_model(3);
  CHECK(m3.snake == std::vector<Diagonal>{{1, 5}, {1, 4}, {2, 4}});
  for (std::size_t i = 0; i < m3.snake.size(); ++i)
    for (std::size_t k = i + 1; k < m3.snake.size(); ++k) CHECK_FALSE(diagonals_cross(m3.snake[i], m3.snake[k]));
  CHECK_THROWS_AS(polygon_model(0), DomainError);
}

TEST_CASE("positive diagonals number the positive roots") {
  for (int n = 1; n <= 7; ++n) {
    const PolygonModel m = polygon_model(n);
    CHECK(m.positive.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    for (const Diagonal& d : m.positive) {
      bool crosses = false;
      for (const Diagonal& s : m.snake) crosses = crosses || diagonals_cross(d, s);
      CHECK(crosses);
    }
  }
}

TEST_CASE("type A model carriers are intervals of the snake") {
  const Subdivision s = type_a_subdivision(4);
  CHECK(s.rank() == 4);
  for (IndexMask c : s.carriers()) {
    const IndexMask shifted = c >> std::countr_zero(c);
    CHECK((shifted & (shifted + 1)) == 0);
  }
  CHECK(s.index_set() == std::vector<std::string>{"s1", "s2", "s3", "s4"});
}

TEST_CASE("type A sphere has Catalan many facets") {
  for (int n = 1; n <= 5; ++n) {
    const SphereWithFacet sph = sphere(type_a_subdivision(n));
    CHECK(static_cast<long>(sph.complex().facets().size()) == oracle::triangulation_count(n + 3));
    CHECK(is_flag(sph.complex()));
    CHECK(is_pure(sph.complex()));
    CHECK(dimension(sph.complex()) == n - 1);
  }
}

TEST_CASE("A3 model f-vector") {
  const SphereWithFacet sph = sphere(type_a_subdivision(3));
  CHECK(f_vector(sph.complex()) == std::vector<BigInt>{1, 9, 21, 14});
}

TEST_CASE("dihedral model") {
  const Subdivision s = dihedral_subdivision(5);
  CHECK(s.rank() == 2);
  CHECK(s.complex().vertex_count() == 5);
  CHECK(s.complex().facets().size() == 4);
  CHECK(s.carriers().front() == 1);
  CHECK(s.carriers().back() == 2);
  CHECK_NOTHROW(validate_ball_property(s));
  CHECK_THROWS_AS(dihedral_subdivision(1), DomainError);
}

TEST_CASE("roots by support size") {
  for (int n = 1; n <= 8; ++n) {
    std::map<int, long> expected;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) ++expected[b - a + 1];
    auto got = count_roots_by_support(n);
    std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
    CHECK(got == expected);
  }
  CHECK(count_roots_by_support(3) == std::map<int, long>{{2, 2}, {3, 1}});
}
