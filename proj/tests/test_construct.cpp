#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omsep/construct.hpp"
#include "omsep/graphsep.hpp"
#include "oracles.hpp"

using namespace omsep;
using oracle::set_of;

TEST_CASE("alternating matroids") {
  const auto m = alternating(4, 2);
  CHECK(m.find_circuit({set_of({1, 3}), set_of({2})}).has_value());
  CHECK(m.find_circuit({set_of({2, 4}), set_of({3})}).has_value());
  CHECK(m.find_circuit({set_of({1, 4}), set_of({2})}).has_value());
  CHECK(m.find_circuit({set_of({1, 2}), set_of({4})}) == std::nullopt);
  CHECK(free_matroid(4).num_circuits() == 0);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == mpq_class(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK(format_rational(mpq_class(-4, 6)) == "-2/3");
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("vector configurations") {
  VectorConfiguration v;
  v.dimension = 2;
  v.columns = {{1, 0}, {1, 1}, {1, 2}};
  const auto m = from_vectors(v);
  CHECK(m.rank() == 2);
  REQUIRE(m.num_circuits() == 1);
  // 1 - 2*2 + 3 = 0 in the second coordinate, sign pattern (13, 2).
  CHECK(m.circuits()[0] == SignedSet{set_of({1, 3}), set_of({2})});
  const auto dep = dependence(v, 0b111);
  CHECK(dep[0] > 0);
  CHECK(dep[1] == -2 * dep[0]);
  CHECK(rank_of_columns(v, 0b011) == 2);
}

TEST_CASE("chirotopes round trip") {
  for (int d = 1; d <= 4; ++d) {
    const auto m = alternating(6, d);
    const auto chi = chirotope_from_matroid(m);
    CHECK(circuits_from_chirotope(chi) == m);
  }
  const auto v = pentagon_with_centre();
  const auto chi = chirotope_from_vectors(v);
  CHECK(circuits_from_chirotope(chi) == from_vectors(v));
  CHECK(chi.eval({0, 1, 2}) == -chi.eval({1, 0, 2}));
}

TEST_CASE("digraphs") {
  DirectedGraph g;
  g.vertices = 3;
  g.edges = {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}};
  const auto cycles = simple_cycles(g);
  REQUIRE(cycles.size() == 1);
  const auto m = from_digraph(g);
  REQUIRE(m.num_circuits() == 1);
  // a and b run one way around the triangle, c the other.
  const auto c = m.circuits()[0];
  CHECK(c.plus == set_of({1, 2}));
  CHECK(c.minus == set_of({3}));
  CHECK(m.labels() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("positive orientation") {
  CHECK(is_positively_orientable(alternating(6, 3)));
  CHECK(is_positively_orientable(reorient(alternating(6, 3), 0b100101)));
  CHECK(!is_positively_orientable(from_vectors(triangle_with_centroid())));
  CHECK(!is_positively_orientable(from_vectors(pentagon_with_centre())));
  // Hexagon vertices lie on their hull; the centred pentagon does not.
  VectorConfiguration hex = affine_points({{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}});
  CHECK(on_convex_boundary(hex));
  CHECK(is_positively_orientable(from_vectors(hex)));
  CHECK(!on_convex_boundary(pentagon_with_centre()));
}

TEST_CASE("rank-3 census") {
  CHECK(census_rank3_simple(4).size() == 2);
  CHECK(census_rank3_simple(5).size() == 4);
  CensusStats st;
  const auto six = census_rank3_simple(6, &st);
  CHECK(six.size() == 17);
  CHECK(st.classes == 17);
}

TEST_CASE("corank-2 families") {
  const auto m = corank2_family({1, 1, 1, 1, 1, 1});
  CHECK(m.rank() == 4);
  CHECK(is_isomorphic(m, alternating(6, 4)));
  CHECK(is_isomorphic(corank2_family({2, 2, 2}), graphic_matroid(complete_bipartite(2, 3))));
  CHECK_THROWS_AS(corank2_family({4, 1}), ValidationError);
}
