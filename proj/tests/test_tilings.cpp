#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "omsep/cliques.hpp"
#include "omsep/construct.hpp"
#include "omsep/tilings.hpp"
#include "oracles.hpp"

using namespace omsep;
using oracle::set_of;

TEST_CASE("colocalization counts of alternating matroids") {
  // Rhombus tilings of the 2n-gon: 1, 2, 8, 62, 908.
  const std::vector<std::size_t> expected = {1, 2, 8, 62, 908};
  for (int n = 2; n <= 6; ++n) CHECK(enumerate_colocalizations(alternating(n, 2)).size() == expected[n - 2]);
  CHECK(enumerate_colocalizations(alternating(5, 3)).size() == 10);
  CHECK(enumerate_colocalizations(alternating(6, 3)).size() == 148);
  CHECK(enumerate_colocalizations(alternating(6, 4)).size() == 12);
}

TEST_CASE("enumeration limit and budget") {
  const auto m = alternating(5, 2);
  CHECK(enumerate_colocalizations(m, 3).size() == 3);
  Budget b;
  b.max_colocalizations = 5;
  CHECK_THROWS_AS(enumerate_colocalizations(m, 0, b), ResourceLimit);
  CHECK(max_by_size_collections(m, 1).front().size() == 16);
}

TEST_CASE("tilings") {
  const auto m = alternating(4, 2);
  for (const auto& s : max_by_size_collections(m)) {
    const auto rep = verify_tiling(m, s);
    CHECK(rep.ok);
    CHECK(rep.top_tiles == 6);  // rhombi in a tiling of the octagon
    CHECK(graph_distance_check(s));
    const auto tiles = tiling_of(m, s);
    std::size_t top = 0;
    for (const auto& t : tiles) top += popcount(tile_span(t, m.ground())) == 2;
    CHECK(top == 6);
  }
}

TEST_CASE("a non-maximal collection fails the tiling check") {
  const auto m = alternating(3, 2);
  const auto rep = verify_tiling(m, make_collection({0, set_of({1})}));
  CHECK(!rep.ok);
  CHECK(!rep.failures.empty());
}

TEST_CASE("mutation components") {
  const auto m = alternating(3, 2);
  const auto comps = mutation_components(m);
  CHECK(comps.component.size() == 8);
  // The only circuit (13, 2) links {1,3}-type and {2}-type sets.
  CHECK(comps.component[set_of({1, 3})] == comps.component[set_of({2})]);
  for (Bits s = 0; s < 8; ++s)
    for (Bits t : mutation_neighbors(m, s)) CHECK(comps.component[s] == comps.component[t]);
}

TEST_CASE("flip graph") {
  for (int n = 3; n <= 5; ++n) {
    const auto m = alternating(n, 2);
    const auto fg = flip_graph(m);
    CHECK(fg.connected);
    for (const auto& [u, v] : fg.edges) {
      int diff = 0, w = -1;
      for (int k = 0; k < m.num_circuits(); ++k)
        if (fg.vertices[u][k] != fg.vertices[v][k]) ++diff, w = k;
      CHECK(diff == 1);
      CHECK(mutation_relation_holds(m, fg.vertices[u], w));
    }
  }
}

TEST_CASE("separation table") {
  for (auto m : {alternating(5, 2), alternating(6, 4), from_vectors(triangle_with_centroid())}) {
    const SeparationTable t(m);
    const auto sc = m.signed_circuits();
    for (Bits i = 0; i <= m.ground(); ++i)
      for (Bits j = 0; j <= m.ground(); ++j) CHECK(t.separated(i, j) == oracle::separated(sc, i, j));
  }
}

TEST_CASE("maximal cliques") {
  // A 5-cycle has five maximal cliques, its edges.
  BitGraph g(5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  std::set<std::vector<int>> seen;
  const auto n = maximal_cliques(g, {0, 1, 2, 3, 4}, [&](const std::vector<int>& c) {
    auto s = c;
    std::sort(s.begin(), s.end());
    seen.insert(s);
    return true;
  }, Budget{});
  CHECK(n == 5);
  CHECK(seen.size() == 5);
  // A complete graph has one, found through the forced-vertex shortcut.
  BitGraph k(70);
  std::vector<int> all;
  for (int i = 0; i < 70; ++i) {
    all.push_back(i);
    for (int j = i + 1; j < 70; ++j) k.add_edge(i, j);
  }
  std::size_t size = 0;
  CHECK(maximal_cliques(k, all, [&](const std::vector<int>& c) { size = c.size(); return true; }, Budget{}) == 1);
  CHECK(size == 70);
}

TEST_CASE("purity") {
  CHECK(purity_check(alternating(5, 2)).pure);
  const auto r = purity_check(alternating(6, 4));
  CHECK(!r.pure);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->size() < r.independent);
  CHECK(oracle::collection_separated(alternating(6, 4).signed_circuits(), *r.witness));
}

TEST_CASE("domain purity against a subset-scan oracle") {
  const auto m = from_vectors(pentagon_with_centre());
  const auto comps = mutation_components(m);
  for (const auto& d : comps.members) {
    if (d.size() == 1 || d.size() > 16) continue;
    const auto lib = domain_maximal_collections(m, d);
    const auto ref = oracle::maximal_separated_subfamilies(m, d);
    std::set<Collection> a(lib.begin(), lib.end());
    std::set<Collection> b;
    for (const auto& f : ref) b.insert(make_collection(f));
    CHECK(a == b);
  }
}

TEST_CASE("bad collection certificate") {
  const auto m = from_vectors(triangle_with_centroid());
  const SignedSet c{set_of({6}), set_of({1, 2, 4})};
  const auto s0 = make_collection({set_of({4, 5, 6}), set_of({1, 3, 5, 6}), set_of({2, 3, 4, 5}), set_of({1, 2, 3, 4, 6})});
  const auto cert = bad_collection_certificate(m, c, s0);
  CHECK(cert.valid);
  CHECK(cert.rows.size() == 8);
  // Dropping a member leaves some orienting set unblocked.
  const auto weaker = make_collection({set_of({4, 5, 6}), set_of({1, 3, 5, 6}), set_of({2, 3, 4, 5})});
  CHECK(!bad_collection_certificate(m, c, weaker).valid);
}

TEST_CASE("domain restriction statement on the pentagon") {
  const auto rep = domain_restriction_conjecture_check(from_vectors(pentagon_with_centre()));
  CHECK(rep.counterexamples == 0);
  CHECK(rep.confirmations > 0);
}
