#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omsep/feasibility.hpp"
#include "omsep/graphsep.hpp"
#include "omsep/tilings.hpp"
#include "oracles.hpp"

using namespace omsep;

TEST_CASE("exact strict feasibility") {
  CHECK(strict_sign_feasibility({}, 2).has_value());
  const std::vector<SignConstraint> contra = {{{mpq_class(1)}, Sign::Plus}, {{mpq_class(-1)}, Sign::Plus}};
  CHECK(!strict_sign_feasibility(contra, 1).has_value());
  // x > 0, y < 0, x + y = 0.
  const std::vector<SignConstraint> rows = {{{1, 0}, Sign::Plus}, {{0, 1}, Sign::Minus}, {{1, 1}, Sign::Zero}};
  const auto w = strict_sign_feasibility(rows, 2);
  REQUIRE(w.has_value());
  CHECK((*w)[0] > 0);
  CHECK((*w)[0] + (*w)[1] == 0);
}

TEST_CASE("K2,3 numbers") {
  const auto g = complete_bipartite(2, 3);
  CHECK(count_acyclic_orientations(g) == 46);
  CHECK(oracle::forests(g) == 54);
  const auto rc = cycle_reversal_components(g);
  CHECK(rc.members.size() == 54);
  for (const auto& comp : rc.members) {
    const auto rep = polytopality_check(g, comp);
    CHECK(rep.ok);
  }
}

TEST_CASE("separation of orientations") {
  const auto g = complete_graph(4);
  const auto cycles = oracle::cycle_edge_sets(g);
  for (Bits a = 0; a < 64; ++a)
    for (Bits b = 0; b < 64; b += 7) CHECK(g_separated(g, {a}, {b}) == oracle::g_separated_brute(g, cycles, a, b));
  for (Bits a = 0; a < 64; ++a) CHECK(is_acyclic(g, {a}) == oracle::acyclic(g, a));
}

TEST_CASE("indegree classes") {
  const auto g = cycle_graph(4);
  // Flipping edge {0,3} makes a directed 4-cycle; reversing it keeps indegrees.
  CHECK(indegree_sequence(g, {0b1000}) == indegree_sequence(g, {0b0111}));
  CHECK(indegree_sequence(g, {0}) != indegree_sequence(g, {0b0001}));
  const auto rc = cycle_reversal_components(g);
  CHECK(rc.members.size() == 15);  // forests of C4
}

TEST_CASE("outerplanarity") {
  CHECK(!outerplanar(complete_graph(4)).outerplanar);
  CHECK(outerplanar(complete_graph(4)).minor == "K4");
  CHECK(outerplanar(complete_bipartite(2, 3)).minor == "K2,3");
  CHECK(outerplanar(cycle_graph(6)).outerplanar);
  CHECK(outerplanar(triangulation_graph(fan_triangulation(7))).outerplanar);
}

TEST_CASE("triangulation trees") {
  const auto tt = tree_of_triangulation(fan_triangulation(5));
  CHECK(tt.triangles.size() == 3);
  CHECK(tt.subtrees.size() == 6);  // connected subsets of a path on 3 nodes
  const auto m = graphic_matroid(tt.graph);
  CHECK(static_cast<std::size_t>(m.num_circuits()) == tt.subtrees.size());
  for (std::size_t i = 0; i < tt.subtrees.size(); ++i) CHECK(m.is_circuit(tt.cycle[i]));
  const auto r = t_ab(1, 1);
  CHECK(r.tt.triangles.size() == 4);
}

TEST_CASE("gamma colocalizations match the matroid") {
  const auto tt = tree_of_triangulation(fan_triangulation(6));
  const auto m = graphic_matroid(tt.graph);
  const int k = static_cast<int>(tt.subtrees.size());
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    Gamma g(k);
    for (int i = 0; i < k; ++i) g[i] = (code >> i) & 1 ? Sign::Minus : Sign::Plus;
    const bool a = is_g_colocalization(tt, g);
    CHECK(a == is_colocalization_gp(m, gamma_to_sigma(tt, m, g)));
    count += a;
  }
  CHECK(count == enumerate_g_colocalizations(tt).size());
}

TEST_CASE("coherent counting") {
  CHECK(coherent_count(0, 0) == 6);
  CHECK(coherent_count(1, 0) == 24);
  CHECK(coherent_count(1, 1) == 160);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 0}}) {
    const auto rep = all_coherent_check(t_ab(a, b).tt);
    CHECK(rep.all_coherent());
    CHECK(mpz_class(static_cast<unsigned long>(rep.colocalizations)) == coherent_count(a, b));
    CHECK(count_regions(arrangement_Aab(a, b)) == coherent_count(a, b));
  }
  // Unshifted index ranges give fewer regions.
  CHECK(count_regions(arrangement_Aab_literal(1, 0)) == 18);
}

TEST_CASE("regions of small arrangements") {
  CHECK(count_regions({{1, 0}, {0, 1}}) == 4);
  CHECK(count_regions({{1, 0}, {0, 1}, {1, 1}}) == 6);
  CHECK(count_regions({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 8);
}

TEST_CASE("non-coherent colocalizations") {
  const auto r = triangulation_from_tree(ehat6_tree());
  const auto labels = labels_on_triangles(r, ehat6_labels());
  CHECK(zero_subtrees(r.tt, labels).size() == 7);
  const auto g = noncoherent_perturbation(r.tt, labels);
  REQUIRE(g.has_value());
  CHECK(is_g_colocalization(r.tt, *g));
  CHECK(!is_coherent(r.tt, *g));

  const auto d = triangulation_from_tree(dhat_tree(5));
  const auto dl = labels_on_triangles(d, dhat_labels(5));
  const auto dg = noncoherent_perturbation(d.tt, dl);
  REQUIRE(dg.has_value());
  CHECK(!is_coherent(d.tt, *dg));
}

TEST_CASE("coherence over vectors uses dependence coefficients") {
  const auto v = pentagon_with_centre();
  const auto m = from_vectors(v);
  // A functional on the ground set induces a coherent colocalization.
  SignMap induced(m.num_circuits());
  const std::vector<mpq_class> lambda = {3, -5, 7, 11, -13, 2};
  for (int i = 0; i < m.num_circuits(); ++i) {
    const auto c = dependence(v, m.circuits()[i].support());
    mpq_class val = 0;
    for (int e = 0; e < m.size(); ++e) val += c[e] * lambda[e];
    induced[i] = val > 0 ? Sign::Plus : Sign::Minus;
  }
  CHECK(is_coherent(m, induced, v));
}
