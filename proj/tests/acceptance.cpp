// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "omsep/construct.hpp"
#include "omsep/graphsep.hpp"
#include "omsep/separation.hpp"
#include "omsep/tilings.hpp"
#include "oracles.hpp"

using namespace omsep;
using oracle::set_of;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::size_t checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string str(const mpz_class& z) { return z.get_str(); }

// Undirected graph from one-based edge pairs.
UndirectedGraph graph(int vertices, std::vector<std::pair<int, int>> edges) {
  UndirectedGraph g;
  g.vertices = vertices;
  for (auto [u, v] : edges) g.edges.push_back({u - 1, v - 1});
  return g;
}

struct CorpusGraph {
  std::string name;
  UndirectedGraph g;
  bool outerplanar;  // known by inspection
};

std::vector<CorpusGraph> corpus() {
  Triangulation zigzag{6, {{1, 5}, {1, 4}, {2, 4}}};
  return {
      {"K4", complete_graph(4), false},
      {"K2,3", complete_bipartite(2, 3), false},
      {"C5", cycle_graph(5), true},
      {"fan 5-gon", triangulation_graph(fan_triangulation(5)), true},
      {"fan 6-gon", triangulation_graph(fan_triangulation(6)), true},
      {"K4 minus an edge", graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}), true},
      {"wheel W4", graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}}), false},
      {"prism", graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}}), false},
      {"K2,3 plus an edge", graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {1, 2}}), false},
      {"bowtie", graph(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}}), true},
      {"subdivided K4", graph(5, {{1, 2}, {1, 3}, {1, 5}, {5, 4}, {2, 3}, {2, 4}, {3, 4}}), false},
      {"zigzag 6-gon", triangulation_graph(zigzag), true},
  };
}

// ---------------------------------------------------------------------------

void criterion1(Criterion& c) {
  for (auto [n, d, expected] : std::vector<std::tuple<int, int, int>>{{5, 2, 16}, {5, 3, 26}}) {
    const auto m = alternating(n, d);
    const auto ind = tutte_eval(m, 2, 1);
    const auto sc = m.signed_circuits();
    c.check(ind == expected, "tutte(2,1) of C^{" + std::to_string(n) + "," + std::to_string(d) + "} = " + str(ind));
    c.check(oracle::independent_count(m) == static_cast<std::size_t>(expected), "independent-set oracle");
    const auto sigmas = enumerate_colocalizations(m);
    std::set<Collection> distinct;
    for (const auto& s : sigmas) {
      const auto coll = collection_of(m, s);
      c.check(static_cast<int>(coll.size()) == expected, "collection size " + std::to_string(coll.size()));
      c.check(oracle::collection_separated(sc, coll), "collection separated (oracle)");
      distinct.insert(coll);
    }
    c.check(distinct.size() == sigmas.size(), "collections distinct");
    c.note("C^{" + std::to_string(n) + "," + std::to_string(d) + "}: " + std::to_string(sigmas.size()) +
           " maximal collections, all of size " + std::to_string(expected));
  }
}

void criterion2(Criterion& c) {
  for (int d : {2, 3})
    for (int n = d; n <= 6; ++n) {
      const auto r = purity_check(alternating(n, d));
      c.check(r.pure, "C^{" + std::to_string(n) + "," + std::to_string(d) + "} pure");
    }
  const auto r64 = purity_check(alternating(6, 4));
  c.check(!r64.pure, "C^{6,4} not pure");
  // The witness lives on the dual of C^{6,2}, which is isomorphic to C^{6,4}.
  const auto m = dual(alternating(6, 2));
  c.check(is_isomorphic(m, alternating(6, 4)), "dual of C^{6,2} is isomorphic to C^{6,4}");
  const Collection s = make_collection({0, set_of({1, 2, 3, 4}), set_of({3, 4, 5, 6})});
  c.check(oracle::collection_separated(m.signed_circuits(), s), "witness separated (oracle)");
  c.check(is_complete(m, s), "witness complete");
  const auto sigma = sigma_of(m, s).sigma;
  c.check(!oracle::colocalization_brute(m, sigma), "witness sign map is not Type III everywhere (oracle)");
  c.check(!is_colocalization_gp(m, sigma), "witness sign map is not a colocalization");
  bool contained = false;
  for (const auto& t : enumerate_colocalizations(m)) {
    const auto coll = collection_of(m, t);
    if (std::includes(coll.begin(), coll.end(), s.begin(), s.end())) contained = true;
  }
  c.check(!contained, "witness inside no maximal-by-size collection");
  c.note("C^{n,2}, C^{n,3} pure for n <= 6; C^{6,4} smallest maximal clique " + std::to_string(r64.min_size) +
         " < " + std::to_string(r64.independent));
}

void criterion3(Criterion& c) {
  const auto k23 = complete_bipartite(2, 3);
  const auto mk = graphic_matroid(k23);
  c.check(tutte_eval(mk, 2, 1) == 54, "K2,3 forests by Tutte");
  c.check(oracle::forests(k23) == 54, "K2,3 forests (oracle)");
  c.check(count_acyclic_orientations(k23) == 46, "K2,3 acyclic orientations");
  std::size_t acyc = 0;
  for (Bits f = 0; f < 64; ++f) acyc += oracle::acyclic(k23, f);
  c.check(acyc == 46, "K2,3 acyclic orientations (oracle)");
  c.check(cycle_reversal_components(k23).members.size() == 54, "K2,3 cycle-reversal classes");
  c.check(!purity_check(mk).pure, "K2,3 not pure");
  c.check(!purity_check(graphic_matroid(complete_graph(4))).pure, "K4 not pure");
  for (int p : {5, 6, 7}) {
    const auto r = purity_check(graphic_matroid(triangulation_graph(fan_triangulation(p))));
    c.check(r.pure, "triangulated " + std::to_string(p) + "-gon pure");
  }
  int agree = 0;
  for (const auto& cg : corpus()) {
    const bool op = outerplanar(cg.g).outerplanar;
    const bool pure = purity_check(graphic_matroid(cg.g)).pure;
    c.check(op == cg.outerplanar, cg.name + ": outerplanar verdict matches inspection");
    c.check(op == pure, cg.name + ": outerplanar iff pure");
    agree += op == pure;
  }
  c.note("K2,3: 54 forests, 46 acyclic, 54 classes; " + std::to_string(agree) + "/12 corpus graphs agree");
}

void criterion4(Criterion& c) {
  CensusStats stats;
  const auto classes = census_rank3_simple(6, &stats);
  c.check(classes.size() == 17, "17 classes, got " + std::to_string(classes.size()));
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b)
      c.check(!is_isomorphic(classes[a], classes[b]), "classes pairwise non-isomorphic");
  int positive = 0, pure = 0;
  for (const auto& m : classes) {
    c.check(validate_axioms(m.signed_circuits()).ok(), "class satisfies the axioms");
    c.check(m.rank() == 3 && is_simple(m), "class simple of rank 3");
    const bool pos = is_positively_orientable(m);
    const bool pu = purity_check(m).pure;
    positive += pos;
    pure += pu;
    c.check(pos == pu, "pure exactly when positively orientable");
  }
  c.check(positive == 8, "8 positively orientable, got " + std::to_string(positive));
  c.check(pure == 8, "8 pure, got " + std::to_string(pure));

  const auto m = from_vectors(triangle_with_centroid());
  int matches = 0;
  for (const auto& k : classes) matches += is_isomorphic(k, m);
  c.check(matches == 1, "triangle-with-centroid configuration matches one class");
  const SignedSet bad{set_of({6}), set_of({1, 2, 4})};
  const auto s0 = make_collection({set_of({4, 5, 6}), set_of({1, 3, 5, 6}), set_of({2, 3, 4, 5}), set_of({1, 2, 3, 4, 6})});
  const auto cert = bad_collection_certificate(m, bad, s0);
  c.check(cert.valid && cert.is_circuit && cert.collection_separated, "certificate valid");
  c.check(oracle::collection_separated(m.signed_circuits(), s0), "bad collection separated (oracle)");
  // Expected blocker table: set -> one listed blocker.
  const std::map<Bits, Bits> table = {
      {set_of({6}), set_of({2, 3, 4, 5})},         {set_of({3, 6}), set_of({2, 3, 4, 5})},
      {set_of({5, 6}), set_of({1, 2, 3, 4, 6})},   {set_of({3, 5, 6}), set_of({1, 2, 3, 4, 6})},
      {set_of({1, 2, 4}), set_of({1, 3, 5, 6})},   {set_of({1, 2, 3, 4}), set_of({4, 5, 6})},
      {set_of({1, 2, 4, 5}), set_of({1, 3, 5, 6})}, {set_of({1, 2, 3, 4, 5}), set_of({4, 5, 6})}};
  c.check(cert.rows.size() == 8, "8 rows");
  const auto sc = m.signed_circuits();
  for (const auto& row : cert.rows) {
    const auto it = table.find(row.set);
    c.check(it != table.end(), "row set appears in the expected table");
    if (it == table.end()) continue;
    c.check(std::find(row.blockers.begin(), row.blockers.end(), it->second) != row.blockers.end(),
            "listed blocker present");
    c.check(!oracle::separated(sc, row.set, it->second), "listed blocker not separated (oracle)");
  }
  // Oracle: exactly these eight sets orient the bad circuit.
  std::size_t orienting = 0;
  for (Bits s = 0; s < 64; ++s)
    if (orients_positively(s, bad) || orients_positively(s, -bad)) {
      ++orienting;
      c.check(table.count(s) == 1, "orienting set is in the table");
    }
  c.check(orienting == 8, "eight orienting sets");
  c.note("17 classes (" + std::to_string(stats.chirotopes) + " normalized chirotopes), 8 positive, 8 pure / 9 not; certificate 8 rows");
}

void criterion5(Criterion& c) {
  const std::vector<std::pair<std::vector<int>, bool>> rows = {
      {{3, 1, 1, 1}, true}, {{2, 1, 2, 1}, true}, {{3, 2, 1}, true},    {{3, 3}, true},
      {{1, 1, 1, 1, 1, 1}, false}, {{2, 1, 1, 1, 1}, false}, {{2, 2, 1, 1}, false}, {{2, 2, 2}, false}};
  std::string line;
  for (const auto& [comp, expected] : rows) {
    const auto m = corank2_family(comp);
    std::string name = "(";
    for (std::size_t i = 0; i < comp.size(); ++i) name += (i ? "," : "") + std::to_string(comp[i]);
    name += ")";
    c.check(m.rank() == 4 && m.corank() == 2, name + " rank 4 corank 2");
    const bool pure = purity_check(m).pure;
    c.check(pure == expected, name + (expected ? " pure" : " not pure"));
    line += name + (pure ? "=pure " : "=not-pure ");
  }
  c.check(is_isomorphic(corank2_family({1, 1, 1, 1, 1, 1}), alternating(6, 4)), "(1,1,1,1,1,1) is C^{6,4}");
  c.check(is_isomorphic(corank2_family({2, 2, 2}), graphic_matroid(complete_bipartite(2, 3))), "(2,2,2) is K2,3");
  c.note(line);
}

void criterion6(Criterion& c) {
  const auto m = from_vectors(pentagon_with_centre());
  const auto comps = mutation_components(m);
  std::size_t isolated = 0;
  std::vector<std::vector<Bits>> big;
  for (const auto& d : comps.members) (d.size() == 1 ? (void)++isolated : big.push_back(d));
  c.check(comps.component.size() == 64, "64 vertices");
  c.check(isolated == 32, "32 isolated, got " + std::to_string(isolated));
  c.check(big.size() == 2 && big[0].size() == 12 && big[1].size() == 20, "components of sizes 12 and 20");
  if (big.size() != 2) return;
  const auto ico = domain_purity_check(m, big[0]);
  c.check(ico.pure && ico.max_size == 3 && ico.min_size == 3, "icosahedron domain pure with size 3");
  const auto ico_oracle = oracle::maximal_separated_subfamilies(m, big[0]);
  c.check(ico_oracle.size() == 20, "20 maximal collections (oracle), got " + std::to_string(ico_oracle.size()));
  for (const auto& f : ico_oracle) c.check(f.size() == 3, "oracle collection of size 3");
  c.check(domain_maximal_collections(m, big[0]).size() == ico_oracle.size(), "clique count matches oracle");
  const auto dod = domain_purity_check(m, big[1]);
  c.check(!dod.pure, "dodecahedron domain not pure");
  const auto dod_oracle = oracle::maximal_separated_subfamilies(m, big[1]);
  std::set<std::size_t> sizes;
  for (const auto& f : dod_oracle) sizes.insert(f.size());
  c.check(sizes.size() > 1, "dodecahedron maximal sizes differ (oracle)");
  c.check(domain_maximal_collections(m, big[1]).size() == dod_oracle.size(), "dodecahedron count matches oracle");
  c.note("32 isolated + 12 + 20; icosahedron: 20 collections of size 3; dodecahedron: " +
         std::to_string(dod_oracle.size()) + " maximal collections, sizes " + std::to_string(*sizes.begin()) + ".." +
         std::to_string(*sizes.rbegin()));
}

// gamma colocalizations by brute force through the graphic matroid.
std::size_t gamma_brute(const TriangulationTree& tt) {
  const auto m = graphic_matroid(tt.graph);
  const int k = static_cast<int>(tt.subtrees.size());
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    Gamma g(k);
    for (int i = 0; i < k; ++i) g[i] = (code >> i) & 1 ? Sign::Minus : Sign::Plus;
    count += oracle::colocalization_brute(m, gamma_to_sigma(tt, m, g));
  }
  return count;
}

void criterion7(Criterion& c) {
  for (auto [a, b, expected] : std::vector<std::tuple<int, int, int>>{{0, 0, 6}, {1, 0, 24}}) {
    const auto r = t_ab(a, b);
    const auto rep = all_coherent_check(r.tt);
    const std::string name = "T_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    c.check(coherent_count(a, b) == expected, name + " formula");
    c.check(rep.colocalizations == static_cast<std::size_t>(expected), name + " enumeration");
    c.check(rep.all_coherent(), name + " all coherent");
    c.check(gamma_brute(r.tt) == static_cast<std::size_t>(expected), name + " brute force through the matroid");
    c.check(count_regions(arrangement_Aab(a, b)) == expected, name + " arrangement regions");
  }
  const auto r = triangulation_from_tree(ehat6_tree());
  const auto labels = labels_on_triangles(r, ehat6_labels());
  const auto g = noncoherent_perturbation(r.tt, labels);
  c.check(g.has_value(), "E6-hat perturbation found");
  if (g) {
    c.check(is_g_colocalization(r.tt, *g), "perturbation is a colocalization");
    c.check(!is_coherent(r.tt, *g), "perturbation is not coherent (tree labels)");
    const auto m = graphic_matroid(r.tt.graph);
    const auto sigma = gamma_to_sigma(r.tt, m, *g);
    c.check(oracle::colocalization_brute(m, sigma), "perturbation passes the Type III oracle");
    c.check(!is_coherent(m, sigma), "perturbation is not coherent (edge weights)");
  }
  c.note("T_{0,0}: 6, T_{1,0}: 24 (formula = enumeration = brute force = regions); E6-hat has a non-coherent colocalization");
}

void criterion8(Criterion& c) {
  std::vector<std::pair<std::string, OrientedMatroid>> ms;
  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d <= n; ++d) ms.push_back({"C^{" + std::to_string(n) + "," + std::to_string(d) + "}", alternating(n, d)});
  ms.push_back({"free 4", free_matroid(4)});
  for (auto comp : std::vector<std::vector<int>>{{3, 1, 1, 1}, {2, 1, 2, 1}, {3, 2, 1}, {3, 3}, {2, 2, 2}})
    ms.push_back({"corank-2 family", corank2_family(comp)});
  ms.push_back({"pentagon", from_vectors(pentagon_with_centre())});
  ms.push_back({"triangle-with-centroid", from_vectors(triangle_with_centroid())});
  ms.push_back({"three-lines", from_vectors(three_lines_configuration())});
  for (const auto& cg : corpus()) ms.push_back({cg.name, graphic_matroid(cg.g)});

  std::size_t tilings = 0, flips = 0, profiles = 0;
  for (const auto& [name, m] : ms) {
    c.check(validate_axioms(m.signed_circuits()).ok(), name + " satisfies the axioms");
    const auto dm = dual(m);
    c.check(validate_axioms(dm.signed_circuits()).ok(), name + " dual satisfies the axioms");
    c.check(dual(dm) == m, name + " double dual");
    if (m.size() > 7) continue;
    const auto sigmas = enumerate_colocalizations(m);
    const auto cycles = all_corank2_cycles(m);
    for (const auto& s : sigmas) {
      const auto coll = collection_of(m, s);
      c.check(sigma_of(m, coll).sigma == s, name + " sigma round trip");
      c.check(collection_of(m, sigma_of(m, coll).sigma) == coll, name + " collection round trip");
      const auto rep = verify_tiling(m, coll);
      c.check(rep.ok, name + " tiling properties: " + (rep.failures.empty() ? "" : rep.failures.front()));
      ++tilings;
      for (int e = 0; e < m.size(); ++e)
        c.check(coll.size() == collection_delete(coll, e).size() + collection_contract(coll, e).size(),
                name + " deletion-contraction size identity");
      for (const auto& cy : cycles) {
        c.check(epsilon_condition(epsilon_profile(cy, coll)), name + " epsilon profile");
        ++profiles;
      }
    }
    if (m.size() <= 6) {
      const auto fg = flip_graph(m);
      for (const auto& [u, v] : fg.edges)
        for (int w = 0; w < m.num_circuits(); ++w)
          if (fg.vertices[u][w] != fg.vertices[v][w]) {
            c.check(mutation_relation_holds(m, fg.vertices[u], w), name + " mutation relation");
            ++flips;
          }
    }
  }
  for (int n = 2; n <= 7; ++n)
    for (int d = 0; d <= n; ++d)
      c.check(is_isomorphic(dual(alternating(n, d)), alternating(n, n - d)), "dual of C^{n,d} is C^{n,n-d}");

  // Weak map from the three-lines configuration onto the triangle with its
  // centroid, after some relabeling and reorientation.
  const auto m12 = from_vectors(three_lines_configuration());
  const auto m13 = from_vectors(triangle_with_centroid());
  bool weak = false;
  std::vector<int> p{0, 1, 2, 3, 4, 5};
  do {
    const auto r = relabel(m13, p);
    for (Bits a = 0; a < 64 && !weak; ++a) weak = weak_map_leq(m12, reorient(r, a));
  } while (!weak && std::next_permutation(p.begin(), p.end()));
  c.check(weak, "weak map from the three-lines class to the triangle-with-centroid class");
  c.note(std::to_string(ms.size()) + " matroids validated; " + std::to_string(tilings) + " tilings, " +
         std::to_string(profiles) + " epsilon profiles, " + std::to_string(flips) + " flip relations checked");
}

void criterion9(Criterion& c) {
  for (int n : {3, 4, 5}) {
    const auto m = alternating(n, 2);
    auto lib = enumerate_colocalizations(m);
    auto brute = oracle::all_sign_maps(m, [&](const SignMap& s) { return oracle::colocalization_brute(m, s); });
    auto lifted = oracle::all_sign_maps(m, [&](const SignMap& s) { return oracle::lifting_valid(m, s); });
    std::sort(lib.begin(), lib.end());
    std::sort(brute.begin(), brute.end());
    std::sort(lifted.begin(), lifted.end());
    const std::string name = "C^{" + std::to_string(n) + ",2}";
    c.check(lib == brute, name + " enumeration equals Type III brute force");
    c.check(lifted == brute, name + " lifting oracle agrees");
    if (n == 3) c.check(lib.size() == 2, "C^{3,2} has 2");
    if (n == 4) c.check(lib.size() == 8, "C^{4,2} has 8");
    c.note(name + ": " + std::to_string(lib.size()) + " colocalizations");
  }
  std::size_t pairs = 0, graphs = 0;
  for (const auto& cg : corpus()) {
    const auto& g = cg.g;
    if (g.size() > 8) continue;
    ++graphs;
    const auto m = graphic_matroid(g);
    const auto cycles = oracle::cycle_edge_sets(g);
    const auto lib_cycles = simple_cycles(g.reference());
    c.check(cycles.size() == lib_cycles.size(), cg.name + " cycle count");
    const Bits top = full_set(g.size());
    for (Bits o1 = 0; o1 <= top; ++o1)
      for (Bits o2 = o1; o2 <= top; ++o2) {
        const bool want = oracle::g_separated_brute(g, cycles, o1, o2);
        c.check(is_pair_separated(m, o1, o2) == want, cg.name + " matroid separation matches cycles");
        c.check(g_separated_by_walks(g, lib_cycles, {o1}, {o2}) == want, cg.name + " walk separation matches");
        ++pairs;
      }
  }
  c.note("graph separation checked on " + std::to_string(pairs) + " orientation pairs of " + std::to_string(graphs) +
         " graphs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> all = {
      {"maximal-by-size collection sizes", criterion1},
      {"purity of alternating matroids", criterion2},
      {"graph numbers and outerplanarity", criterion3},
      {"six-element census", criterion4},
      {"rank-4 corank-2 table", criterion5},
      {"pentagon mutation graph", criterion6},
      {"coherent counting", criterion7},
      {"property suites", criterion8},
      {"oracle equivalences", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), all[i].first, {}, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      all[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    const bool ok = c.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line << "criterion " << c.id << " [" << c.title << "]: " << (ok ? "PASS" : "FAIL") << " (" << c.checks
         << " checks, " << std::fixed << std::setprecision(1) << dt.count() << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) std::cout << "    failed: " << c.failures[k] << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
