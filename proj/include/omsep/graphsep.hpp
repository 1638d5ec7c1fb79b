#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "omsep/budget.hpp"
#include "omsep/construct.hpp"
#include "omsep/feasibility.hpp"
#include "omsep/separation.hpp"

namespace omsep {

// Undirected graph; edge e is referenced as directed from its lower to its
// higher endpoint, so the ground set of its oriented matroid is the edge list.
struct UndirectedGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;  // per edge; empty means 1..m

  int size() const { return static_cast<int>(edges.size()); }
  DirectedGraph reference() const;
};

UndirectedGraph complete_graph(int n);
UndirectedGraph complete_bipartite(int a, int b);
UndirectedGraph cycle_graph(int n);

OrientedMatroid graphic_matroid(const UndirectedGraph& g);

// A total orientation as the set of edges reversed against the reference.
struct TotalOrientation {
  Bits flipped = 0;
  bool operator==(const TotalOrientation&) const = default;
};

// No cycle is directed one way in o1 and the other way in o2. Computed by
// walking every cycle and by matroid separation; throws if they disagree.
bool g_separated(const UndirectedGraph& g, TotalOrientation o1, TotalOrientation o2);
bool g_separated_by_walks(const UndirectedGraph& g, const std::vector<GraphCycle>& cycles, TotalOrientation o1,
                          TotalOrientation o2);
bool is_acyclic(const UndirectedGraph& g, TotalOrientation o);
std::size_t count_acyclic_orientations(const UndirectedGraph& g);

std::vector<int> indegree_sequence(const UndirectedGraph& g, TotalOrientation o);

// Partition of all orientations into cycle-reversal classes, computed by BFS
// over single cycle reversals and checked against indegree grouping.
struct ReversalComponents {
  std::vector<int> component;  // per orientation (indexed by flipped set)
  std::vector<std::vector<Bits>> members;  // ordered by smallest member
};
ReversalComponents cycle_reversal_components(const UndirectedGraph& g);

struct PolytopalityReport {
  bool ok = true;
  std::size_t vertices = 0;
  std::size_t reversal_edges = 0;  // pairs related by one cycle reversal
  std::size_t hull_edges = 0;  // pairs certified as hull edges
  std::size_t mismatches = 0;
};
// Within one component: a pair spans a hull edge of the +-1 embedding iff it
// is a single cycle reversal. Hull edges are decided by exact feasibility;
// reversal pairs also get the explicit +1/0/-1 functional checked.
PolytopalityReport polytopality_check(const UndirectedGraph& g, const std::vector<Bits>& component);

// ---------------------------------------------------------------------------

struct OuterplanarResult {
  bool outerplanar = true;
  std::string minor;  // "K4" or "K2,3" when not outerplanar
};
// Minor search for K4 and K2,3 by deletions and contractions; |V| <= 10 and
// |E| <= 16.
OuterplanarResult outerplanar(const UndirectedGraph& g);

// ---------------------------------------------------------------------------
// Triangulated polygons and their dual trees.

struct Triangulation {
  int polygon = 0;  // vertices 0..polygon-1 in boundary order
  std::vector<std::pair<int, int>> diagonals;
};
UndirectedGraph triangulation_graph(const Triangulation& t);
Triangulation fan_triangulation(int polygon);

struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};
Tree t_ab_tree(int a, int b);  // vertices: -a..b as 0..a+b, leaf last
Tree ehat6_tree();  // centre 0, arms (1,2), (3,4), (5,6) with leaves 2, 4, 6
Tree dhat_tree(int n);  // leaves 0,1 at U's start, 2,3 at U's end, U = 4..n

struct TriangulationTree {
  Triangulation triangulation;
  UndirectedGraph graph;
  std::vector<std::array<int, 3>> triangles;  // sorted vertex triples
  std::vector<std::vector<int>> adjacency;  // triangles sharing a diagonal
  std::vector<Bits> subtrees;  // connected node sets, by size then value
  std::vector<SignedSet> cycle;  // circuit for each subtree, counterclockwise positive
  int index_of(Bits subtree) const;
};
TriangulationTree tree_of_triangulation(const Triangulation& t);

// Triangulation whose dual tree is `tree` (max degree 3), plus the triangle
// hosting each tree node.
struct Realized {
  TriangulationTree tt;
  std::vector<int> triangle_of_node;
};
Realized triangulation_from_tree(const Tree& tree);
inline Realized t_ab(int a, int b) { return triangulation_from_tree(t_ab_tree(a, b)); }

// Node labels moved to triangle indices.
std::vector<mpq_class> labels_on_triangles(const Realized& r, const std::vector<mpq_class>& node_labels);

// Gamma values per subtree, in TriangulationTree::subtrees order.
using Gamma = std::vector<Sign>;

bool is_g_colocalization(const TriangulationTree& tt, const Gamma& gamma);
SignMap gamma_to_sigma(const TriangulationTree& tt, const OrientedMatroid& m, const Gamma& gamma);
std::vector<Gamma> enumerate_g_colocalizations(const TriangulationTree& tt, const Budget& budget = {});

// Coherence: some labeling of tree nodes whose subtree sums carry gamma.
bool is_coherent(const TriangulationTree& tt, const Gamma& gamma);
// Coherence for an oriented matroid with per-circuit coefficients alpha: by
// default all ones (graphs), or from the linear dependences of a vector
// configuration.
bool is_coherent(const OrientedMatroid& m, const SignMap& sigma);
bool is_coherent(const OrientedMatroid& m, const SignMap& sigma, const VectorConfiguration& v);

struct AllCoherentReport {
  std::size_t colocalizations = 0;
  std::size_t coherent = 0;
  bool all_coherent() const { return colocalizations == coherent; }
};
AllCoherentReport all_coherent_check(const TriangulationTree& tt, const Budget& budget = {});
mpz_class coherent_count(int a, int b);

// Hyperplane normals in coordinates (x_-a, ..., x_b, z).
using Hyperplanes = std::vector<std::vector<int>>;
// One hyperplane per subtree of T_{a,b}, i.e. the secondary arrangement
// after substituting node labels by consecutive differences.
Hyperplanes arrangement_Aab(int a, int b);
// The four families with unshifted index ranges; region counts fall short of coherent_count.
Hyperplanes arrangement_Aab_literal(int a, int b);
// Regions of a central arrangement by Whitney's formula.
mpz_class count_regions(const Hyperplanes& h);

// Labels below are indexed by triangle. Subtree sums of labels; zero sums are filled from `zero_signs`
// (one sign per zero subtree, in subtree order).
Gamma gamma_from_labels(const TriangulationTree& tt, const std::vector<mpq_class>& labels,
                        const std::vector<Sign>& zero_signs);
std::vector<Bits> zero_subtrees(const TriangulationTree& tt, const std::vector<mpq_class>& labels);
// Node labels in tree order: leaves +1, arm middles -2, centre +3.
std::vector<mpq_class> ehat6_labels();
// Leaves +1 and interior values with odd numerators over a power of two
// summing to -2 (needs an even number of interior nodes).
std::vector<mpq_class> dhat_labels(int n);
// First assignment of signs to the zero subtrees (in lexicographic order)
// giving a colocalization that is not coherent.
std::optional<Gamma> noncoherent_perturbation(const TriangulationTree& tt, const std::vector<mpq_class>& labels);

}  // namespace omsep
