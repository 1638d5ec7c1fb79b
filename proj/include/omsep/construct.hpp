#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "omsep/oriented_matroid.hpp"

namespace omsep {

OrientedMatroid free_matroid(int n);

// Circuits (I_odd, I_even) over all (d+1)-subsets I of [n].
OrientedMatroid alternating(int n, int d);

// ---------------------------------------------------------------------------
// Vector configurations over the rationals.

struct VectorConfiguration {
  int dimension = 0;
  std::vector<std::vector<mpq_class>> columns;
  std::vector<std::string> labels;  // empty means 1..n

  int size() const { return static_cast<int>(columns.size()); }
};

mpq_class parse_rational(const std::string& s);
std::string format_rational(const mpq_class& q);

int rank_of_columns(const VectorConfiguration& v, Bits s);
// Coefficients c (indexed by element, zero off the support) of the unique
// linear dependence on a circuit support, scaled so the smallest support
// element has a positive coefficient.
std::vector<mpq_class> dependence(const VectorConfiguration& v, Bits support);

OrientedMatroid from_vectors(const VectorConfiguration& v);

// Planar points lifted to (x, y, 1); labels 1..n.
VectorConfiguration affine_points(const std::vector<std::pair<mpq_class, mpq_class>>& points);
// Regular pentagon rounded to three decimals, plus its centre last.
VectorConfiguration pentagon_with_centre();
// Triangle 1, 2, 4 with midpoints 3 of 24 and 5 of 14, and centroid 6.
VectorConfiguration triangle_with_centroid();
// Points 1..6 at (0,0), (4,0), (4,2), (0,4), (0,2), (2,2).
VectorConfiguration three_lines_configuration();

// ---------------------------------------------------------------------------
// Directed graphs.

struct DirectedGraph {
  struct Edge {
    int tail = 0, head = 0;
    std::string label;
  };
  int vertices = 0;
  std::vector<Edge> edges;

  std::vector<std::string> labels() const;
};

struct GraphCycle {
  Bits edges = 0;
  std::vector<int> vertex_walk;  // closed walk start, ..., start excluded
  SignedSet signs;  // + where the walk follows the edge direction
};

// Every simple cycle (including self-loops and parallel pairs) once.
std::vector<GraphCycle> simple_cycles(const DirectedGraph& g, std::size_t guard = 1000000);

OrientedMatroid from_digraph(const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Chirotopes.

class Chirotope {
 public:
  Chirotope() = default;
  Chirotope(int n, int r);

  int size() const { return n_; }
  int rank() const { return r_; }
  // r-subsets in lexicographic order.
  const std::vector<Bits>& tuples() const { return tuples_; }
  Sign at(Bits subset) const;
  void set(Bits subset, Sign s);
  // Value on an ordered tuple, using alternation.
  Sign eval(const std::vector<int>& tuple) const;
  const std::vector<Sign>& values() const { return values_; }
  bool operator==(const Chirotope& o) const = default;

 private:
  int n_ = 0, r_ = 0;
  std::vector<Bits> tuples_;
  std::vector<Sign> values_;
  std::unordered_map<Bits, int> index_;
};

Chirotope chirotope_from_vectors(const VectorConfiguration& v);
OrientedMatroid circuits_from_chirotope(const Chirotope& chi, bool validate = true);
// Chirotope of an oriented matroid, fixed up to global sign by making the
// lexicographically first basis positive.
Chirotope chirotope_from_matroid(const OrientedMatroid& m);

struct PositiveWitness {
  std::vector<int> order;  // order[k] = element placed k-th
  Bits reorientation = 0;
};
std::optional<PositiveWitness> positive_orientation(const OrientedMatroid& m);
inline bool is_positively_orientable(const OrientedMatroid& m) { return positive_orientation(m).has_value(); }

// Rank-3 geometric test: after scaling to the affine chart of the last
// coordinate, all points lie on the boundary of their convex hull.
bool on_convex_boundary(const VectorConfiguration& v);

// Simple rank-3 oriented matroids on n elements up to isomorphism.
struct CensusStats {
  std::size_t chirotopes = 0;  // normalized chirotopes generated and validated
  std::size_t classes = 0;
};
std::vector<OrientedMatroid> census_rank3_simple(int n, CensusStats* stats = nullptr);

// Dual of the acyclic rank-2 configuration whose parallel classes have the
// given sizes, listed in affine order.
OrientedMatroid corank2_family(const std::vector<int>& composition);

}  // namespace omsep
