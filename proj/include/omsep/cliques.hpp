#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "omsep/budget.hpp"

namespace omsep {

// Dense undirected graph with bitset adjacency rows.
class BitGraph {
 public:
  explicit BitGraph(int n);

  int size() const { return n_; }
  int words() const { return w_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1U; }
  const std::uint64_t* row(int u) const { return adj_.data() + static_cast<std::size_t>(u) * w_; }

 private:
  int n_, w_;
  std::vector<std::uint64_t> adj_;
};

// Enumerates maximal cliques of the subgraph induced on `vertices` with
// pivoting and a degeneracy order at the top level. The callback returns
// false to stop early. Throws ResourceLimit past budget.max_cliques.
// Returns the number of cliques reported.
std::uint64_t maximal_cliques(const BitGraph& g, const std::vector<int>& vertices,
                              const std::function<bool(const std::vector<int>&)>& visit, const Budget& budget);

}  // namespace omsep
