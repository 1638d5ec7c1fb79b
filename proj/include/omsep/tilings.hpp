#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omsep/budget.hpp"
#include "omsep/separation.hpp"

namespace omsep {

// All colocalizations in general position, by backtracking over circuit
// signs with Type-III pruning on every corank-2 cycle. Stops after `limit`
// results when limit > 0; throws ResourceLimit past budget caps. Without a
// limit the result is sorted lexicographically.
std::vector<SignMap> enumerate_colocalizations(const OrientedMatroid& m, std::uint64_t limit = 0,
                                               const Budget& budget = {});

std::vector<Collection> max_by_size_collections(const OrientedMatroid& m, std::uint64_t limit = 0,
                                                const Budget& budget = {});

// A tile is the boolean interval {S : X+ in S in X+ u X0}; its span is X0.
using Tile = SignedSet;
inline Bits tile_span(const Tile& t, Bits ground) { return t.zero(ground); }

std::vector<Tile> tiling_of(const OrientedMatroid& m, const Collection& s);

struct TilingReport {
  bool ok = true;
  std::size_t tiles = 0;
  std::size_t top_tiles = 0;
  std::vector<std::string> failures;
  void fail(std::string f) {
    ok = false;
    failures.push_back(std::move(f));
  }
};
TilingReport verify_tiling(const OrientedMatroid& m, const Collection& s);

// Graph distance in the one-step graph on S equals symmetric difference size.
bool graph_distance_check(const Collection& s);

// ---------------------------------------------------------------------------

std::vector<Bits> mutation_neighbors(const OrientedMatroid& m, Bits s);

struct Components {
  std::vector<int> component;  // component id per subset
  std::vector<std::vector<Bits>> members;  // sorted by (size, first member)
};
Components mutation_components(const OrientedMatroid& m);

// Neighbours of sigma in the flip graph, with the flipped circuit index.
std::vector<std::pair<int, SignMap>> flip_neighbors(const OrientedMatroid& m, const SignMap& sigma,
                                                    const std::vector<Corank2Cycle>& cycles);
// S(sigma') equals S(sigma) with the sets orienting W (the flipped circuit,
// taken with its sigma sign) replaced by their W-mutations.
bool mutation_relation_holds(const OrientedMatroid& m, const SignMap& sigma, int w);

struct FlipGraph {
  std::vector<SignMap> vertices;
  std::vector<std::pair<int, int>> edges;
  bool connected = true;
};
FlipGraph flip_graph(const OrientedMatroid& m, const Budget& budget = {});
inline bool is_flip_connected(const OrientedMatroid& m) { return flip_graph(m).connected; }

// ---------------------------------------------------------------------------

// Pairwise M-separation over 2^E by a table on disjoint pairs (A, B):
// bad(A, B) holds when some circuit X has X+ in A and X- in B.
class SeparationTable {
 public:
  explicit SeparationTable(const OrientedMatroid& m);
  bool separated(Bits i, Bits j) const;

 private:
  std::size_t index(Bits a, Bits b) const;
  int n_;
  std::vector<std::uint32_t> tern_lo_, tern_hi_;
  std::vector<char> bad_;
};

struct PurityResult {
  bool pure = true;
  std::size_t independent = 0;  // |Ind(M)|, the maximum size
  std::size_t max_size = 0;  // largest maximal clique seen
  std::size_t min_size = 0;  // smallest maximal clique seen
  std::uint64_t cliques = 0;  // maximal cliques visited
  std::optional<Collection> witness;  // a smaller maximal collection
};

// Maximal-by-inclusion separated collections against |Ind(M)|.
PurityResult purity_check(const OrientedMatroid& m, const Budget& budget = {});
// Maximal separated collections inside a domain all have the same size.
PurityResult domain_purity_check(const OrientedMatroid& m, const std::vector<Bits>& domain,
                                 const Budget& budget = {});
// All maximal separated collections inside a domain.
std::vector<Collection> domain_maximal_collections(const OrientedMatroid& m, const std::vector<Bits>& domain,
                                                   const Budget& budget = {});

struct CertificateRow {
  Bits set = 0;
  Sign orientation = Sign::Zero;  // how the set orients the bad circuit
  std::vector<Bits> blockers;  // members of S0 not separated from the set
};
struct CertificateResult {
  bool valid = false;
  bool collection_separated = false;
  bool is_circuit = false;
  std::vector<CertificateRow> rows;
};
CertificateResult bad_collection_certificate(const OrientedMatroid& m, const SignedSet& c, const Collection& s0);

struct DomainConjectureReport {
  std::size_t collections = 0;
  std::size_t components = 0;
  std::size_t confirmations = 0;
  std::size_t counterexamples = 0;
};
DomainConjectureReport domain_restriction_conjecture_check(const OrientedMatroid& m, const Budget& budget = {});

}  // namespace omsep
