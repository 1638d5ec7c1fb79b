#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "omsep/oriented_matroid.hpp"

namespace omsep {

// A collection of subsets of the ground set, sorted and deduplicated.
using Collection = std::vector<Bits>;
Collection make_collection(std::vector<Bits> sets);

// One sign per canonical circuit representative; -X carries the negation.
using SignMap = std::vector<Sign>;

Sign sign_at(const OrientedMatroid& m, const SignMap& sigma, const SignedSet& x);

// S orients X positively when X+ is inside S and X- avoids S.
inline bool orients_positively(Bits s, const SignedSet& x) {
  return is_subset(x.plus, s) && (x.minus & s) == 0;
}

// A circuit X with X+ in I-J and X- in J-I, or nothing if I and J are
// separated.
std::optional<SignedSet> separation_witness(const OrientedMatroid& m, Bits i, Bits j);
inline bool is_pair_separated(const OrientedMatroid& m, Bits i, Bits j) {
  return !separation_witness(m, i, j).has_value();
}

struct SigmaResult {
  bool separated = true;
  SignMap sigma;
  std::optional<std::pair<Bits, Bits>> clash;  // two sets orienting a circuit oppositely
};
SigmaResult sigma_of(const OrientedMatroid& m, const Collection& s);
bool is_collection_separated(const OrientedMatroid& m, const Collection& s);
bool is_complete(const OrientedMatroid& m, const Collection& s);

// Deletion and contraction of a collection at e; the result lives on the
// ground set with e removed and higher indices shifted down.
Collection collection_delete(const Collection& s, int e);
Collection collection_contract(const Collection& s, int e);

// ---------------------------------------------------------------------------
// Corank-2 restrictions.

struct Corank2Cycle {
  Bits subset = 0;  // the restriction A
  Bits core = 0;  // A without the coloops of M|A
  std::vector<Bits> classes;  // series classes in affine order
  Bits reorientation = 0;  // makes the k-th circuit ([P1..P(k-1)], [P(k+1)..Pm])
  // First half of the cyclic order: circuit index and orientation relative to
  // the canonical representative. The second half is the negation.
  std::vector<std::pair<int, Sign>> half;

  int m() const { return static_cast<int>(half.size()); }
};

// Throws NotCorank2 unless corank(M|A) = 2.
Corank2Cycle corank2_cycle(const OrientedMatroid& m, Bits a);
// The 2m signed circuits in cyclic order.
std::vector<SignedSet> corank2_circuit_cycle(const OrientedMatroid& m, Bits a);
// One cycle per distinct circuit set among all corank-2 restrictions.
std::vector<Corank2Cycle> all_corank2_cycles(const OrientedMatroid& m);

enum class LVType { I, II, III, None };
const char* to_string(LVType t);
// Classifies a cyclic sign sequence of even length 2m antisymmetric under
// a shift by m.
LVType classify_sequence(const std::vector<Sign>& seq);
LVType classify_type(const OrientedMatroid& m, const Corank2Cycle& c, const SignMap& sigma);
LVType classify_type(const OrientedMatroid& m, Bits a, const SignMap& sigma);

struct ColocalizationCheck {
  bool ok = true;
  std::optional<Bits> failing_subset;
};
ColocalizationCheck check_colocalization_gp(const OrientedMatroid& m, const SignMap& sigma,
                                            const std::vector<Corank2Cycle>& cycles);
bool is_colocalization_gp(const OrientedMatroid& m, const SignMap& sigma);

// One-element lifting on E plus a new last element g.
OrientedMatroid lifting_circuits(const OrientedMatroid& m, const SignMap& sigma);

// All S such that every circuit S orients agrees with sigma.
Collection collection_of(const OrientedMatroid& m, const SignMap& sigma);

// The epsilon sequence of a collection on a corank-2 restriction: + when S
// meets the core in P1..P(k-1), - when in Pk..Pm (after the cycle's
// reorientation), 0 otherwise.
std::vector<Sign> epsilon_profile(const Corank2Cycle& c, const Collection& s);
// No adjacent opposite nonzero signs, and eps_1 = eps_m only when both vanish.
bool epsilon_condition(const std::vector<Sign>& eps);

// Padding into n-subsets of [2n].
Bits pad(Bits i, int n);
Collection pad_collection(const Collection& s, int n);

}  // namespace omsep
