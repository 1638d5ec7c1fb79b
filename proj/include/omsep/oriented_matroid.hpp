#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "omsep/bits.hpp"
#include "omsep/signed_set.hpp"

namespace omsep {

struct ValidationReport {
  bool c0 = true;  // the empty set is not a circuit
  bool c1 = true;  // closed under negation
  bool c2 = true;  // comparable supports only for X = +-Y
  bool c3 = true;  // weak elimination
  std::string detail;
  // Witness for a failed elimination: X, Y and the element e in X+ and Y-.
  std::optional<SignedSet> x, y;
  int e = -1;

  bool ok() const { return c0 && c1 && c2 && c3; }
};

// Checks the circuit axioms literally on the given list of signed sets.
ValidationReport validate_axioms(const std::vector<SignedSet>& circuits);

std::vector<std::string> default_labels(int n);

class OrientedMatroid {
 public:
  OrientedMatroid() = default;

  // Accepts circuits with either sign; closes under negation and keeps one
  // canonical representative per pair. Throws ValidationError when
  // `validate` is set and an axiom fails.
  OrientedMatroid(int n, const std::vector<SignedSet>& circuits, bool validate = true,
                  std::vector<std::string> labels = {});

  int size() const { return n_; }
  Bits ground() const { return full_set(n_); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Canonical representatives, sorted by (support, plus).
  const std::vector<SignedSet>& circuits() const { return circuits_; }
  // Every circuit with both signs.
  std::vector<SignedSet> signed_circuits() const;
  int num_circuits() const { return static_cast<int>(circuits_.size()); }

  // Index of the canonical circuit with this support, or -1.
  int circuit_index(Bits support) const;
  // Index and orientation relative to the canonical representative.
  std::optional<std::pair<int, Sign>> find_circuit(const SignedSet& x) const;
  bool is_circuit(const SignedSet& x) const { return find_circuit(x).has_value(); }

  int rank() const { return rank_; }
  int corank() const { return n_ - rank_; }
  int rank_of(Bits a) const;
  bool is_independent(Bits s) const;
  Bits closure(Bits s) const;

  Bits loops() const { return loops_; }
  Bits coloops() const { return coloops_; }

  bool operator==(const OrientedMatroid& o) const { return n_ == o.n_ && circuits_ == o.circuits_; }

 private:
  int n_ = 0;
  std::vector<SignedSet> circuits_;
  std::vector<std::string> labels_;
  std::unordered_map<Bits, int> by_support_;
  int rank_ = 0;
  Bits loops_ = 0;
  Bits coloops_ = 0;
};

std::vector<Bits> bases(const OrientedMatroid& m);
std::vector<Bits> independent_sets(const OrientedMatroid& m);

std::vector<std::vector<int>> parallel_classes(const OrientedMatroid& m);
bool is_simple(const OrientedMatroid& m);

// Minors and relabelings. Deletion and contraction drop the element and
// shift higher indices down by one.
OrientedMatroid delete_element(const OrientedMatroid& m, int e);
OrientedMatroid contract_element(const OrientedMatroid& m, int e);
// Restriction to A, reindexed in increasing order of A. Coloops are allowed.
OrientedMatroid restrict_to(const OrientedMatroid& m, Bits a);
OrientedMatroid reorient(const OrientedMatroid& m, Bits a);
// Element i of m becomes element perm[i].
OrientedMatroid relabel(const OrientedMatroid& m, const std::vector<int>& perm);

std::vector<SignedSet> cocircuits(const OrientedMatroid& m);
OrientedMatroid dual(const OrientedMatroid& m);

// Integer evaluation of the Tutte polynomial of the underlying matroid.
mpz_class tutte_eval(const OrientedMatroid& m, long x, long y);

struct IsoWitness {
  std::vector<int> phi;  // element i of the first matroid maps to phi[i]
  Bits reorientation = 0;  // applied after phi, in the second matroid's indices
};
std::optional<IsoWitness> find_isomorphism(const OrientedMatroid& a, const OrientedMatroid& b);
inline bool is_isomorphic(const OrientedMatroid& a, const OrientedMatroid& b) {
  return find_isomorphism(a, b).has_value();
}

// Every circuit of m1 dominates some circuit of m2.
bool weak_map_leq(const OrientedMatroid& m1, const OrientedMatroid& m2);

std::string to_string(const SignedSet& x, const std::vector<std::string>& labels);

}  // namespace omsep
