#include "omsep/oriented_matroid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "omsep/errors.hpp"

namespace omsep {

namespace {

std::string describe(const SignedSet& x) { return to_string(x, default_labels(64)); }

// Gathers the bits of x found at the positions of a into consecutive low bits.
Bits squeeze(Bits x, Bits a) {
  Bits out = 0;
  int k = 0;
  for (Bits r = a; r; r &= r - 1, ++k)
    if (x & (r & (~r + 1))) out |= bit(k);
  return out;
}

SignedSet squeeze(const SignedSet& x, Bits a) { return {squeeze(x.plus, a), squeeze(x.minus, a)}; }

std::vector<std::string> squeeze_labels(const std::vector<std::string>& labels, Bits a) {
  std::vector<std::string> out;
  for (int e : elements(a)) out.push_back(labels[e]);
  return out;
}

}  // namespace

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i + 1);
  return out;
}

std::string to_string(const SignedSet& x, const std::vector<std::string>& labels) {
  std::string s;
  auto add = [&](Bits b) {
    bool first = true;
    for (int e : elements(b)) {
      if (!first) s += ',';
      s += e < static_cast<int>(labels.size()) ? labels[e] : std::to_string(e + 1);
      first = false;
    }
  };
  add(x.plus);
  s += '|';
  add(x.minus);
  return s;
}

ValidationReport validate_axioms(const std::vector<SignedSet>& input) {
  ValidationReport rep;
  std::vector<SignedSet> cs;
  {
    std::unordered_set<SignedSet, SignedSetHash> seen;
    for (const auto& x : input)
      if (seen.insert(x).second) cs.push_back(x);
  }
  const std::unordered_set<SignedSet, SignedSetHash> all(cs.begin(), cs.end());

  for (const auto& x : cs) {
    if (x.empty()) {
      rep.c0 = false;
      rep.detail = "empty signed set listed as a circuit";
      return rep;
    }
    if ((x.plus & x.minus) != 0) {
      rep.c0 = false;
      rep.detail = "plus and minus parts overlap in " + describe(x);
      return rep;
    }
  }
  for (const auto& x : cs) {
    if (!all.count(-x)) {
      rep.c1 = false;
      rep.detail = "negation of " + describe(x) + " missing";
      return rep;
    }
  }
  for (const auto& x : cs) {
    for (const auto& y : cs) {
      if (x == y || x == -y) continue;
      if (is_subset(x.support(), y.support())) {
        rep.c2 = false;
        rep.detail = "support of " + describe(x) + " inside support of " + describe(y);
        return rep;
      }
    }
  }
  for (const auto& x : cs) {
    for (const auto& y : cs) {
      if (x == -y) continue;
      Bits common = x.plus & y.minus;
      if (!common) continue;
      const Bits up = x.plus | y.plus;
      const Bits um = x.minus | y.minus;
      for (; common; common &= common - 1) {
        const int e = lowest(common);
        const Bits p = up & ~bit(e);
        const Bits m = um & ~bit(e);
        const bool found = std::any_of(cs.begin(), cs.end(), [&](const SignedSet& z) {
          return is_subset(z.plus, p) && is_subset(z.minus, m);
        });
        if (!found) {
          rep.c3 = false;
          rep.x = x;
          rep.y = y;
          rep.e = e;
          rep.detail = "no elimination of " + std::to_string(e + 1) + " between " + describe(x) + " and " +
                       describe(y);
          return rep;
        }
      }
    }
  }
  return rep;
}

OrientedMatroid::OrientedMatroid(int n, const std::vector<SignedSet>& circuits, bool validate,
                                 std::vector<std::string> labels)
    : n_(n) {
  if (n < 0 || n > kMaxElements) throw ValidationError("ground set size must lie in [0, 63]");
  for (const auto& x : circuits)
    if (!is_subset(x.support(), full_set(n))) throw ValidationError("circuit outside the ground set");
  std::set<SignedSet> canon;
  for (const auto& x : circuits) canon.insert(x.canonical());
  circuits_.assign(canon.begin(), canon.end());
  if (validate) {
    auto rep = validate_axioms(signed_circuits());
    if (!rep.ok()) throw ValidationError("circuit axioms violated: " + rep.detail);
  }
  for (int i = 0; i < static_cast<int>(circuits_.size()); ++i) by_support_.emplace(circuits_[i].support(), i);
  set_labels(labels.empty() ? default_labels(n) : std::move(labels));

  Bits covered = 0;
  for (const auto& x : circuits_) {
    covered |= x.support();
    if (popcount(x.support()) == 1) loops_ |= x.support();
  }
  coloops_ = full_set(n) & ~covered;
  rank_ = rank_of(full_set(n));
}

void OrientedMatroid::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_) throw ValidationError("label count differs from ground set size");
  labels_ = std::move(labels);
}

std::vector<SignedSet> OrientedMatroid::signed_circuits() const {
  std::vector<SignedSet> out;
  out.reserve(2 * circuits_.size());
  for (const auto& x : circuits_) {
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

int OrientedMatroid::circuit_index(Bits support) const {
  auto it = by_support_.find(support);
  return it == by_support_.end() ? -1 : it->second;
}

std::optional<std::pair<int, Sign>> OrientedMatroid::find_circuit(const SignedSet& x) const {
  const int i = circuit_index(x.support());
  if (i < 0) return std::nullopt;
  if (circuits_[i] == x) return std::make_pair(i, Sign::Plus);
  if (circuits_[i] == -x) return std::make_pair(i, Sign::Minus);
  return std::nullopt;
}

bool OrientedMatroid::is_independent(Bits s) const {
  for (const auto& x : circuits_)
    if (is_subset(x.support(), s)) return false;
  return true;
}

int OrientedMatroid::rank_of(Bits a) const {
  Bits indep = 0;
  for (int e : elements(a))
    if (is_independent(indep | bit(e))) indep |= bit(e);
  return popcount(indep);
}

Bits OrientedMatroid::closure(Bits s) const {
  Bits indep = 0;
  for (int e : elements(s))
    if (is_independent(indep | bit(e))) indep |= bit(e);
  Bits cl = s;
  for (int e = 0; e < n_; ++e)
    if (!contains(s, e) && !is_independent(indep | bit(e))) cl |= bit(e);
  return cl;
}

std::vector<Bits> bases(const OrientedMatroid& m) {
  std::vector<Bits> out;
  for_each_k_subset(m.size(), m.rank(), [&](Bits s) {
    if (m.is_independent(s)) out.push_back(s);
  });
  return out;
}

std::vector<Bits> independent_sets(const OrientedMatroid& m) {
  if (m.size() > 25) throw ResourceLimit("independent set enumeration limited to 25 elements");
  std::vector<Bits> out;
  for (Bits s = 0; s <= full_set(m.size()); ++s)
    if (m.is_independent(s)) out.push_back(s);
  return out;
}

std::vector<std::vector<int>> parallel_classes(const OrientedMatroid& m) {
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& x : m.circuits()) {
    if (popcount(x.support()) != 2) continue;
    auto es = elements(x.support());
    parent[find(es[0])] = find(es[1]);
  }
  std::map<int, std::vector<int>> groups;
  for (int e = 0; e < m.size(); ++e)
    if (!contains(m.loops(), e)) groups[find(e)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [root, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple(const OrientedMatroid& m) {
  for (const auto& x : m.circuits())
    if (popcount(x.support()) <= 2) return false;
  return true;
}

OrientedMatroid delete_element(const OrientedMatroid& m, int e) {
  if (contains(m.coloops(), e)) throw CoLoopDeletion(e);
  std::vector<SignedSet> cs;
  for (const auto& x : m.circuits())
    if (!contains(x.support(), e)) cs.push_back(compress(x, e));
  auto labels = m.labels();
  labels.erase(labels.begin() + e);
  return OrientedMatroid(m.size() - 1, cs, false, labels);
}

OrientedMatroid contract_element(const OrientedMatroid& m, int e) {
  if (contains(m.loops(), e)) throw LoopContraction(e);
  std::vector<SignedSet> cand;
  for (const auto& x : m.circuits()) {
    SignedSet y{x.plus & ~bit(e), x.minus & ~bit(e)};
    if (!y.empty()) cand.push_back(y);
  }
  std::vector<SignedSet> cs;
  for (const auto& y : cand) {
    const bool minimal = std::none_of(cand.begin(), cand.end(), [&](const SignedSet& z) {
      return z.support() != y.support() && is_subset(z.support(), y.support());
    });
    if (minimal) cs.push_back(compress(y, e));
  }
  auto labels = m.labels();
  labels.erase(labels.begin() + e);
  return OrientedMatroid(m.size() - 1, cs, false, labels);
}

OrientedMatroid restrict_to(const OrientedMatroid& m, Bits a) {
  std::vector<SignedSet> cs;
  for (const auto& x : m.circuits())
    if (is_subset(x.support(), a)) cs.push_back(squeeze(x, a));
  return OrientedMatroid(popcount(a), cs, false, squeeze_labels(m.labels(), a));
}

OrientedMatroid reorient(const OrientedMatroid& m, Bits a) {
  std::vector<SignedSet> cs;
  for (const auto& x : m.circuits()) cs.push_back(x.reoriented(a));
  return OrientedMatroid(m.size(), cs, false, m.labels());
}

OrientedMatroid relabel(const OrientedMatroid& m, const std::vector<int>& perm) {
  auto map_bits = [&](Bits b) {
    Bits out = 0;
    for (int e : elements(b)) out |= bit(perm[e]);
    return out;
  };
  std::vector<SignedSet> cs;
  for (const auto& x : m.circuits()) cs.push_back({map_bits(x.plus), map_bits(x.minus)});
  std::vector<std::string> labels(m.size());
  for (int i = 0; i < m.size(); ++i) labels[perm[i]] = m.labels()[i];
  return OrientedMatroid(m.size(), cs, false, labels);
}

std::vector<SignedSet> cocircuits(const OrientedMatroid& m) {
  // Cocircuit supports are complements of hyperplanes. Signs follow from
  // orthogonality with fundamental circuits meeting the support twice.
  const int r = m.rank();
  std::vector<SignedSet> out;
  if (r == 0) return out;
  std::set<Bits> seen;
  for_each_k_subset(m.size(), r - 1, [&](Bits ind) {
    if (!m.is_independent(ind)) return;
    const Bits hyper = m.closure(ind);
    const Bits d = m.ground() & ~hyper;
    if (!seen.insert(d).second) return;
    const int e0 = lowest(d);
    SignedSet y{bit(e0), 0};
    const Bits basis = ind | bit(e0);
    for (int f : elements(d & ~bit(e0))) {
      const Bits span = basis | bit(f);
      const SignedSet* fund = nullptr;
      for (const auto& x : m.circuits())
        if (contains(x.support(), f) && is_subset(x.support(), span)) {
          fund = &x;
          break;
        }
      if (!fund || !contains(fund->support(), e0)) throw ValidationError("inconsistent circuits in cocircuit computation");
      const Sign s = -(fund->at(e0) * fund->at(f));
      (s == Sign::Plus ? y.plus : y.minus) |= bit(f);
    }
    for (const auto& x : m.circuits())
      if (!orthogonal(x, y)) throw ValidationError("circuit set admits no orthogonal cocircuit signing");
    out.push_back(y);
  });
  std::sort(out.begin(), out.end());
  return out;
}

OrientedMatroid dual(const OrientedMatroid& m) {
  return OrientedMatroid(m.size(), cocircuits(m), false, m.labels());
}

// ---------------------------------------------------------------------------
// Tutte evaluation by deletion and contraction on circuit supports.

namespace {

struct TutteMemo {
  long x, y;
  std::map<std::vector<Bits>, mpz_class> memo;

  static std::vector<Bits> minimal(std::vector<Bits> sets) {
    std::sort(sets.begin(), sets.end(), [](Bits a, Bits b) {
      return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Bits> out;
    for (Bits s : sets)
      if (std::none_of(out.begin(), out.end(), [&](Bits t) { return is_subset(t, s); })) out.push_back(s);
    return out;
  }

  mpz_class eval(int n, std::vector<Bits> sup) {
    // Strip loops and coloops first; they contribute factors y and x.
    mpz_class factor = 1;
    for (;;) {
      Bits covered = 0;
      int strip = -1;
      bool is_loop = false;
      for (Bits s : sup) {
        covered |= s;
        if (popcount(s) == 1) {
          strip = lowest(s);
          is_loop = true;
        }
      }
      if (strip < 0 && covered != full_set(n)) strip = lowest(full_set(n) & ~covered);
      if (strip < 0) break;
      factor *= is_loop ? y : x;
      std::vector<Bits> next;
      for (Bits s : sup)
        if (!contains(s, strip)) next.push_back(compress(s, strip));
      sup = std::move(next);
      --n;
    }
    if (n == 0) return factor;
    std::sort(sup.begin(), sup.end());
    std::vector<Bits> key = sup;
    key.push_back(static_cast<Bits>(n));
    if (auto it = memo.find(key); it != memo.end()) return factor * it->second;

    const int e = n - 1;
    std::vector<Bits> del, con;
    for (Bits s : sup) {
      if (!contains(s, e)) del.push_back(s);
      con.push_back(s & ~bit(e));
    }
    const mpz_class val = eval(n - 1, del) + eval(n - 1, minimal(con));
    memo.emplace(std::move(key), val);
    return factor * val;
  }
};

}  // namespace

mpz_class tutte_eval(const OrientedMatroid& m, long x, long y) {
  TutteMemo t{x, y, {}};
  std::vector<Bits> sup;
  for (const auto& c : m.circuits()) sup.push_back(c.support());
  return t.eval(m.size(), sup);
}

// ---------------------------------------------------------------------------
// Isomorphism.

namespace {

struct Fingerprint {
  bool loop = false, coloop = false;
  int parallel = 0;
  std::vector<int> sizes;  // histogram of support sizes of circuits through e
  auto operator<=>(const Fingerprint&) const = default;
};

std::vector<Fingerprint> fingerprints(const OrientedMatroid& m) {
  std::vector<Fingerprint> fp(m.size());
  for (int e = 0; e < m.size(); ++e) {
    fp[e].loop = contains(m.loops(), e);
    fp[e].coloop = contains(m.coloops(), e);
    fp[e].sizes.assign(m.size() + 1, 0);
  }
  for (const auto& c : m.circuits()) {
    const int k = popcount(c.support());
    for (int e : elements(c.support())) ++fp[e].sizes[k];
  }
  for (const auto& cls : parallel_classes(m))
    for (int e : cls) fp[e].parallel = static_cast<int>(cls.size());
  return fp;
}

// Parity union-find deciding whether some reorientation maps the relabeled
// circuits of one matroid onto the circuits of the other.
std::optional<Bits> solve_reorientation(const std::vector<SignedSet>& mapped, const OrientedMatroid& b) {
  const int n = b.size();
  std::vector<int> parent(n), parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::pair<int, int>(int)> find = [&](int a) -> std::pair<int, int> {
    if (parent[a] == a) return {a, 0};
    auto [r, p] = find(parent[a]);
    parent[a] = r;
    parity[a] ^= p;
    return {r, parity[a]};
  };
  auto unite = [&](int u, int v, int want) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) return (pu ^ pv) == want;
    parent[ru] = rv;
    parity[ru] = pu ^ pv ^ want;
    return true;
  };
  for (const auto& x : mapped) {
    const int idx = b.circuit_index(x.support());
    const SignedSet& y = b.circuits()[idx];
    const Bits diff = (x.plus & y.minus) | (x.minus & y.plus);
    auto es = elements(x.support());
    for (std::size_t i = 1; i < es.size(); ++i) {
      const int want = contains(diff, es[0]) ^ contains(diff, es[i]);
      if (!unite(es[0], es[i], want)) return std::nullopt;
    }
  }
  Bits a = 0;
  for (int e = 0; e < n; ++e)
    if (find(e).second) a |= bit(e);
  return a;
}

}  // namespace

std::optional<IsoWitness> find_isomorphism(const OrientedMatroid& a, const OrientedMatroid& b) {
  const int n = a.size();
  if (n != b.size() || a.num_circuits() != b.num_circuits() || a.rank() != b.rank()) return std::nullopt;
  const auto fa = fingerprints(a), fb = fingerprints(b);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Circuits of a grouped by their largest element, checked once that
  // element is mapped.
  std::vector<std::vector<Bits>> by_top(n);
  for (const auto& c : a.circuits()) by_top[highest(c.support())].push_back(c.support());

  std::vector<int> phi(n, -1);
  Bits used = 0;
  std::optional<IsoWitness> result;
  std::function<void(int)> go = [&](int i) {
    if (result) return;
    if (i == n) {
      std::vector<SignedSet> mapped;
      for (const auto& c : a.circuits()) {
        SignedSet y;
        for (int e : elements(c.plus)) y.plus |= bit(phi[e]);
        for (int e : elements(c.minus)) y.minus |= bit(phi[e]);
        mapped.push_back(y);
      }
      if (auto r = solve_reorientation(mapped, b)) result = IsoWitness{phi, *r};
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (contains(used, j) || fa[i] != fb[j]) continue;
      phi[i] = j;
      bool ok = true;
      for (Bits s : by_top[i]) {
        Bits img = 0;
        for (int e : elements(s)) img |= bit(phi[e]);
        if (b.circuit_index(img) < 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used |= bit(j);
        go(i + 1);
        used &= ~bit(j);
      }
      phi[i] = -1;
      if (result) return;
    }
  };
  go(0);
  return result;
}

bool weak_map_leq(const OrientedMatroid& m1, const OrientedMatroid& m2) {
  const auto c2 = m2.signed_circuits();
  for (const auto& x : m1.signed_circuits()) {
    const bool dominated = std::any_of(c2.begin(), c2.end(), [&](const SignedSet& y) { return leq(y, x); });
    if (!dominated) return false;
  }
  return true;
}

}  // namespace omsep
