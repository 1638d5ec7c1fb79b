#include "omsep/separation.hpp"

#include <algorithm>
#include <set>

#include "omsep/errors.hpp"

namespace omsep {

Collection make_collection(std::vector<Bits> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

Sign sign_at(const OrientedMatroid& m, const SignMap& sigma, const SignedSet& x) {
  auto f = m.find_circuit(x);
  if (!f) throw Error("signed set is not a circuit");
  return sigma.at(f->first) * f->second;
}

std::optional<SignedSet> separation_witness(const OrientedMatroid& m, Bits i, Bits j) {
  const Bits ij = i & ~j, ji = j & ~i;
  for (const auto& x : m.circuits()) {
    if (is_subset(x.plus, ij) && is_subset(x.minus, ji)) return x;
    if (is_subset(x.minus, ij) && is_subset(x.plus, ji)) return -x;
  }
  return std::nullopt;
}

SigmaResult sigma_of(const OrientedMatroid& m, const Collection& s) {
  SigmaResult r;
  r.sigma.assign(m.num_circuits(), Sign::Zero);
  for (int c = 0; c < m.num_circuits(); ++c) {
    const SignedSet& x = m.circuits()[c];
    std::optional<Bits> pos, neg;
    for (Bits t : s) {
      if (!pos && orients_positively(t, x)) pos = t;
      if (!neg && orients_positively(t, -x)) neg = t;
      if (pos && neg) break;
    }
    if (pos && neg) {
      r.separated = false;
      if (!r.clash) r.clash = std::make_pair(*pos, *neg);
    }
    r.sigma[c] = pos ? Sign::Plus : neg ? Sign::Minus : Sign::Zero;
  }
  return r;
}

bool is_collection_separated(const OrientedMatroid& m, const Collection& s) { return sigma_of(m, s).separated; }

bool is_complete(const OrientedMatroid& m, const Collection& s) {
  const auto r = sigma_of(m, s);
  return r.separated && std::none_of(r.sigma.begin(), r.sigma.end(), [](Sign v) { return v == Sign::Zero; });
}

Collection collection_delete(const Collection& s, int e) {
  std::vector<Bits> out;
  for (Bits t : s) out.push_back(compress(t & ~bit(e), e));
  return make_collection(out);
}

Collection collection_contract(const Collection& s, int e) {
  const std::set<Bits> all(s.begin(), s.end());
  std::vector<Bits> out;
  for (Bits t : s)
    if (!contains(t, e) && all.count(t | bit(e))) out.push_back(compress(t, e));
  return make_collection(out);
}

// ---------------------------------------------------------------------------

Corank2Cycle corank2_cycle(const OrientedMatroid& m, Bits a) {
  if (popcount(a) - m.rank_of(a) != 2) throw NotCorank2();
  Corank2Cycle c;
  c.subset = a;
  std::vector<int> idx;
  for (int i = 0; i < m.num_circuits(); ++i)
    if (is_subset(m.circuits()[i].support(), a)) {
      idx.push_back(i);
      c.core |= m.circuits()[i].support();
    }
  const int k = static_cast<int>(idx.size());
  // Vertices 2t and 2t+1 are the circuit idx[t] and its negation; adjacent
  // vertices of the cycle are exactly the conformal pairs.
  std::vector<SignedSet> v;
  for (int i : idx) {
    v.push_back(m.circuits()[i]);
    v.push_back(-m.circuits()[i]);
  }
  std::vector<std::vector<int>> nb(2 * k);
  for (int p = 0; p < 2 * k; ++p)
    for (int q = 0; q < 2 * k; ++q)
      if (p != q && (p ^ 1) != q && conformal(v[p], v[q])) nb[p].push_back(q);
  for (const auto& l : nb)
    if (l.size() != 2) throw Error("corank-2 restriction without a cyclic circuit order");
  std::vector<int> order{0};
  int prev = 0;
  int cur = v[nb[0][0]] < v[nb[0][1]] ? nb[0][0] : nb[0][1];
  while (cur != 0) {
    order.push_back(cur);
    const int next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != 2 * k) throw Error("circuit cycle does not close");
  for (int t = 0; t < k; ++t)
    if ((order[t] ^ 1) != order[t + k]) throw Error("circuit cycle is not antipodal");
  for (int t = 0; t < k; ++t) {
    const int p = order[t];
    c.half.push_back({idx[p / 2], p % 2 == 0 ? Sign::Plus : Sign::Minus});
    c.classes.push_back(c.core & ~v[p].support());
  }
  // Reorient so the first circuit is (empty, everything but P1) and the
  // second carries P1 positively; then check the model form throughout.
  const SignedSet x1 = v[order[0]];
  const SignedSet x2 = v[order[1 % (2 * k)]];
  c.reorientation = x1.plus | (x2.minus & c.classes[0]);
  for (int t = 0; t < k; ++t) {
    Bits before = 0, after = 0;
    for (int u = 0; u < t; ++u) before |= c.classes[u];
    for (int u = t + 1; u < k; ++u) after |= c.classes[u];
    if (v[order[t]].reoriented(c.reorientation) != SignedSet{before, after})
      throw Error("corank-2 circuits do not match the alternating model");
  }
  return c;
}

std::vector<SignedSet> corank2_circuit_cycle(const OrientedMatroid& m, Bits a) {
  const auto c = corank2_cycle(m, a);
  std::vector<SignedSet> out;
  for (auto [i, s] : c.half) out.push_back(s == Sign::Plus ? m.circuits()[i] : -m.circuits()[i]);
  for (int t = 0; t < c.m(); ++t) out.push_back(-out[t]);
  return out;
}

std::vector<Corank2Cycle> all_corank2_cycles(const OrientedMatroid& m) {
  if (m.size() > 20) throw ResourceLimit("corank-2 enumeration limited to 20 elements");
  std::vector<Corank2Cycle> out;
  std::set<Bits> cores;
  for (Bits a = 0; a <= m.ground(); ++a) {
    if (popcount(a) < 2 || popcount(a) - m.rank_of(a) != 2) continue;
    Bits core = 0;
    for (const auto& x : m.circuits())
      if (is_subset(x.support(), a)) core |= x.support();
    if (!cores.insert(core).second) continue;
    out.push_back(corank2_cycle(m, a));
  }
  return out;
}

const char* to_string(LVType t) {
  switch (t) {
    case LVType::I:
      return "I";
    case LVType::II:
      return "II";
    case LVType::III:
      return "III";
    default:
      return "none";
  }
}

LVType classify_sequence(const std::vector<Sign>& seq) {
  const int len = static_cast<int>(seq.size());
  const int m = len / 2;
  if (std::all_of(seq.begin(), seq.end(), [](Sign s) { return s == Sign::Zero; })) return LVType::I;
  std::vector<int> zeros;
  for (int i = 0; i < len; ++i)
    if (seq[i] == Sign::Zero) zeros.push_back(i);
  if (zeros.empty()) {
    int changes = 0;
    for (int i = 0; i < len; ++i)
      if (seq[i] != seq[(i + 1) % len]) ++changes;
    return changes == 2 ? LVType::III : LVType::None;
  }
  if (zeros.size() == 2 && zeros[1] == zeros[0] + m) {
    bool same = true;
    for (int i = zeros[0] + 1; i < zeros[1]; ++i) same &= seq[i] == seq[zeros[0] + 1];
    if (same) return LVType::II;
  }
  return LVType::None;
}

LVType classify_type(const OrientedMatroid& m, const Corank2Cycle& c, const SignMap& sigma) {
  std::vector<Sign> seq;
  for (auto [i, s] : c.half) seq.push_back(sigma.at(i) * s);
  for (int t = 0; t < c.m(); ++t) seq.push_back(-seq[t]);
  (void)m;
  return classify_sequence(seq);
}

LVType classify_type(const OrientedMatroid& m, Bits a, const SignMap& sigma) {
  return classify_type(m, corank2_cycle(m, a), sigma);
}

ColocalizationCheck check_colocalization_gp(const OrientedMatroid& m, const SignMap& sigma,
                                            const std::vector<Corank2Cycle>& cycles) {
  ColocalizationCheck r;
  if (std::any_of(sigma.begin(), sigma.end(), [](Sign s) { return s == Sign::Zero; })) {
    r.ok = false;
    return r;
  }
  for (const auto& c : cycles)
    if (classify_type(m, c, sigma) != LVType::III) {
      r.ok = false;
      r.failing_subset = c.subset;
      return r;
    }
  return r;
}

bool is_colocalization_gp(const OrientedMatroid& m, const SignMap& sigma) {
  return check_colocalization_gp(m, sigma, all_corank2_cycles(m)).ok;
}

OrientedMatroid lifting_circuits(const OrientedMatroid& m, const SignMap& sigma) {
  const int n = m.size();
  if (n >= kMaxElements) throw ValidationError("no room for the lifting element");
  const Bits g = bit(n);
  std::vector<SignedSet> cs;
  for (int i = 0; i < m.num_circuits(); ++i) {
    SignedSet y = m.circuits()[i];
    if (sigma[i] == Sign::Plus) y.plus |= g;
    if (sigma[i] == Sign::Minus) y.minus |= g;
    cs.push_back(y);
  }
  const auto all = m.signed_circuits();
  for (const auto& y1 : all)
    for (const auto& y2 : all) {
      const Sign s1 = sign_at(m, sigma, y1), s2 = sign_at(m, sigma, y2);
      if (s1 == Sign::Zero || s1 != -s2) continue;
      if (!conformal(y1, y2)) continue;
      const Bits u = y1.support() | y2.support();
      if (u == y1.support() || u == y2.support()) continue;
      if (popcount(u) - m.rank_of(u) != 2) continue;
      cs.push_back(compose(y1, y2));
    }
  auto labels = m.labels();
  labels.push_back("g");
  return OrientedMatroid(n + 1, cs, false, labels);
}

Collection collection_of(const OrientedMatroid& m, const SignMap& sigma) {
  if (m.size() > 20) throw ResourceLimit("collection scan limited to 20 elements");
  std::vector<SignedSet> pos;  // circuits oriented as sigma prescribes
  std::vector<SignedSet> zero;
  for (int i = 0; i < m.num_circuits(); ++i) {
    if (sigma[i] == Sign::Zero)
      zero.push_back(m.circuits()[i]);
    else
      pos.push_back(sigma[i] == Sign::Plus ? m.circuits()[i] : -m.circuits()[i]);
  }
  Collection out;
  for (Bits s = 0; s <= m.ground(); ++s) {
    bool ok = true;
    for (const auto& x : pos)
      if (orients_positively(s, -x)) {
        ok = false;
        break;
      }
    for (const auto& x : zero) {
      if (!ok) break;
      if (orients_positively(s, x) || orients_positively(s, -x)) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<Sign> epsilon_profile(const Corank2Cycle& c, const Collection& s) {
  std::vector<Bits> restricted;
  for (Bits t : s) restricted.push_back((t ^ c.reorientation) & c.core);
  std::sort(restricted.begin(), restricted.end());
  auto has = [&](Bits b) { return std::binary_search(restricted.begin(), restricted.end(), b); };
  std::vector<Sign> eps;
  for (int k = 0; k < c.m(); ++k) {
    Bits before = 0;
    for (int u = 0; u < k; ++u) before |= c.classes[u];
    const Bits rest = c.core & ~before;
    const bool p = has(before), q = has(rest);
    if (p && q) throw Error("collection is not separated on the restriction");
    eps.push_back(p ? Sign::Plus : q ? Sign::Minus : Sign::Zero);
  }
  return eps;
}

bool epsilon_condition(const std::vector<Sign>& eps) {
  const int m = static_cast<int>(eps.size());
  for (int k = 0; k + 1 < m; ++k)
    if (eps[k] == -eps[k + 1] && eps[k] != Sign::Zero) return false;
  if (m >= 1 && eps[0] == eps[m - 1] && eps[0] != Sign::Zero && m > 1) return false;
  return true;
}

Bits pad(Bits i, int n) {
  Bits out = i;
  for (int e = n + popcount(i); e < 2 * n; ++e) out |= bit(e);
  return out;
}

Collection pad_collection(const Collection& s, int n) {
  std::vector<Bits> out;
  for (Bits t : s) out.push_back(pad(t, n));
  return make_collection(out);
}

}  // namespace omsep
