#include "omsep/tilings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "omsep/cliques.hpp"
#include "omsep/errors.hpp"

namespace omsep {

namespace {

bool in(const Collection& s, Bits t) { return std::binary_search(s.begin(), s.end(), t); }

std::string set_string(Bits s) {
  std::string out = "{";
  for (int e : elements(s)) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

struct Enumerator {
  const OrientedMatroid& m;
  const Budget& budget;
  std::uint64_t limit;
  std::vector<Corank2Cycle> cycles;
  // Per circuit: (cycle, position) pairs it occupies.
  std::vector<std::vector<std::pair<int, int>>> where;
  std::vector<int> order;
  SignMap sigma;
  std::vector<SignMap> out;
  std::uint64_t nodes = 0;

  Enumerator(const OrientedMatroid& mm, std::uint64_t lim, const Budget& b)
      : m(mm), budget(b), limit(lim), cycles(all_corank2_cycles(mm)) {
    const int k = m.num_circuits();
    where.resize(k);
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c)
      for (int p = 0; p < cycles[c].m(); ++p) where[cycles[c].half[p].first].push_back({c, p});
    // Greedy static order: next circuit shares the most cycles with the
    // circuits already placed; ties go to the smaller index.
    std::vector<int> touched(cycles.size(), 0);
    std::vector<char> placed(k, 0);
    for (int step = 0; step < k; ++step) {
      int best = -1, score = -1;
      for (int c = 0; c < k; ++c) {
        if (placed[c]) continue;
        int sc = 0;
        for (auto [cy, p] : where[c]) sc += touched[cy] > 0;
        if (sc > score) {
          score = sc;
          best = c;
        }
      }
      placed[best] = 1;
      order.push_back(best);
      for (auto [cy, p] : where[best]) ++touched[cy];
    }
    sigma.assign(k, Sign::Zero);
  }

  // The assigned part of a cycle's first half changes sign at most once,
  // which is exactly completability to Type III.
  bool consistent(int cy) const {
    Sign last = Sign::Zero;
    int changes = 0;
    for (auto [i, s] : cycles[cy].half) {
      const Sign v = sigma[i] * s;
      if (v == Sign::Zero) continue;
      if (last != Sign::Zero && v != last && ++changes > 1) return false;
      last = v;
    }
    return true;
  }

  bool run(int depth) {
    if ((++nodes & 4095) == 0) budget.check_time();
    if (depth == static_cast<int>(order.size())) {
      out.push_back(sigma);
      if (out.size() > budget.max_colocalizations) throw ResourceLimit("colocalization cap reached");
      return limit == 0 || out.size() < limit;
    }
    const int c = order[depth];
    for (Sign v : {Sign::Plus, Sign::Minus}) {
      sigma[c] = v;
      bool ok = true;
      for (auto [cy, p] : where[c])
        if (!consistent(cy)) {
          ok = false;
          break;
        }
      if (ok && !run(depth + 1)) {
        sigma[c] = Sign::Zero;
        return false;
      }
    }
    sigma[c] = Sign::Zero;
    return true;
  }
};

bool sign_less(const SignMap& a, const SignMap& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Sign x, Sign y) { return static_cast<int>(x) > static_cast<int>(y); });
}

}  // namespace

std::vector<SignMap> enumerate_colocalizations(const OrientedMatroid& m, std::uint64_t limit, const Budget& budget) {
  Enumerator e(m, limit, budget);
  e.run(0);
  if (limit == 0) std::sort(e.out.begin(), e.out.end(), sign_less);
  return std::move(e.out);
}

std::vector<Collection> max_by_size_collections(const OrientedMatroid& m, std::uint64_t limit, const Budget& budget) {
  std::vector<Collection> out;
  for (const auto& s : enumerate_colocalizations(m, limit, budget)) out.push_back(collection_of(m, s));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Tile> tiling_of(const OrientedMatroid& m, const Collection& s) {
  const Bits ground = m.ground();
  std::vector<Tile> out;
  for (Bits bottom : s) {
    std::vector<int> cand;
    for (int e : elements(ground & ~bottom))
      if (in(s, bottom | bit(e))) cand.push_back(e);
    // Grow spans in increasing element order; adding e needs every
    // bottom + J + e with J inside the current span.
    std::vector<Bits> stack{0};
    std::vector<int> next_from{0};
    while (!stack.empty()) {
      const Bits span = stack.back();
      const int from = next_from.back();
      stack.pop_back();
      next_from.pop_back();
      out.push_back({bottom, ground & ~bottom & ~span});
      for (int k = from; k < static_cast<int>(cand.size()); ++k) {
        const int e = cand[k];
        bool ok = true;
        for (Bits j = span;; j = (j - 1) & span) {
          if (!in(s, bottom | j | bit(e))) {
            ok = false;
            break;
          }
          if (j == 0) break;
        }
        if (ok) {
          stack.push_back(span | bit(e));
          next_from.push_back(k + 1);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Tile> sorted_unique(std::vector<Tile> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TilingReport verify_tiling(const OrientedMatroid& m, const Collection& s) {
  TilingReport r;
  const Bits ground = m.ground();
  const int rank = m.rank();
  const auto tiles = tiling_of(m, s);
  r.tiles = tiles.size();

  // (1) spans are independent.
  std::map<Bits, int> by_span;
  for (const auto& t : tiles) {
    const Bits sp = tile_span(t, ground);
    if (!m.is_independent(sp)) r.fail("tile span " + set_string(sp) + " is dependent");
    ++by_span[sp];
  }
  // (2) every independent set is a span; (3) bases are spans exactly once.
  for (Bits i : independent_sets(m)) {
    const auto it = by_span.find(i);
    const int cnt = it == by_span.end() ? 0 : it->second;
    if (cnt == 0) r.fail("no tile with span " + set_string(i));
    if (popcount(i) == rank && cnt != 1) r.fail("basis " + set_string(i) + " spans " + std::to_string(cnt) + " tiles");
  }
  std::vector<Tile> top;
  for (const auto& t : tiles)
    if (popcount(tile_span(t, ground)) == rank) top.push_back(t);
  r.top_tiles = top.size();
  // (4) every tile is a face of a top-dimensional tile.
  for (const auto& t : tiles)
    if (std::none_of(top.begin(), top.end(), [&](const Tile& u) { return leq(u, t); }))
      r.fail("tile with span " + set_string(tile_span(t, ground)) + " lies in no top tile");
  // (5) isometric tile graph.
  if (!graph_distance_check(s)) r.fail("tile graph is not isometric");

  for (int e = 0; e < m.size(); ++e) {
    // (6) contraction.
    if (!contains(m.loops(), e)) {
      const auto me = contract_element(m, e);
      std::vector<Tile> expect;
      for (const auto& t : tiles)
        if (contains(tile_span(t, ground), e)) expect.push_back(compress(t, e));
      if (tiling_of(me, collection_contract(s, e)) != sorted_unique(expect))
        r.fail("contraction identity fails at " + std::to_string(e));
    }
    // (7) deletion.
    if (!contains(m.coloops(), e)) {
      const auto me = delete_element(m, e);
      std::vector<Tile> expect;
      for (const auto& t : tiles) expect.push_back(compress(t, e));
      if (tiling_of(me, collection_delete(s, e)) != sorted_unique(expect))
        r.fail("deletion identity fails at " + std::to_string(e));
    }
  }

  // Local uniqueness: for S in the collection and S xor e outside it, exactly
  // one tile through S has span I with the circuit
  // (I and S, plus e when e is outside S; I minus S, plus e when e is in S).
  for (Bits v : s)
    for (int e = 0; e < m.size(); ++e) {
      if (in(s, v ^ bit(e))) continue;
      int found = 0;
      for (const auto& t : tiles) {
        if (!is_subset(t.plus, v) || (t.minus & v) != 0) continue;
        const Bits i = tile_span(t, ground);
        const SignedSet c = contains(v, e) ? SignedSet{i & v, (i & ~v) | bit(e)} : SignedSet{(i & v) | bit(e), i & ~v};
        if (m.is_circuit(c)) ++found;
      }
      if (found != 1)
        r.fail("local tile count " + std::to_string(found) + " at " + set_string(v) + " and " + std::to_string(e));
    }
  return r;
}

bool graph_distance_check(const Collection& s) {
  const int k = static_cast<int>(s.size());
  std::vector<std::vector<int>> adj(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (popcount(s[a] ^ s[b]) == 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  for (int a = 0; a < k; ++a) {
    std::vector<int> dist(k, -1);
    std::queue<int> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    for (int b = 0; b < k; ++b)
      if (dist[b] != popcount(s[a] ^ s[b])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<Bits> mutation_neighbors(const OrientedMatroid& m, Bits s) {
  std::vector<Bits> out;
  for (const auto& x : m.circuits()) {
    if (orients_positively(s, x)) out.push_back(s ^ x.support());
    if (orients_positively(s, -x)) out.push_back(s ^ x.support());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Components mutation_components(const OrientedMatroid& m) {
  if (m.size() > 20) throw ResourceLimit("mutation graph limited to 20 elements");
  const std::size_t total = std::size_t{1} << m.size();
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Bits s = 0; s < total; ++s)
    for (const auto& x : m.circuits())
      if (orients_positively(s, x)) {
        const auto a = find(static_cast<std::uint32_t>(s));
        const auto b = find(static_cast<std::uint32_t>(s ^ x.support()));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<std::uint32_t, std::vector<Bits>> groups;
  for (Bits s = 0; s < total; ++s) groups[find(static_cast<std::uint32_t>(s))].push_back(s);
  Components c;
  for (auto& [root, v] : groups) c.members.push_back(std::move(v));
  std::stable_sort(c.members.begin(), c.members.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  c.component.assign(total, -1);
  for (int id = 0; id < static_cast<int>(c.members.size()); ++id)
    for (Bits s : c.members[id]) c.component[s] = id;
  return c;
}

std::vector<std::pair<int, SignMap>> flip_neighbors(const OrientedMatroid& m, const SignMap& sigma,
                                                    const std::vector<Corank2Cycle>& cycles) {
  std::vector<std::pair<int, SignMap>> out;
  for (int w = 0; w < m.num_circuits(); ++w) {
    SignMap t = sigma;
    t[w] = -t[w];
    bool ok = true;
    for (const auto& c : cycles) {
      if (std::none_of(c.half.begin(), c.half.end(), [&](const auto& h) { return h.first == w; })) continue;
      if (classify_type(m, c, t) != LVType::III) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back({w, std::move(t)});
  }
  return out;
}

bool mutation_relation_holds(const OrientedMatroid& m, const SignMap& sigma, int w) {
  const SignedSet wx = sigma[w] == Sign::Plus ? m.circuits()[w] : -m.circuits()[w];
  SignMap flipped = sigma;
  flipped[w] = -flipped[w];
  std::vector<Bits> expect;
  for (Bits t : collection_of(m, sigma)) expect.push_back(orients_positively(t, wx) ? t ^ wx.support() : t);
  return make_collection(expect) == collection_of(m, flipped);
}

FlipGraph flip_graph(const OrientedMatroid& m, const Budget& budget) {
  FlipGraph g;
  g.vertices = enumerate_colocalizations(m, 0, budget);
  const auto cycles = all_corank2_cycles(m);
  std::map<SignMap, int> index;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) index[g.vertices[i]] = i;
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    for (const auto& [w, t] : flip_neighbors(m, g.vertices[i], cycles)) {
      const auto it = index.find(t);
      if (it == index.end()) throw Error("flip leaves the set of colocalizations");
      if (i < it->second) g.edges.push_back({i, it->second});
      parent[find(i)] = find(it->second);
    }
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    if (find(i) != find(0)) g.connected = false;
  return g;
}

// ---------------------------------------------------------------------------

SeparationTable::SeparationTable(const OrientedMatroid& m) : n_(m.size()) {
  if (n_ > 13) throw ResourceLimit("separation table limited to 13 elements");
  // Ternary digit per element: 0 absent, 1 in A, 2 in B.
  const int lo = std::min(n_, 7), hi = n_ - lo;
  tern_lo_.assign(std::size_t{1} << lo, 0);
  tern_hi_.assign(std::size_t{1} << hi, 0);
  std::uint32_t pow_lo = 1;
  for (int e = 0; e < lo; ++e) pow_lo *= 3;
  for (Bits x = 0; x < tern_lo_.size(); ++x) {
    std::uint32_t v = 0, p = 1;
    for (int e = 0; e < lo; ++e, p *= 3)
      if (contains(x, e)) v += p;
    tern_lo_[x] = v;
  }
  for (Bits x = 0; x < tern_hi_.size(); ++x) {
    std::uint32_t v = 0, p = pow_lo;
    for (int e = 0; e < hi; ++e, p *= 3)
      if (contains(x, e)) v += p;
    tern_hi_[x] = v;
  }
  std::size_t total = 1;
  for (int e = 0; e < n_; ++e) total *= 3;
  bad_.assign(total, 0);
  for (const auto& x : m.signed_circuits()) bad_[index(x.plus, x.minus)] = 1;
  // Increasing index order visits every pair after its one-smaller pairs.
  std::vector<std::uint32_t> pw(n_);
  for (int e = 0; e < n_; ++e) pw[e] = e == 0 ? 1 : pw[e - 1] * 3;
  for (std::size_t id = 0; id < total; ++id) {
    if (bad_[id]) continue;
    std::size_t rest = id;
    for (int e = 0; e < n_ && !bad_[id]; ++e) {
      const std::size_t d = rest % 3;
      rest /= 3;
      if (d != 0 && bad_[id - d * pw[e]]) bad_[id] = 1;
    }
  }
}

std::size_t SeparationTable::index(Bits a, Bits b) const {
  const int lo = std::min(n_, 7);
  const Bits mask = full_set(lo);
  return tern_lo_[a & mask] + tern_hi_[a >> lo] + 2 * (tern_lo_[b & mask] + tern_hi_[b >> lo]);
}

bool SeparationTable::separated(Bits i, Bits j) const {
  const Bits a = i & ~j, b = j & ~i;
  return !bad_[index(a, b)] && !bad_[index(b, a)];
}

namespace {

BitGraph separation_graph(const SeparationTable& t, const std::vector<Bits>& vs) {
  const int k = static_cast<int>(vs.size());
  BitGraph g(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (t.separated(vs[a], vs[b])) g.add_edge(a, b);
  return g;
}

Collection to_collection(const std::vector<int>& clique, const std::vector<Bits>& vs) {
  std::vector<Bits> out;
  for (int v : clique) out.push_back(vs[v]);
  return make_collection(out);
}

// Scans maximal cliques, stopping at the first one of size other than
// `target` when target > 0, or at the first size disagreement otherwise.
PurityResult clique_scan(const OrientedMatroid& m, const std::vector<Bits>& vs, std::size_t target,
                         const Budget& budget) {
  const SeparationTable table(m);
  const BitGraph g = separation_graph(table, vs);
  std::vector<int> all(vs.size());
  std::iota(all.begin(), all.end(), 0);
  PurityResult r;
  r.independent = target;
  std::optional<std::vector<int>> first;
  r.cliques = maximal_cliques(
      g, all,
      [&](const std::vector<int>& c) {
        const std::size_t sz = c.size();
        if (!first) {
          first = c;
          r.min_size = r.max_size = sz;
        }
        r.min_size = std::min(r.min_size, sz);
        r.max_size = std::max(r.max_size, sz);
        const std::size_t want = target > 0 ? target : first->size();
        if (sz != want) {
          r.pure = false;
          // Report the smaller of the two disagreeing cliques.
          r.witness = to_collection(sz < want || target > 0 ? c : *first, vs);
          return false;
        }
        return true;
      },
      budget);
  return r;
}

}  // namespace

PurityResult purity_check(const OrientedMatroid& m, const Budget& budget) {
  if (m.size() > 12) throw ResourceLimit("purity check limited to 12 elements");
  std::vector<Bits> vs(std::size_t{1} << m.size());
  std::iota(vs.begin(), vs.end(), Bits{0});
  const auto ind = static_cast<std::size_t>(tutte_eval(m, 2, 1).get_ui());
  return clique_scan(m, vs, ind, budget);
}

PurityResult domain_purity_check(const OrientedMatroid& m, const std::vector<Bits>& domain, const Budget& budget) {
  auto r = clique_scan(m, make_collection(domain), 0, budget);
  r.independent = static_cast<std::size_t>(tutte_eval(m, 2, 1).get_ui());
  return r;
}

std::vector<Collection> domain_maximal_collections(const OrientedMatroid& m, const std::vector<Bits>& domain,
                                                   const Budget& budget) {
  const auto vs = make_collection(domain);
  const SeparationTable table(m);
  const BitGraph g = separation_graph(table, vs);
  std::vector<int> all(vs.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Collection> out;
  maximal_cliques(
      g, all,
      [&](const std::vector<int>& c) {
        out.push_back(to_collection(c, vs));
        return true;
      },
      budget);
  std::sort(out.begin(), out.end());
  return out;
}

CertificateResult bad_collection_certificate(const OrientedMatroid& m, const SignedSet& c, const Collection& s0) {
  CertificateResult r;
  r.is_circuit = m.is_circuit(c);
  r.collection_separated = is_collection_separated(m, s0);
  bool all_blocked = true;
  const Bits free = m.ground() & ~c.support();
  for (Sign o : {Sign::Plus, Sign::Minus}) {
    const SignedSet x = o == Sign::Plus ? c : -c;
    // Sets orienting x positively: x+ plus any subset outside the support.
    for (Bits j = free;; j = (j - 1) & free) {
      CertificateRow row{x.plus | j, o, {}};
      for (Bits t : s0)
        if (!is_pair_separated(m, row.set, t)) row.blockers.push_back(t);
      all_blocked &= !row.blockers.empty();
      r.rows.push_back(std::move(row));
      if (j == 0) break;
    }
  }
  std::stable_sort(r.rows.begin(), r.rows.end(), [](const CertificateRow& a, const CertificateRow& b) {
    return a.orientation != b.orientation ? a.orientation == Sign::Plus : a.set < b.set;
  });
  r.valid = r.is_circuit && r.collection_separated && all_blocked;
  return r;
}

DomainConjectureReport domain_restriction_conjecture_check(const OrientedMatroid& m, const Budget& budget) {
  DomainConjectureReport r;
  const auto comps = mutation_components(m);
  r.components = comps.members.size();
  const SeparationTable table(m);
  std::vector<std::size_t> best(comps.members.size(), 0);
  for (std::size_t d = 0; d < comps.members.size(); ++d) {
    const auto& vs = comps.members[d];
    if (vs.size() == 1) {
      best[d] = 1;
      continue;
    }
    const BitGraph g = separation_graph(table, vs);
    std::vector<int> all(vs.size());
    std::iota(all.begin(), all.end(), 0);
    maximal_cliques(
        g, all,
        [&](const std::vector<int>& c) {
          best[d] = std::max(best[d], c.size());
          return true;
        },
        budget);
  }
  for (const auto& s : max_by_size_collections(m, 0, budget)) {
    ++r.collections;
    std::vector<std::size_t> hits(comps.members.size(), 0);
    for (Bits t : s) ++hits[comps.component[t]];
    for (std::size_t d = 0; d < hits.size(); ++d) (hits[d] == best[d] ? r.confirmations : r.counterexamples)++;
  }
  return r;
}

}  // namespace omsep
