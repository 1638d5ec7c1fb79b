#include "omsep/construct.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "omsep/errors.hpp"

namespace omsep {

namespace {

// Parity of the permutation sorting the tuple; tuples with repeats give 0.
int sort_sign(std::vector<int> t) {
  int s = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) s = -s;
    }
  return s;
}

void lex_subsets(int n, int r, std::vector<Bits>& out) {
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(from_elements(cur));
      return;
    }
    for (int e = start; e < n; ++e) {
      cur.push_back(e);
      go(e + 1);
      cur.pop_back();
    }
  };
  go(0);
}

struct Rref {
  int rank = 0;
  std::vector<int> pivots;
  std::vector<std::vector<mpq_class>> rows;
};

Rref rref(std::vector<std::vector<mpq_class>> a, int cols) {
  Rref out;
  int row = 0;
  const int nrows = static_cast<int>(a.size());
  for (int c = 0; c < cols && row < nrows; ++c) {
    int p = -1;
    for (int r = row; r < nrows; ++r)
      if (sgn(a[r][c]) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[row], a[p]);
    const mpq_class inv = 1 / a[row][c];
    for (int k = c; k < cols; ++k) a[row][k] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  out.rows = std::move(a);
  return out;
}

std::vector<std::vector<mpq_class>> submatrix(const VectorConfiguration& v, const std::vector<int>& cols) {
  std::vector<std::vector<mpq_class>> a(v.dimension, std::vector<mpq_class>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < v.dimension; ++i) a[i][j] = v.columns[cols[j]][i];
  return a;
}

mpq_class determinant(std::vector<std::vector<mpq_class>> a) {
  const int n = static_cast<int>(a.size());
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (sgn(a[r][c]) != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

Sign sign_of(const mpq_class& q) {
  const int s = sgn(q);
  return s > 0 ? Sign::Plus : s < 0 ? Sign::Minus : Sign::Zero;
}

}  // namespace

OrientedMatroid free_matroid(int n) { return OrientedMatroid(n, {}); }

OrientedMatroid alternating(int n, int d) {
  if (d < 0 || d > n) throw ValidationError("alternating matroid needs 0 <= d <= n");
  std::vector<SignedSet> cs;
  for_each_k_subset(n, d + 1, [&](Bits s) {
    SignedSet x;
    int k = 0;
    for (int e : elements(s)) (k++ % 2 == 0 ? x.plus : x.minus) |= bit(e);
    cs.push_back(x);
  });
  return OrientedMatroid(n, cs, false);
}

// ---------------------------------------------------------------------------

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ValidationError("bad rational '" + s + "'");
  }
}

std::string format_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str(10);
}

int rank_of_columns(const VectorConfiguration& v, Bits s) {
  const auto cols = elements(s);
  if (cols.empty()) return 0;
  return rref(submatrix(v, cols), static_cast<int>(cols.size())).rank;
}

std::vector<mpq_class> dependence(const VectorConfiguration& v, Bits support) {
  const auto cols = elements(support);
  const int k = static_cast<int>(cols.size());
  const Rref r = rref(submatrix(v, cols), k);
  if (r.rank != k - 1) throw ValidationError("support is not a circuit of the configuration");
  int free_col = -1;
  for (int c = 0, p = 0; c < k; ++c) {
    if (p < static_cast<int>(r.pivots.size()) && r.pivots[p] == c) {
      ++p;
      continue;
    }
    free_col = c;
  }
  std::vector<mpq_class> coef(k, 0);
  coef[free_col] = 1;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) coef[r.pivots[i]] = -r.rows[i][free_col];
  if (sgn(coef[0]) < 0)
    for (auto& c : coef) c = -c;
  std::vector<mpq_class> out(v.size(), 0);
  for (int j = 0; j < k; ++j) out[cols[j]] = coef[j];
  return out;
}

OrientedMatroid from_vectors(const VectorConfiguration& v) {
  const int n = v.size();
  if (n > kMaxElements) throw ValidationError("too many vectors");
  for (const auto& c : v.columns)
    if (static_cast<int>(c.size()) != v.dimension) throw ValidationError("vector of wrong dimension");
  const int r = rank_of_columns(v, full_set(n));
  std::vector<Bits> supports;
  std::vector<SignedSet> cs;
  for (int k = 1; k <= r + 1 && k <= n; ++k) {
    for_each_k_subset(n, k, [&](Bits s) {
      for (Bits t : supports)
        if (is_subset(t, s)) return;
      if (rank_of_columns(v, s) != k - 1) return;
      supports.push_back(s);
      const auto coef = dependence(v, s);
      SignedSet x;
      for (int e : elements(s)) (sgn(coef[e]) > 0 ? x.plus : x.minus) |= bit(e);
      cs.push_back(x);
    });
  }
  auto labels = v.labels.empty() ? default_labels(n) : v.labels;
  return OrientedMatroid(n, cs, false, labels);
}

// ---------------------------------------------------------------------------

std::vector<std::string> DirectedGraph::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    out.push_back(edges[i].label.empty() ? std::to_string(i + 1) : edges[i].label);
  return out;
}

std::vector<GraphCycle> simple_cycles(const DirectedGraph& g, std::size_t guard) {
  const int m = static_cast<int>(g.edges.size());
  if (m > kMaxElements) throw ValidationError("too many edges");
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertices);  // (neighbour, edge)
  std::vector<GraphCycle> out;
  for (int e = 0; e < m; ++e) {
    const auto& ed = g.edges[e];
    if (ed.tail < 0 || ed.head < 0 || ed.tail >= g.vertices || ed.head >= g.vertices)
      throw ValidationError("edge endpoint out of range");
    if (ed.tail == ed.head) {
      out.push_back({bit(e), {ed.tail}, {bit(e), 0}});
      continue;
    }
    adj[ed.tail].push_back({ed.head, e});
    adj[ed.head].push_back({ed.tail, e});
  }
  std::set<Bits> seen;
  std::vector<int> walk;
  std::vector<int> walk_edges;
  std::vector<char> on_path(g.vertices, 0);
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (auto [w, e] : adj[v]) {
      if (!walk_edges.empty() && e == walk_edges.back()) continue;
      if (w == start) {
        Bits mask = bit(e);
        for (int f : walk_edges) mask |= bit(f);
        if (!seen.insert(mask).second) continue;
        if (out.size() >= guard) throw ResourceLimit("cycle enumeration guard reached");
        GraphCycle c;
        c.edges = mask;
        c.vertex_walk = walk;
        auto all_edges = walk_edges;
        all_edges.push_back(e);
        for (std::size_t i = 0; i < all_edges.size(); ++i) {
          const int from = walk[i];
          const int f = all_edges[i];
          (g.edges[f].tail == from ? c.signs.plus : c.signs.minus) |= bit(f);
        }
        out.push_back(c);
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      walk.push_back(w);
      walk_edges.push_back(e);
      dfs(start, w);
      walk.pop_back();
      walk_edges.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < g.vertices; ++s) {
    on_path[s] = 1;
    walk = {s};
    walk_edges.clear();
    dfs(s, s);
    on_path[s] = 0;
  }
  return out;
}

OrientedMatroid from_digraph(const DirectedGraph& g) {
  std::vector<SignedSet> cs;
  for (const auto& c : simple_cycles(g)) cs.push_back(c.signs);
  return OrientedMatroid(static_cast<int>(g.edges.size()), cs, false, g.labels());
}

// ---------------------------------------------------------------------------

Chirotope::Chirotope(int n, int r) : n_(n), r_(r) {
  lex_subsets(n, r, tuples_);
  values_.assign(tuples_.size(), Sign::Zero);
  for (int i = 0; i < static_cast<int>(tuples_.size()); ++i) index_.emplace(tuples_[i], i);
}

Sign Chirotope::at(Bits subset) const {
  auto it = index_.find(subset);
  return it == index_.end() ? Sign::Zero : values_[it->second];
}

void Chirotope::set(Bits subset, Sign s) { values_.at(index_.at(subset)) = s; }

Sign Chirotope::eval(const std::vector<int>& tuple) const {
  const int s = sort_sign(tuple);
  if (s == 0) return Sign::Zero;
  const Sign v = at(from_elements(tuple));
  return s > 0 ? v : -v;
}

Chirotope chirotope_from_vectors(const VectorConfiguration& v) {
  const int r = rank_of_columns(v, full_set(v.size()));
  if (r != v.dimension) throw ValidationError("chirotope needs a full-rank configuration");
  Chirotope chi(v.size(), r);
  for (Bits t : chi.tuples()) chi.set(t, sign_of(determinant(submatrix(v, elements(t)))));
  return chi;
}

OrientedMatroid circuits_from_chirotope(const Chirotope& chi, bool validate) {
  const int n = chi.size(), r = chi.rank();
  std::vector<SignedSet> cs;
  for_each_k_subset(n, r + 1, [&](Bits s) {
    const auto es = elements(s);
    SignedSet x;
    for (int k = 0; k <= r; ++k) {
      Sign v = chi.at(s & ~bit(es[k]));
      if (k % 2 == 1) v = -v;
      if (v == Sign::Plus) x.plus |= bit(es[k]);
      if (v == Sign::Minus) x.minus |= bit(es[k]);
    }
    if (!x.empty()) cs.push_back(x);
  });
  return OrientedMatroid(n, cs, validate);
}

Chirotope chirotope_from_matroid(const OrientedMatroid& m) {
  const int n = m.size(), r = m.rank();
  Chirotope chi(n, r);
  if (r == 0) return chi;
  std::vector<Bits> queue;
  std::set<Bits> done;
  for (Bits t : chi.tuples())
    if (m.is_independent(t)) {
      chi.set(t, Sign::Plus);
      queue.push_back(t);
      done.insert(t);
      break;
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Bits b = queue[qi];
    const auto be = elements(b);
    for (int e = 0; e < n; ++e) {
      if (contains(b, e)) continue;
      const SignedSet* fund = nullptr;
      for (const auto& c : m.circuits())
        if (contains(c.support(), e) && is_subset(c.support(), b | bit(e))) {
          fund = &c;
          break;
        }
      if (!fund) continue;  // e is a coloop relative to b; cannot happen for a basis
      for (std::size_t k = 0; k < be.size(); ++k) {
        const int out = be[k];
        if (!contains(fund->support(), out)) continue;
        const Bits nb = (b & ~bit(out)) | bit(e);
        if (done.count(nb)) continue;
        auto tuple = be;
        tuple[k] = e;
        Sign v = -(fund->at(e) * fund->at(out)) * chi.at(b);
        if (sort_sign(tuple) < 0) v = -v;
        chi.set(nb, v);
        done.insert(nb);
        queue.push_back(nb);
      }
    }
  }
  return chi;
}

// ---------------------------------------------------------------------------

namespace {

// Solves rows (mask, rhs) over GF(2); returns an assignment or nothing.
std::optional<Bits> solve_gf2(std::vector<std::pair<Bits, int>> rows, int vars) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < vars && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !contains(rows[p].first, c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && contains(rows[i].first, c)) {
        rows[i].first ^= rows[rank].first;
        rows[i].second ^= rows[rank].second;
      }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i].first == 0 && rows[i].second) return std::nullopt;
  Bits sol = 0;
  for (std::size_t i = 0; i < rank; ++i)
    if (rows[i].second) sol |= bit(pivot_col[i]);
  return sol;
}

}  // namespace

std::optional<PositiveWitness> positive_orientation(const OrientedMatroid& m) {
  const int n = m.size();
  if (n > 10) throw ResourceLimit("positive orientation search limited to 10 elements");
  const Chirotope chi = chirotope_from_matroid(m);
  std::vector<Bits> nonzero;
  for (std::size_t i = 0; i < chi.tuples().size(); ++i)
    if (chi.values()[i] != Sign::Zero) nonzero.push_back(chi.tuples()[i]);
  // Cyclic shifts keep a positive chirotope uniform in sign, so the first
  // position can hold element 0.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n == 0) return PositiveWitness{order, 0};
  std::vector<int> pos(n);
  do {
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    std::vector<std::pair<Bits, int>> rows;
    for (Bits t : nonzero) {
      auto es = elements(t);
      std::vector<int> by_pos;
      for (int e : es) by_pos.push_back(pos[e]);
      // Value on the tuple sorted by the new order equals the sorted value
      // times the sign of reordering.
      const int s = sort_sign(by_pos) * static_cast<int>(chi.at(t));
      rows.push_back({t | bit(n), s < 0 ? 1 : 0});
    }
    if (auto sol = solve_gf2(rows, n + 1)) return PositiveWitness{order, *sol & full_set(n)};
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return std::nullopt;
}

bool on_convex_boundary(const VectorConfiguration& v) {
  if (v.dimension != 3) throw ValidationError("convex boundary test needs rank-3 vectors");
  std::vector<std::array<mpq_class, 2>> p;
  for (const auto& c : v.columns) {
    if (sgn(c[2]) == 0) throw ValidationError("vector at infinity in convex boundary test");
    p.push_back({c[0] / c[2], c[1] / c[2]});
  }
  auto orient = [&](int a, int b, int c) {
    const mpq_class d = (p[b][0] - p[a][0]) * (p[c][1] - p[a][1]) - (p[b][1] - p[a][1]) * (p[c][0] - p[a][0]);
    return sgn(d);
  };
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    bool boundary = true;
    for (int j = 0; j < n; ++j) {
      if (p[j] == p[i]) continue;
      boundary = false;
      bool pos = false, neg = false;
      for (int k = 0; k < n; ++k) {
        const int o = orient(i, j, k);
        pos |= o > 0;
        neg |= o < 0;
      }
      if (!(pos && neg)) {
        boundary = true;
        break;
      }
    }
    if (!boundary) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Census of simple rank-3 oriented matroids.

namespace {

struct CensusSearch {
  int n;
  std::vector<std::array<int, 3>> triples;
  std::map<std::array<int, 3>, int> index;
  struct Term {
    int idx;
    int sgn;
  };
  struct Relation {
    std::array<Term, 6> t;  // pairs (0,1), (2,3), (4,5) multiply
  };
  std::vector<std::vector<Relation>> rel_by_max;
  std::vector<int> val;
  std::vector<int> norm_check;  // triple index -> element to normalize, or -1

  // Canonical form data.
  std::vector<std::vector<int>> perm_idx;
  std::vector<Bits> perm_flip;
  std::vector<Bits> reorient_mask;
  std::set<std::pair<Bits, Bits>> keys;
  std::vector<Chirotope> reps;
  std::size_t generated = 0;

  Term term(int a, int b, int c) const {
    std::vector<int> t{a, b, c};
    const int s = sort_sign(t);
    std::sort(t.begin(), t.end());
    return {index.at({t[0], t[1], t[2]}), s};
  }

  explicit CensusSearch(int n_) : n(n_) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          index[{a, b, c}] = static_cast<int>(triples.size());
          triples.push_back({a, b, c});
        }
    const int t = static_cast<int>(triples.size());
    rel_by_max.resize(t);
    for (int x = 0; x < n; ++x) {
      std::vector<int> rest;
      for (int e = 0; e < n; ++e)
        if (e != x) rest.push_back(e);
      const int k = static_cast<int>(rest.size());
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          for (int l = j + 1; l < k; ++l)
            for (int h = l + 1; h < k; ++h) {
              const int a = rest[i], b = rest[j], c = rest[l], d = rest[h];
              Relation r{{term(x, a, b), term(x, c, d), term(x, a, c), term(x, b, d), term(x, a, d), term(x, b, c)}};
              int mx = 0;
              for (auto& tt : r.t) mx = std::max(mx, tt.idx);
              rel_by_max[mx].push_back(r);
            }
    }
    norm_check.assign(t, -1);
    for (int e = 3; e < n; ++e) norm_check[index.at({1, 2, e})] = e;

    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<int> idx(t);
      Bits flip = 0;
      for (int i = 0; i < t; ++i) {
        const Term tt = term(p[triples[i][0]], p[triples[i][1]], p[triples[i][2]]);
        idx[i] = tt.idx;
        if (tt.sgn < 0) flip |= bit(tt.idx);
      }
      perm_idx.push_back(idx);
      perm_flip.push_back(flip);
    } while (std::next_permutation(p.begin(), p.end()));
    reorient_mask.assign(bit(n), 0);
    for (Bits a = 0; a < bit(n); ++a)
      for (int i = 0; i < t; ++i) {
        const Bits tr = bit(triples[i][0]) | bit(triples[i][1]) | bit(triples[i][2]);
        if (popcount(tr & a) % 2) reorient_mask[a] |= bit(i);
      }
    val.assign(t, 0);
  }

  bool relation_ok(const Relation& r) const {
    const int t1 = r.t[0].sgn * val[r.t[0].idx] * r.t[1].sgn * val[r.t[1].idx];
    const int t2 = -r.t[2].sgn * val[r.t[2].idx] * r.t[3].sgn * val[r.t[3].idx];
    const int t3 = r.t[4].sgn * val[r.t[4].idx] * r.t[5].sgn * val[r.t[5].idx];
    const bool pos = t1 > 0 || t2 > 0 || t3 > 0;
    const bool neg = t1 < 0 || t2 < 0 || t3 < 0;
    return pos == neg;
  }

  bool normalized(int e) const {
    for (auto tr : {std::array<int, 3>{0, 1, e}, {0, 2, e}, {1, 2, e}}) {
      const int v = val[index.at(tr)];
      if (v != 0) return v > 0;
    }
    return false;
  }

  bool basis_exchange_and_simple() const {
    std::vector<Bits> bs;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (val[i] != 0) bs.push_back(bit(triples[i][0]) | bit(triples[i][1]) | bit(triples[i][2]));
    std::set<Bits> bset(bs.begin(), bs.end());
    for (Bits b1 : bs)
      for (Bits b2 : bs)
        for (int x : elements(b1 & ~b2)) {
          bool ok = false;
          for (int y : elements(b2 & ~b1))
            if (bset.count((b1 & ~bit(x)) | bit(y))) {
              ok = true;
              break;
            }
          if (!ok) return false;
        }
    // Simple: every pair of elements lies in a basis.
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (std::none_of(bs.begin(), bs.end(), [&](Bits s) { return is_subset(bit(a) | bit(b), s); })) return false;
    return true;
  }

  std::pair<Bits, Bits> canonical_key() const {
    Bits z = 0, neg = 0;
    for (std::size_t i = 0; i < val.size(); ++i) {
      if (val[i] != 0) z |= bit(i);
      if (val[i] < 0) neg |= bit(i);
    }
    std::pair<Bits, Bits> best{~Bits{0}, ~Bits{0}};
    for (std::size_t p = 0; p < perm_idx.size(); ++p) {
      Bits zp = 0, np = 0;
      for (Bits r = z; r; r &= r - 1) {
        const int i = lowest(r);
        zp |= bit(perm_idx[p][i]);
        if (contains(neg, i)) np |= bit(perm_idx[p][i]);
      }
      if (zp > best.first) continue;
      np = (np ^ perm_flip[p]) & zp;
      Bits mn = ~Bits{0};
      for (Bits m : reorient_mask) mn = std::min(mn, (np ^ m) & zp);
      best = std::min(best, std::make_pair(zp, mn));
    }
    return best;
  }

  void leaf() {
    if (!basis_exchange_and_simple()) return;
    Chirotope chi(n, 3);
    for (std::size_t i = 0; i < triples.size(); ++i)
      chi.set(bit(triples[i][0]) | bit(triples[i][1]) | bit(triples[i][2]),
              val[i] > 0 ? Sign::Plus : val[i] < 0 ? Sign::Minus : Sign::Zero);
    // Throws if the derived circuits violate an axiom.
    (void)circuits_from_chirotope(chi, true);
    ++generated;
    if (keys.insert(canonical_key()).second) reps.push_back(chi);
  }

  void go(int i) {
    if (i == static_cast<int>(triples.size())) {
      leaf();
      return;
    }
    const std::array<int, 3> choices = i == 0 ? std::array<int, 3>{1, 1, 1} : std::array<int, 3>{1, -1, 0};
    const int nchoice = i == 0 ? 1 : 3;
    for (int c = 0; c < nchoice; ++c) {
      val[i] = choices[c];
      bool ok = true;
      for (const auto& r : rel_by_max[i])
        if (!relation_ok(r)) {
          ok = false;
          break;
        }
      if (ok && norm_check[i] >= 0 && !normalized(norm_check[i])) ok = false;
      if (ok) go(i + 1);
    }
    val[i] = 0;
  }
};

}  // namespace

std::vector<OrientedMatroid> census_rank3_simple(int n, CensusStats* stats) {
  if (n > 7) throw ResourceLimit("census limited to n <= 7");
  if (n < 3) return {};
  CensusSearch s(n);
  s.go(0);
  std::vector<std::pair<std::pair<Bits, Bits>, OrientedMatroid>> keyed;
  for (const auto& chi : s.reps) {
    CensusSearch* ps = &s;
    for (std::size_t i = 0; i < ps->triples.size(); ++i) {
      const Sign v = chi.values()[i];
      ps->val[i] = v == Sign::Plus ? 1 : v == Sign::Minus ? -1 : 0;
    }
    keyed.push_back({ps->canonical_key(), circuits_from_chirotope(chi, true)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<OrientedMatroid> out;
  for (auto& [k, m] : keyed) out.push_back(std::move(m));
  // Representatives must be pairwise non-isomorphic.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (is_isomorphic(out[i], out[j])) throw Error("census produced isomorphic representatives");
  if (stats) {
    stats->chirotopes = s.generated;
    stats->classes = out.size();
  }
  return out;
}

// ---------------------------------------------------------------------------

VectorConfiguration affine_points(const std::vector<std::pair<mpq_class, mpq_class>>& points) {
  VectorConfiguration v;
  v.dimension = 3;
  for (const auto& [x, y] : points) v.columns.push_back({x, y, mpq_class(1)});
  return v;
}

VectorConfiguration pentagon_with_centre() {
  const mpq_class c1(309, 1000), s1(951, 1000), c2(809, 1000), s2(588, 1000);
  return affine_points({{c1, s1}, {-c2, s2}, {-c2, -s2}, {c1, -s1}, {1, 0}, {0, 0}});
}

VectorConfiguration triangle_with_centroid() {
  return affine_points({{0, 0}, {4, 0}, {3, 2}, {2, 4}, {1, 2}, {2, mpq_class(4, 3)}});
}

VectorConfiguration three_lines_configuration() {
  return affine_points({{0, 0}, {4, 0}, {4, 2}, {0, 4}, {0, 2}, {2, 2}});
}

OrientedMatroid corank2_family(const std::vector<int>& composition) {
  int n = 0;
  for (int a : composition) {
    if (a < 1 || a > 3) throw ValidationError("composition parts must lie in [1, 3]");
    n += a;
  }
  if (composition.size() < 2) throw ValidationError("composition needs at least two parts");
  VectorConfiguration v;
  v.dimension = 2;
  for (std::size_t k = 0; k < composition.size(); ++k)
    for (int i = 0; i < composition[k]; ++i) v.columns.push_back({mpq_class(1), mpq_class(static_cast<long>(k))});
  return dual(from_vectors(v));
}

}  // namespace omsep
