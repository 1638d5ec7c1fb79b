#include "omsep/cliques.hpp"

#include <algorithm>
#include <bit>

namespace omsep {

BitGraph::BitGraph(int n) : n_(n), w_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * w_, 0) {}

void BitGraph::add_edge(int u, int v) {
  if (u == v) return;
  adj_[static_cast<std::size_t>(u) * w_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  adj_[static_cast<std::size_t>(v) * w_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

namespace {

using Set = std::vector<std::uint64_t>;

struct Search {
  const BitGraph& g;
  const std::function<bool(const std::vector<int>&)>& visit;
  const Budget& budget;
  std::vector<int> r;
  std::uint64_t count = 0;
  bool stop = false;

  bool empty(const Set& s) const {
    return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
  }

  int common(const Set& s, int u) const {
    const auto* row = g.row(u);
    int c = 0;
    for (int i = 0; i < g.words(); ++i) c += std::popcount(s[i] & row[i]);
    return c;
  }

  void expand(Set p, Set x) {
    if (stop) return;
    if (empty(p)) {
      if (empty(x)) {
        if (++count > budget.max_cliques) throw ResourceLimit("maximal clique cap reached");
        if ((count & 1023) == 0) budget.check_time();
        if (!visit(r)) stop = true;
      }
      return;
    }
    // Candidates adjacent to all of P and X lie in every extension.
    const int size_px = [&] {
      int c = 0;
      for (int i = 0; i < g.words(); ++i) c += std::popcount(p[i] | x[i]);
      return c;
    }();
    std::vector<int> forced;
    for (int i = 0; i < g.words(); ++i) {
      std::uint64_t w = p[i];
      while (w) {
        const int u = i * 64 + std::countr_zero(w);
        w &= w - 1;
        const auto* row = g.row(u);
        int c = 0;
        for (int k = 0; k < g.words(); ++k) c += std::popcount((p[k] | x[k]) & row[k]);
        if (c == size_px - 1) forced.push_back(u);
      }
    }
    if (!forced.empty()) {
      for (int u : forced) {
        p[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
        r.push_back(u);
      }
      expand(std::move(p), std::move(x));
      r.resize(r.size() - forced.size());
      return;
    }
    // Pivot maximizing neighbours inside P.
    int pivot = -1, best = -1;
    for (int i = 0; i < g.words(); ++i) {
      std::uint64_t w = p[i] | x[i];
      while (w) {
        const int u = i * 64 + std::countr_zero(w);
        w &= w - 1;
        const int c = common(p, u);
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    }
    const auto* prow = g.row(pivot);
    Set cand(g.words());
    for (int i = 0; i < g.words(); ++i) cand[i] = p[i] & ~prow[i];
    for (int i = 0; i < g.words() && !stop; ++i) {
      std::uint64_t w = cand[i];
      while (w && !stop) {
        const int v = i * 64 + std::countr_zero(w);
        w &= w - 1;
        const auto* row = g.row(v);
        Set np(g.words()), nx(g.words());
        for (int k = 0; k < g.words(); ++k) {
          np[k] = p[k] & row[k];
          nx[k] = x[k] & row[k];
        }
        r.push_back(v);
        expand(std::move(np), std::move(nx));
        r.pop_back();
        p[i] &= ~(std::uint64_t{1} << (v & 63));
        x[i] |= std::uint64_t{1} << (v & 63);
      }
    }
  }
};

// Degeneracy order of the induced subgraph (repeatedly remove a vertex of
// minimum remaining degree).
std::vector<int> degeneracy_order(const BitGraph& g, const std::vector<int>& vs) {
  const int n = static_cast<int>(vs.size());
  std::vector<int> deg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && g.has_edge(vs[a], vs[b])) ++deg[a];
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int a = 0; a < n; ++a)
      if (!gone[a] && (best < 0 || deg[a] < deg[best])) best = a;
    gone[best] = 1;
    order.push_back(vs[best]);
    for (int b = 0; b < n; ++b)
      if (!gone[b] && g.has_edge(vs[best], vs[b])) --deg[b];
  }
  return order;
}

}  // namespace

std::uint64_t maximal_cliques(const BitGraph& g, const std::vector<int>& vertices,
                              const std::function<bool(const std::vector<int>&)>& visit, const Budget& budget) {
  Search s{g, visit, budget, {}, 0, false};
  const auto order = degeneracy_order(g, vertices);
  Set later(g.words(), 0), earlier(g.words(), 0);
  for (int v : order) later[v >> 6] |= std::uint64_t{1} << (v & 63);
  for (int v : order) {
    if (s.stop) break;
    later[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    const auto* row = g.row(v);
    Set p(g.words()), x(g.words());
    for (int k = 0; k < g.words(); ++k) {
      p[k] = later[k] & row[k];
      x[k] = earlier[k] & row[k];
    }
    s.r = {v};
    s.expand(std::move(p), std::move(x));
    earlier[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  return s.count;
}

}  // namespace omsep
