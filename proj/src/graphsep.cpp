#include "omsep/graphsep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

#include "omsep/errors.hpp"

namespace omsep {

DirectedGraph UndirectedGraph::reference() const {
  DirectedGraph d;
  d.vertices = vertices;
  for (int e = 0; e < size(); ++e) {
    auto [u, v] = edges[e];
    d.edges.push_back({std::min(u, v), std::max(u, v), labels.empty() ? std::to_string(e + 1) : labels[e]});
  }
  return d;
}

UndirectedGraph complete_graph(int n) {
  UndirectedGraph g;
  g.vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j});
  return g;
}

UndirectedGraph complete_bipartite(int a, int b) {
  UndirectedGraph g;
  g.vertices = a + b;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.edges.push_back({i, a + j});
  return g;
}

UndirectedGraph cycle_graph(int n) {
  UndirectedGraph g;
  g.vertices = n;
  for (int i = 0; i < n; ++i) g.edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return g;
}

OrientedMatroid graphic_matroid(const UndirectedGraph& g) { return from_digraph(g.reference()); }

// ---------------------------------------------------------------------------

namespace {

// Head of edge e under the orientation.
int head_of(const UndirectedGraph& g, int e, TotalOrientation o) {
  auto [u, v] = g.edges[e];
  const int lo = std::min(u, v), hi = std::max(u, v);
  return contains(o.flipped, e) ? lo : hi;
}

// +1 when the orientation runs the cycle along its walk, -1 against it,
// 0 when the cycle is not directed.
int walk_direction(const UndirectedGraph& g, const GraphCycle& c, TotalOrientation o) {
  int forward = 0, backward = 0;
  for (int e : elements(c.edges)) {
    const bool along_ref = contains(c.signs.plus, e);
    auto [u, v] = g.edges[e];
    const int ref_head = std::max(u, v);
    const bool along = (head_of(g, e, o) == ref_head) == along_ref;
    (along ? forward : backward)++;
  }
  if (backward == 0) return 1;
  if (forward == 0) return -1;
  return 0;
}

}  // namespace

bool g_separated_by_walks(const UndirectedGraph& g, const std::vector<GraphCycle>& cycles, TotalOrientation o1,
                          TotalOrientation o2) {
  for (const auto& c : cycles) {
    const int d1 = walk_direction(g, c, o1);
    if (d1 != 0 && d1 == -walk_direction(g, c, o2)) return false;
  }
  return true;
}

bool g_separated(const UndirectedGraph& g, TotalOrientation o1, TotalOrientation o2) {
  const bool a = g_separated_by_walks(g, simple_cycles(g.reference()), o1, o2);
  const bool b = is_pair_separated(graphic_matroid(g), o1.flipped, o2.flipped);
  if (a != b) throw Error("graph and matroid separation disagree");
  return a;
}

bool is_acyclic(const UndirectedGraph& g, TotalOrientation o) {
  for (const auto& c : simple_cycles(g.reference()))
    if (walk_direction(g, c, o) != 0) return false;
  return true;
}

std::size_t count_acyclic_orientations(const UndirectedGraph& g) {
  if (g.size() > 24) throw ResourceLimit("orientation scan limited to 24 edges");
  const auto cycles = simple_cycles(g.reference());
  std::size_t n = 0;
  for (Bits f = 0; f <= full_set(g.size()); ++f)
    if (std::all_of(cycles.begin(), cycles.end(), [&](const GraphCycle& c) { return walk_direction(g, c, {f}) == 0; }))
      ++n;
  return n;
}

std::vector<int> indegree_sequence(const UndirectedGraph& g, TotalOrientation o) {
  std::vector<int> d(g.vertices, 0);
  for (int e = 0; e < g.size(); ++e) ++d[head_of(g, e, o)];
  return d;
}

ReversalComponents cycle_reversal_components(const UndirectedGraph& g) {
  if (g.size() > 20) throw ResourceLimit("orientation graph limited to 20 edges");
  const auto cycles = simple_cycles(g.reference());
  const std::size_t total = std::size_t{1} << g.size();
  ReversalComponents r;
  r.component.assign(total, -1);
  for (Bits s = 0; s < total; ++s) {
    if (r.component[s] >= 0) continue;
    const int id = static_cast<int>(r.members.size());
    r.members.push_back({});
    std::queue<Bits> q;
    q.push(s);
    r.component[s] = id;
    while (!q.empty()) {
      const Bits u = q.front();
      q.pop();
      r.members[id].push_back(u);
      for (const auto& c : cycles)
        if (walk_direction(g, c, {u}) != 0) {
          const Bits w = u ^ c.edges;
          if (r.component[w] < 0) {
            r.component[w] = id;
            q.push(w);
          }
        }
    }
    std::sort(r.members[id].begin(), r.members[id].end());
  }
  // Same class exactly when indegree sequences agree.
  std::map<std::vector<int>, int> by_indegree;
  for (Bits s = 0; s < total; ++s) {
    auto [it, fresh] = by_indegree.emplace(indegree_sequence(g, {s}), r.component[s]);
    if (!fresh && it->second != r.component[s]) throw Error("indegree classes split a reversal class");
  }
  if (by_indegree.size() != r.members.size()) throw Error("reversal classes split an indegree class");
  return r;
}

PolytopalityReport polytopality_check(const UndirectedGraph& g, const std::vector<Bits>& component) {
  PolytopalityReport r;
  r.vertices = component.size();
  const int m = g.size();
  const auto cycles = simple_cycles(g.reference());
  auto x_of = [&](Bits f) {
    std::vector<mpq_class> x(m);
    for (int e = 0; e < m; ++e) x[e] = contains(f, e) ? -1 : 1;
    return x;
  };
  auto dot = [](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  for (std::size_t i = 0; i < component.size(); ++i)
    for (std::size_t j = i + 1; j < component.size(); ++j) {
      const Bits a = component[i], b = component[j];
      const Bits diff = a ^ b;
      const bool reversal = std::any_of(cycles.begin(), cycles.end(), [&](const GraphCycle& c) {
        return c.edges == diff && walk_direction(g, c, {a}) != 0;
      });
      const auto xa = x_of(a), xb = x_of(b);
      if (reversal) {
        ++r.reversal_edges;
        std::vector<mpq_class> lam(m, 0);
        for (int e = 0; e < m; ++e)
          if (xa[e] == xb[e]) lam[e] = xa[e];
        const mpq_class top = dot(lam, xa);
        bool ok = dot(lam, xb) == top;
        for (Bits c : component)
          if (c != a && c != b && dot(lam, x_of(c)) >= top) ok = false;
        if (!ok) ++r.mismatches;
      }
      std::vector<SignConstraint> rows;
      std::vector<mpq_class> d(m);
      for (int e = 0; e < m; ++e) d[e] = xa[e] - xb[e];
      rows.push_back({d, Sign::Zero});
      for (Bits c : component) {
        if (c == a || c == b) continue;
        const auto xc = x_of(c);
        for (int e = 0; e < m; ++e) d[e] = xa[e] - xc[e];
        rows.push_back({d, Sign::Plus});
      }
      const bool hull = strict_sign_feasibility(rows, m).has_value();
      if (hull) ++r.hull_edges;
      if (hull != reversal) ++r.mismatches;
    }
  r.ok = r.mismatches == 0;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Simple graph on at most 10 vertices: alive mask in the low bits, then one
// bit per unordered pair.
struct MinorSearch {
  int nv;
  std::vector<std::vector<int>> pair_id;
  std::unordered_set<std::uint64_t> seen;
  std::string found;

  explicit MinorSearch(int n) : nv(n), pair_id(n, std::vector<int>(n, -1)) {
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_id[i][j] = pair_id[j][i] = nv + k++;
  }
  bool edge(std::uint64_t s, int u, int v) const { return (s >> pair_id[u][v]) & 1U; }
  bool alive(std::uint64_t s, int v) const { return (s >> v) & 1U; }
  int degree(std::uint64_t s, int v) const {
    int d = 0;
    for (int w = 0; w < nv; ++w)
      if (w != v && alive(s, w) && edge(s, v, w)) ++d;
    return d;
  }

  // Drops vertices of degree at most one; neither target has such vertices.
  std::uint64_t normalize(std::uint64_t s) const {
    for (bool again = true; again;) {
      again = false;
      for (int v = 0; v < nv; ++v)
        if (alive(s, v) && degree(s, v) <= 1) {
          for (int w = 0; w < nv; ++w)
            if (w != v) s &= ~(std::uint64_t{1} << pair_id[v][w]);
          s &= ~(std::uint64_t{1} << v);
          again = true;
        }
    }
    return s;
  }

  std::string match(std::uint64_t s) const {
    std::vector<int> vs, deg;
    int edges = 0;
    for (int v = 0; v < nv; ++v)
      if (alive(s, v)) {
        vs.push_back(v);
        deg.push_back(degree(s, v));
        edges += deg.back();
      }
    edges /= 2;
    if (vs.size() == 4 && edges == 6) return "K4";
    if (vs.size() == 5 && edges == 6) {
      std::vector<int> threes;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (deg[i] == 3) threes.push_back(vs[i]);
      if (threes.size() == 2 && !edge(s, threes[0], threes[1])) return "K2,3";
    }
    return "";
  }

  bool run(std::uint64_t s) {
    s = normalize(s);
    if (!seen.insert(s).second) return false;
    const auto m = match(s);
    if (!m.empty()) {
      found = m;
      return true;
    }
    int alive_n = 0, edges = 0;
    for (int v = 0; v < nv; ++v)
      if (alive(s, v)) {
        ++alive_n;
        edges += degree(s, v);
      }
    edges /= 2;
    if (alive_n < 4 || edges < 6) return false;
    for (int u = 0; u < nv; ++u)
      for (int v = u + 1; v < nv; ++v) {
        if (!alive(s, u) || !alive(s, v) || !edge(s, u, v)) continue;
        // Deletion.
        if (run(s & ~(std::uint64_t{1} << pair_id[u][v]))) return true;
        // Contraction of v into u.
        std::uint64_t t = s & ~(std::uint64_t{1} << v);
        for (int w = 0; w < nv; ++w) {
          if (w == v) continue;
          if (edge(s, v, w)) {
            t &= ~(std::uint64_t{1} << pair_id[v][w]);
            if (w != u) t |= std::uint64_t{1} << pair_id[u][w];
          }
        }
        if (run(t)) return true;
      }
    return false;
  }
};

}  // namespace

OuterplanarResult outerplanar(const UndirectedGraph& g) {
  if (g.vertices > 10 || g.size() > 16) throw ResourceLimit("outerplanarity search limited to 10 vertices, 16 edges");
  MinorSearch ms(g.vertices);
  std::uint64_t s = full_set(g.vertices);
  for (auto [u, v] : g.edges)
    if (u != v) s |= std::uint64_t{1} << ms.pair_id[u][v];
  OuterplanarResult r;
  if (ms.run(s)) {
    r.outerplanar = false;
    r.minor = ms.found;
  }
  return r;
}

// ---------------------------------------------------------------------------

UndirectedGraph triangulation_graph(const Triangulation& t) {
  UndirectedGraph g;
  g.vertices = t.polygon;
  for (int i = 0; i < t.polygon; ++i) {
    const int j = (i + 1) % t.polygon;
    g.edges.push_back({std::min(i, j), std::max(i, j)});
  }
  for (auto [u, v] : t.diagonals) g.edges.push_back({std::min(u, v), std::max(u, v)});
  return g;
}

Triangulation fan_triangulation(int polygon) {
  Triangulation t;
  t.polygon = polygon;
  for (int k = 2; k + 1 < polygon; ++k) t.diagonals.push_back({0, k});
  return t;
}

Tree t_ab_tree(int a, int b) {
  Tree t;
  t.n = a + b + 2;
  for (int i = 0; i < a + b; ++i) t.edges.push_back({i, i + 1});
  t.edges.push_back({a, a + b + 1});
  return t;
}

Tree ehat6_tree() { return {7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}}; }

Tree dhat_tree(int n) {
  if (n < 4) throw Error("affine D needs n >= 4");
  Tree t;
  t.n = n + 1;
  for (int v = 4; v < n; ++v) t.edges.push_back({v, v + 1});
  t.edges.push_back({0, 4});
  t.edges.push_back({1, 4});
  t.edges.push_back({2, n});
  t.edges.push_back({3, n});
  return t;
}

int TriangulationTree::index_of(Bits subtree) const {
  const auto it = std::find(subtrees.begin(), subtrees.end(), subtree);
  return it == subtrees.end() ? -1 : static_cast<int>(it - subtrees.begin());
}

namespace {

bool connected_in(const std::vector<std::vector<int>>& adj, Bits mask) {
  if (mask == 0) return false;
  Bits seen = bit(lowest(mask));
  std::vector<int> stack{lowest(mask)};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (contains(mask, w) && !contains(seen, w)) {
        seen |= bit(w);
        stack.push_back(w);
      }
  }
  return seen == mask;
}

int edge_index(const UndirectedGraph& g, int u, int v) {
  const auto key = std::make_pair(std::min(u, v), std::max(u, v));
  for (int e = 0; e < g.size(); ++e)
    if (std::make_pair(std::min(g.edges[e].first, g.edges[e].second),
                       std::max(g.edges[e].first, g.edges[e].second)) == key)
      return e;
  return -1;
}

}  // namespace

TriangulationTree tree_of_triangulation(const Triangulation& t) {
  TriangulationTree tt;
  tt.triangulation = t;
  tt.graph = triangulation_graph(t);
  const int nv = t.polygon;
  if (tt.graph.size() != 2 * nv - 3) throw ValidationError("not a triangulated polygon");
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      for (int k = j + 1; k < nv; ++k)
        if (edge_index(tt.graph, i, j) >= 0 && edge_index(tt.graph, j, k) >= 0 && edge_index(tt.graph, i, k) >= 0)
          tt.triangles.push_back({i, j, k});
  const int nt = static_cast<int>(tt.triangles.size());
  if (nt != nv - 2) throw ValidationError("diagonals cross or repeat");
  if (nt > 24) throw ResourceLimit("triangulation tree limited to 24 triangles");
  tt.adjacency.assign(nt, {});
  for (int a = 0; a < nt; ++a)
    for (int b = a + 1; b < nt; ++b) {
      int common = 0;
      for (int x : tt.triangles[a])
        for (int y : tt.triangles[b]) common += x == y;
      if (common == 2) {
        tt.adjacency[a].push_back(b);
        tt.adjacency[b].push_back(a);
      }
    }
  for (Bits s = 1; s <= full_set(nt); ++s)
    if (connected_in(tt.adjacency, s)) tt.subtrees.push_back(s);
  std::stable_sort(tt.subtrees.begin(), tt.subtrees.end(),
                   [](Bits a, Bits b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
  for (Bits s : tt.subtrees) {
    std::map<std::pair<int, int>, int> uses;
    for (int f : elements(s)) {
      const auto& tr = tt.triangles[f];
      ++uses[{tr[0], tr[1]}];
      ++uses[{tr[1], tr[2]}];
      ++uses[{tr[0], tr[2]}];
    }
    std::set<int> verts;
    std::set<std::pair<int, int>> boundary;
    for (auto [e, c] : uses)
      if (c == 1) {
        boundary.insert(e);
        verts.insert(e.first);
        verts.insert(e.second);
      }
    // The boundary of a union of faces of a convex polygon visits its
    // vertices in polygon order; positive is the increasing direction.
    const std::vector<int> vs(verts.begin(), verts.end());
    SignedSet c;
    std::set<std::pair<int, int>> expect;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      expect.insert({vs[k], vs[k + 1]});
      c.plus |= bit(edge_index(tt.graph, vs[k], vs[k + 1]));
    }
    expect.insert({vs.front(), vs.back()});
    c.minus |= bit(edge_index(tt.graph, vs.front(), vs.back()));
    if (expect != boundary) throw Error("subtree boundary is not a polygon-ordered cycle");
    tt.cycle.push_back(c);
  }
  return tt;
}

Realized triangulation_from_tree(const Tree& tree) {
  const int nt = tree.n;
  std::vector<std::vector<int>> adj(nt);
  for (auto [u, v] : tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (static_cast<int>(tree.edges.size()) != nt - 1) throw ValidationError("not a tree");
  std::vector<std::array<int, 3>> tri(nt);
  std::vector<std::vector<std::pair<int, int>>> free_edges(nt);
  std::vector<char> done(nt, 0);
  int next_vertex = 3;
  tri[0] = {0, 1, 2};
  free_edges[0] = {{0, 1}, {1, 2}, {2, 0}};
  done[0] = 1;
  std::queue<int> q;
  q.push(0);
  int placed = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    std::size_t slot = 0;
    for (int w : adj[u]) {
      if (done[w]) continue;
      if (slot >= free_edges[u].size()) throw ValidationError("tree degree exceeds 3");
      auto [a, b] = free_edges[u][slot++];
      const int c = next_vertex++;
      tri[w] = {a, b, c};
      free_edges[w] = {{a, c}, {c, b}};
      done[w] = 1;
      ++placed;
      q.push(w);
    }
  }
  if (placed != nt) throw ValidationError("tree is disconnected");
  // Boundary edges lie in exactly one triangle; walk them to fix positions.
  std::map<std::pair<int, int>, int> uses;
  for (const auto& t : tri)
    for (int k = 0; k < 3; ++k) {
      const int x = t[k], y = t[(k + 1) % 3];
      ++uses[{std::min(x, y), std::max(x, y)}];
    }
  const int nv = nt + 2;
  std::vector<std::vector<int>> bnd(nv);
  for (auto [e, c] : uses)
    if (c == 1) {
      bnd[e.first].push_back(e.second);
      bnd[e.second].push_back(e.first);
    }
  std::vector<int> pos(nv, -1);
  int prev = -1, cur = 0;
  for (int k = 0; k < nv; ++k) {
    if (bnd[cur].size() != 2) throw Error("boundary is not a cycle");
    pos[cur] = k;
    const int nxt = bnd[cur][0] != prev ? bnd[cur][0] : bnd[cur][1];
    prev = cur;
    cur = nxt;
  }
  if (cur != 0 || std::count(pos.begin(), pos.end(), -1) != 0) throw Error("boundary walk failed");
  Triangulation t;
  t.polygon = nv;
  for (auto [e, c] : uses)
    if (c == 2) t.diagonals.push_back({std::min(pos[e.first], pos[e.second]), std::max(pos[e.first], pos[e.second])});
  std::sort(t.diagonals.begin(), t.diagonals.end());
  Realized r;
  r.tt = tree_of_triangulation(t);
  for (int node = 0; node < nt; ++node) {
    std::array<int, 3> p{pos[tri[node][0]], pos[tri[node][1]], pos[tri[node][2]]};
    std::sort(p.begin(), p.end());
    const auto it = std::find(r.tt.triangles.begin(), r.tt.triangles.end(), p);
    r.triangle_of_node.push_back(static_cast<int>(it - r.tt.triangles.begin()));
  }
  return r;
}

std::vector<mpq_class> labels_on_triangles(const Realized& r, const std::vector<mpq_class>& node_labels) {
  std::vector<mpq_class> out(node_labels.size());
  for (std::size_t v = 0; v < node_labels.size(); ++v) out[r.triangle_of_node[v]] = node_labels[v];
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Triple {
  int t1, t2, t3;
};

std::vector<Triple> las_vergnas_triples(const TriangulationTree& tt) {
  std::vector<Triple> out;
  for (int i = 0; i < static_cast<int>(tt.subtrees.size()); ++i) {
    const Bits s = tt.subtrees[i];
    for (int u : elements(s))
      for (int v : tt.adjacency[u]) {
        if (v < u || !contains(s, v)) continue;
        // Component of u after cutting the tree edge uv.
        Bits side = bit(u);
        std::vector<int> stack{u};
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          for (int y : tt.adjacency[x])
            if (contains(s, y) && !contains(side, y) && !(x == u && y == v)) {
              side |= bit(y);
              stack.push_back(y);
            }
        }
        out.push_back({tt.index_of(side), i, tt.index_of(s & ~side)});
      }
  }
  return out;
}

bool bad(const Gamma& g, const Triple& t) {
  return g[t.t2] != Sign::Zero && g[t.t2] != g[t.t1] && g[t.t2] != g[t.t3];
}

}  // namespace

bool is_g_colocalization(const TriangulationTree& tt, const Gamma& gamma) {
  if (std::any_of(gamma.begin(), gamma.end(), [](Sign s) { return s == Sign::Zero; })) return false;
  for (const auto& t : las_vergnas_triples(tt))
    if (bad(gamma, t)) return false;
  return true;
}

SignMap gamma_to_sigma(const TriangulationTree& tt, const OrientedMatroid& m, const Gamma& gamma) {
  SignMap sigma(m.num_circuits(), Sign::Zero);
  if (static_cast<int>(tt.subtrees.size()) != m.num_circuits()) throw Error("subtrees and circuits differ in number");
  for (std::size_t i = 0; i < tt.subtrees.size(); ++i) {
    const auto f = m.find_circuit(tt.cycle[i]);
    if (!f) throw Error("subtree boundary is not a circuit");
    sigma[f->first] = gamma[i] * f->second;
  }
  return sigma;
}

std::vector<Gamma> enumerate_g_colocalizations(const TriangulationTree& tt, const Budget& budget) {
  const int k = static_cast<int>(tt.subtrees.size());
  std::vector<std::vector<Triple>> at(k);
  for (const auto& t : las_vergnas_triples(tt)) at[t.t2].push_back(t);
  std::vector<Gamma> out;
  Gamma g(k, Sign::Zero);
  std::uint64_t nodes = 0;
  // Subtrees are sorted by size, so both parts of a triple precede its union.
  std::function<void(int)> rec = [&](int i) {
    if ((++nodes & 4095) == 0) budget.check_time();
    if (i == k) {
      out.push_back(g);
      if (out.size() > budget.max_colocalizations) throw ResourceLimit("colocalization cap reached");
      return;
    }
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      g[i] = s;
      if (std::none_of(at[i].begin(), at[i].end(), [&](const Triple& t) { return bad(g, t); })) rec(i + 1);
    }
    g[i] = Sign::Zero;
  };
  rec(0);
  return out;
}

bool is_coherent(const TriangulationTree& tt, const Gamma& gamma) {
  const int nt = static_cast<int>(tt.triangles.size());
  std::vector<SignConstraint> rows;
  for (std::size_t i = 0; i < tt.subtrees.size(); ++i) {
    std::vector<mpq_class> c(nt, 0);
    for (int f : elements(tt.subtrees[i])) c[f] = 1;
    rows.push_back({std::move(c), gamma[i]});
  }
  return strict_sign_feasibility(rows, nt).has_value();
}

bool is_coherent(const OrientedMatroid& m, const SignMap& sigma) {
  std::vector<SignConstraint> rows;
  for (int i = 0; i < m.num_circuits(); ++i) {
    std::vector<mpq_class> c(m.size(), 0);
    for (int e : elements(m.circuits()[i].plus)) c[e] = 1;
    for (int e : elements(m.circuits()[i].minus)) c[e] = -1;
    rows.push_back({std::move(c), sigma[i]});
  }
  return strict_sign_feasibility(rows, m.size()).has_value();
}

bool is_coherent(const OrientedMatroid& m, const SignMap& sigma, const VectorConfiguration& v) {
  std::vector<SignConstraint> rows;
  for (int i = 0; i < m.num_circuits(); ++i) {
    const auto& x = m.circuits()[i];
    auto c = dependence(v, x.support());
    for (int e : elements(x.support())) {
      const Sign want = x.at(e);
      const Sign got = c[e] > 0 ? Sign::Plus : c[e] < 0 ? Sign::Minus : Sign::Zero;
      if (got != want) throw Error("dependence signs disagree with the circuit");
    }
    rows.push_back({std::move(c), sigma[i]});
  }
  return strict_sign_feasibility(rows, m.size()).has_value();
}

AllCoherentReport all_coherent_check(const TriangulationTree& tt, const Budget& budget) {
  AllCoherentReport r;
  for (const auto& g : enumerate_g_colocalizations(tt, budget)) {
    ++r.colocalizations;
    if (is_coherent(tt, g)) ++r.coherent;
  }
  return r;
}

mpz_class coherent_count(int a, int b) {
  const int n = a + b + 2;
  mpz_class fa = 1, fb = 1;
  for (int k = n - a + 1; k <= n; ++k) fa *= k;
  for (int k = n - b + 1; k <= n; ++k) fb *= k;
  return 2 * (n + 1) * fa * fb;
}

Hyperplanes arrangement_Aab(int a, int b) {
  const int n = a + b + 2, z = n - 1;
  auto x = [&](int i) { return i + a; };
  Hyperplanes h;
  std::vector<int> v(n, 0);
  v[z] = 1;
  h.push_back(v);
  for (int i = -a; i <= b; ++i)
    for (int j = i; j <= b; ++j) {
      std::vector<int> w(n, 0);
      w[x(j)] += 1;
      if (i > -a) w[x(i - 1)] -= 1;
      h.push_back(w);
      if (i <= 0 && j >= 0) {
        w[z] = 1;
        h.push_back(w);
      }
    }
  return h;
}

Hyperplanes arrangement_Aab_literal(int a, int b) {
  const int n = a + b + 2, z = n - 1;
  auto x = [&](int i) { return i + a; };
  std::set<std::vector<int>> h;
  std::vector<int> v(n, 0);
  v[z] = 1;
  h.insert(v);
  for (int i = -a; i <= b; ++i) {
    std::vector<int> w(n, 0);
    w[x(i)] = 1;
    h.insert(w);
  }
  for (int i = -a; i <= b; ++i)
    for (int j = i + 1; j <= b; ++j) {
      std::vector<int> w(n, 0);
      w[x(j)] = 1;
      w[x(i)] = -1;
      h.insert(w);
    }
  for (int i = -a; i <= 0; ++i)
    for (int j = 0; j <= b; ++j) {
      std::vector<int> w(n, 0);
      w[x(j)] += 1;
      w[x(i)] -= 1;
      w[z] += 1;
      h.insert(w);
    }
  return {h.begin(), h.end()};
}

mpz_class count_regions(const Hyperplanes& h) {
  if (h.size() > 24) throw ResourceLimit("region count limited to 24 hyperplanes");
  const int n = h.empty() ? 0 : static_cast<int>(h[0].size());
  // Whitney: r = sum over subsets S of (-1)^(|S| - rank S), walked with an
  // incremental echelon basis.
  mpz_class total = 0;
  std::function<void(std::size_t, int, int, std::vector<std::vector<mpq_class>>&)> rec =
      [&](std::size_t i, int size, int rank, std::vector<std::vector<mpq_class>>& basis) {
        if (i == h.size()) {
          total += (size - rank) % 2 == 0 ? 1 : -1;
          return;
        }
        rec(i + 1, size, rank, basis);
        std::vector<mpq_class> v(h[i].begin(), h[i].end());
        for (const auto& b : basis) {
          int p = 0;
          while (b[p] == 0) ++p;
          if (v[p] != 0) {
            const mpq_class f = v[p] / b[p];
            for (int k = 0; k < n; ++k) v[k] -= f * b[k];
          }
        }
        const bool independent = std::any_of(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
        if (independent) basis.push_back(v);
        rec(i + 1, size + 1, rank + (independent ? 1 : 0), basis);
        if (independent) basis.pop_back();
      };
  std::vector<std::vector<mpq_class>> basis;
  rec(0, 0, 0, basis);
  return total;
}

std::vector<Bits> zero_subtrees(const TriangulationTree& tt, const std::vector<mpq_class>& labels) {
  std::vector<Bits> out;
  for (Bits s : tt.subtrees) {
    mpq_class sum = 0;
    for (int f : elements(s)) sum += labels[f];
    if (sum == 0) out.push_back(s);
  }
  return out;
}

Gamma gamma_from_labels(const TriangulationTree& tt, const std::vector<mpq_class>& labels,
                        const std::vector<Sign>& zero_signs) {
  Gamma g;
  std::size_t z = 0;
  for (Bits s : tt.subtrees) {
    mpq_class sum = 0;
    for (int f : elements(s)) sum += labels[f];
    if (sum > 0)
      g.push_back(Sign::Plus);
    else if (sum < 0)
      g.push_back(Sign::Minus);
    else
      g.push_back(z < zero_signs.size() ? zero_signs[z++] : Sign::Zero);
  }
  return g;
}

std::vector<mpq_class> ehat6_labels() { return {3, -2, 1, -2, 1, -2, 1}; }

std::vector<mpq_class> dhat_labels(int n) {
  const int u = n - 3;
  if (u % 2 != 0) throw Error("odd-numerator labels need an even number of interior nodes");
  const long den = 1024;
  std::vector<mpq_class> out(4, 1);
  long used = 0;
  for (int k = 0; k + 1 < u; ++k) {
    const long num = -(2 * k + 1);
    used += num;
    out.push_back(mpq_class(num, den));
  }
  out.push_back(mpq_class(-2 * den - used, den));
  return out;
}

std::optional<Gamma> noncoherent_perturbation(const TriangulationTree& tt, const std::vector<mpq_class>& labels) {
  const auto zs = zero_subtrees(tt, labels);
  if (zs.size() > 16) throw ResourceLimit("too many zero subtrees");
  for (Bits mask = 0; mask < bit(static_cast<int>(zs.size())); ++mask) {
    std::vector<Sign> signs;
    for (std::size_t k = 0; k < zs.size(); ++k) signs.push_back(contains(mask, static_cast<int>(k)) ? Sign::Minus : Sign::Plus);
    const auto g = gamma_from_labels(tt, labels, signs);
    if (is_g_colocalization(tt, g) && !is_coherent(tt, g)) return g;
  }
  return std::nullopt;
}

}  // namespace omsep
