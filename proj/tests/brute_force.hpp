#pragma once

// Exhaustive reference computations and sampling helpers for the tests.
// Nothing here reuses the library's search code; inputs are expected to be tiny.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rstem/generators.hpp"
#include "rstem/graph.hpp"
#include "rstem/tree.hpp"

namespace rstem::testing {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline bool far_apart(const std::vector<std::vector<int>>& d, std::uint32_t mask, int n, int m) {
  for (int a = 0; a < n; ++a) {
    if (!(mask >> a & 1u)) continue;
    for (int b = a + 1; b < n; ++b)
      if ((mask >> b & 1u) && d[a][b] < m) return false;
  }
  return true;
}

inline int brute_alpha(const Graph& g, int m) {
  const int n = g.n();
  const auto d = floyd_warshall(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (far_apart(d, mask, n, m)) best = std::max(best, __builtin_popcount(mask));
  return best;
}

// nullopt is +infinity.
inline std::optional<int> brute_sigma(const Graph& g, int p, int m) {
  const int n = g.n();
  const auto d = floyd_warshall(g);
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != p || !far_apart(d, mask, n, m)) continue;
    int sum = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) sum += g.degree(v);
    if (!best || sum < *best) best = sum;
  }
  return best;
}

inline bool brute_has_induced_star(const Graph& g, int t) {
  for (int c = 0; c < g.n(); ++c) {
    std::vector<int> nb(g.neighbors(c).begin(), g.neighbors(c).end());
    const int k = static_cast<int>(nb.size());
    if (k > 20) continue;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) != t) continue;
      bool independent = true;
      for (int a = 0; a < k && independent; ++a)
        for (int b = a + 1; b < k && independent; ++b)
          if ((mask >> a & 1u) && (mask >> b & 1u) && g.has_edge(nb[a], nb[b])) independent = false;
      if (independent) return true;
    }
  }
  return false;
}

// Every (n-1)-edge acyclic subset, by bitmask over the edge list.
inline std::vector<std::vector<Edge>> brute_spanning_trees(const Graph& g) {
  const int n = g.n();
  const auto& es = g.edges();
  const int m = static_cast<int>(es.size());
  std::vector<std::vector<Edge>> out;
  if (n <= 1) return {{}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) != n - 1) continue;
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = v;
    bool acyclic = true;
    std::vector<Edge> chosen;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1u)) continue;
      int a = comp[es[i].u], b = comp[es[i].v];
      if (a == b) {
        acyclic = false;
        break;
      }
      for (int& c : comp)
        if (c == b) c = a;
      chosen.push_back(es[i]);
    }
    if (acyclic) out.push_back(std::move(chosen));
  }
  return out;
}

// Reducible stem straight from the definition: union of tree paths between
// pairs of branch vertices; a lone branch vertex stands alone.
inline std::vector<Vertex> brute_rstem(const SpanningTree& t) {
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < t.n(); ++v)
    if (t.degree(v) >= 3) branch.push_back(v);
  if (branch.size() <= 1) return branch;
  std::vector<char> in(t.n(), 0);
  for (std::size_t i = 0; i < branch.size(); ++i)
    for (std::size_t j = i + 1; j < branch.size(); ++j)
      for (Vertex v : t.path(branch[i], branch[j])) in[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.n(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

// Reducible-stem leaves from brute_rstem: members with exactly one tree
// neighbor inside it (when it has at least two vertices).
inline int brute_rstem_leaf_count(const SpanningTree& t) {
  const auto r = brute_rstem(t);
  if (r.size() < 2) return 0;
  int leaves = 0;
  for (Vertex v : r) {
    int inside = 0;
    for (Vertex u : t.neighbors(v))
      if (std::binary_search(r.begin(), r.end(), u)) ++inside;
    if (inside == 1) ++leaves;
  }
  return leaves;
}

// Uniformly shuffled Kruskal; not uniform over trees, only a varied sample.
inline SpanningTree random_spanning_tree(const Graph& g, Rng& rng) {
  std::vector<Edge> es = g.edges();
  for (std::size_t i = es.size(); i > 1; --i)
    std::swap(es[i - 1], es[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
  std::vector<int> comp(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) comp[v] = v;
  std::vector<Edge> chosen;
  for (const Edge& e : es) {
    int a = comp[e.u], b = comp[e.v];
    if (a == b) continue;
    for (int& c : comp)
      if (c == b) c = a;
    chosen.push_back(e);
  }
  return SpanningTree(g, std::move(chosen));
}

// Random labeled tree plus `extra` random chords; sparse hosts keep many
// reducible-stem leaves at local optima.
inline Graph tree_plus_edges(int n, int extra, Rng& rng) {
  Graph t = random_tree(n, rng);
  std::vector<Edge> es = t.edges();
  for (int tries = 0; extra > 0 && tries < 50 * (extra + 1); ++tries) {
    const Vertex a = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    const Vertex b = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    if (a == b) continue;
    const Edge e(a, b);
    if (std::find(es.begin(), es.end(), e) != es.end()) continue;
    es.push_back(e);
    --extra;
  }
  return Graph(n, std::move(es));
}

}  // namespace rstem::testing
