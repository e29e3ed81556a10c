#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rstem/graph.hpp"

namespace rstem {

// All randomness in the project comes from this engine: std::mt19937_64
// seeded with splitmix64(seed). Integers and reals are derived from raw
// 64-bit outputs so that results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(splitmix64(seed)) {}

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Independent stream for the index-th sub-task of `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi], unbiased by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Sharpness constructions.
//
// Layout of example_H(m): six m-cliques R_1, H_1, R_2, H_2, R_3, H_3 in that
// order (vertices [2m(i-1), 2m(i-1)+m) for R_i, the next m for H_i), then
// x_1..x_3 at 6m..6m+2, then w at 6m+3.

struct HParams {
  int m = 1;
};

struct HLayout {
  int m;
  Vertex r(int i, int j) const { return 2 * m * (i - 1) + j; }      // i in 1..3, j in 0..m-1
  Vertex h(int i, int j) const { return 2 * m * (i - 1) + m + j; }
  Vertex x(int i) const { return 6 * m + (i - 1); }
  Vertex w() const { return 6 * m + 3; }
  int n() const { return 6 * m + 4; }
};

inline Graph example_H(HParams p) {
  if (p.m < 1) throw Error(ErrorKind::InvalidArgument, "example_H needs m >= 1");
  const HLayout L{p.m};
  std::vector<Edge> edges;
  for (int i = 1; i <= 3; ++i) {
    for (int a = 0; a < p.m; ++a)
      for (int b = a + 1; b < p.m; ++b) {
        edges.emplace_back(L.r(i, a), L.r(i, b));
        edges.emplace_back(L.h(i, a), L.h(i, b));
      }
    for (int a = 0; a < p.m; ++a) {
      edges.emplace_back(L.x(i), L.r(i, a));
      edges.emplace_back(L.x(i), L.h(i, a));
    }
    edges.emplace_back(L.x(i), L.w());
  }
  return Graph(L.n(), std::move(edges));
}

// Layout of example_G(l, m), k = 2l+1: for i = 0..k the m-cliques R_i then
// H_i (vertices [2mi, 2mi+m) and [2mi+m, 2m(i+1))), then x_0..x_k, then the
// clique D = {w_0..w_l}.

struct GParams {
  int l = 1;
  int m = 1;
  int k() const { return 2 * l + 1; }
};

struct GLayout {
  int l;
  int m;
  int k() const { return 2 * l + 1; }
  Vertex r(int i, int j) const { return 2 * m * i + j; }  // i in 0..k
  Vertex h(int i, int j) const { return 2 * m * i + m + j; }
  Vertex x(int i) const { return 2 * m * (k() + 1) + i; }
  Vertex w(int i) const { return (2 * m + 1) * (k() + 1) + i; }  // i in 0..l
  int n() const { return (k() + 1) * (2 * m + 1) + (l + 1); }
};

inline Graph example_G(GParams p) {
  if (p.l < 1 || p.m < 1) throw Error(ErrorKind::InvalidArgument, "example_G needs l >= 1 and m >= 1");
  const GLayout L{p.l, p.m};
  const int k = L.k();
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) {
    for (int a = 0; a < p.m; ++a)
      for (int b = a + 1; b < p.m; ++b) {
        edges.emplace_back(L.r(i, a), L.r(i, b));
        edges.emplace_back(L.h(i, a), L.h(i, b));
      }
    for (int a = 0; a < p.m; ++a) {
      edges.emplace_back(L.x(i), L.r(i, a));
      edges.emplace_back(L.x(i), L.h(i, a));
    }
  }
  for (int a = 0; a <= p.l; ++a)
    for (int b = a + 1; b <= p.l; ++b) edges.emplace_back(L.w(a), L.w(b));
  for (int i = 0; i <= p.l; ++i) {
    edges.emplace_back(L.w(i), L.x(2 * i));
    edges.emplace_back(L.w(i), L.x(2 * i + 1));
  }
  return Graph(L.n(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Random instances.

inline Graph random_graph(int n, double edge_probability, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_probability)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline constexpr int kDefaultRejectionLimit = 100'000;

// Erdős–Rényi G(n, p) conditioned on connectivity by rejection.
inline Graph random_connected(int n, double edge_probability, std::uint64_t seed,
                              int max_tries = kDefaultRejectionLimit) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "random_connected needs n >= 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "edge probability outside [0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = random_graph(n, edge_probability, rng);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::RejectionLimit, "no connected sample in " + std::to_string(max_tries) + " tries (n=" +
                                             std::to_string(n) + ", p=" + std::to_string(edge_probability) + ")");
}

// Uniform labeled tree via a random Prüfer sequence.
inline Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "random_tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge(0, 1)});
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<int>(rng.uniform_int(0, n - 1));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (Vertex leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
  }
  Vertex a = -1, b = -1;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

inline Graph random_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n, rng);
}

// Vertices are the edges of g in ascending order; two are adjacent when the
// edges share an endpoint. Always claw-free.
inline Graph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorKind::EmptyEdgeSet, "line graph of an edgeless graph");
  const auto& es = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].has(es[j].u) || es[i].has(es[j].v)) out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(g.edge_count(), std::move(out));
}

// Random connected K_{1,4}-free graph by rejection on random_connected.
inline Graph random_k14_free(int n, double edge_probability, std::uint64_t seed,
                             int max_tries = kDefaultRejectionLimit) {
  Rng outer(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = random_connected(n, edge_probability, outer.next());
    if (is_k1t_free(g, 4)) return g;
  }
  throw Error(ErrorKind::RejectionLimit, "no K_{1,4}-free sample in " + std::to_string(max_tries) + " tries");
}

// Classic families used throughout the tests and CLI.
inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, std::move(e));
}

}  // namespace rstem
