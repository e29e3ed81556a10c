#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rstem/claims.hpp"
#include "rstem/stem.hpp"
#include "rstem/tree.hpp"

namespace rstem {

enum class InitialStrategy { BFS, DFS };

inline const char* to_string(InitialStrategy s) { return s == InitialStrategy::BFS ? "bfs" : "dfs"; }

// Deterministic traversal tree; neighbors are visited in ascending order.
inline SpanningTree initial_tree(const Graph& g, InitialStrategy strategy, Vertex root = 0) {
  if (g.n() == 0) return SpanningTree(g, {});
  g.check_vertex(root);
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Edge> edges;
  seen[root] = 1;
  if (strategy == InitialStrategy::BFS) {
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          edges.emplace_back(u, v);
          queue.push_back(v);
        }
    }
  } else {
    // Iterative DFS that descends into the smallest unvisited neighbor first.
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      auto nb = g.neighbors(u);
      while (next < nb.size() && seen[nb[next]]) ++next;
      if (next == nb.size()) {
        stack.pop_back();
        continue;
      }
      Vertex v = nb[next++];
      seen[v] = 1;
      edges.emplace_back(u, v);
      stack.emplace_back(v, 0);
    }
  }
  if (static_cast<int>(edges.size()) != g.n() - 1) throw Error(ErrorKind::Disconnected, "host graph is not connected");
  return SpanningTree(g, std::move(edges));
}

enum class MoveKind {
  Exchange,              // add one non-tree edge, drop one edge of its cycle
  ReattachWitnessPair,   // two-edge rotation of a witness path keyed on y/z adjacency
  ReattachWitnessHub,    // two-edge rotation of a witness path keyed on y/w adjacency
  ShortcutWitnessPath,   // single reattachment of x_i^- to z_i or w
  SplitWitnessPath,      // two-edge split of a witness path between z_i and w
  BypassPathVertex,      // three-edge exchange routing z_i through a path vertex adjacent to w
  DetachDeficientLeaves, // relocate leaf paths of a deficient x_i onto R_Stem
};

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Exchange: return "exchange";
    case MoveKind::ReattachWitnessPair: return "reattach_witness_pair";
    case MoveKind::ReattachWitnessHub: return "reattach_witness_hub";
    case MoveKind::ShortcutWitnessPath: return "shortcut_witness_path";
    case MoveKind::SplitWitnessPath: return "split_witness_path";
    case MoveKind::BypassPathVertex: return "bypass_path_vertex";
    case MoveKind::DetachDeficientLeaves: return "detach_deficient_leaves";
  }
  return "?";
}

struct Move {
  MoveKind kind = MoveKind::Exchange;
  std::vector<Edge> add;     // non-tree host edges
  std::vector<Edge> remove;  // tree edges, as many as `add`
};

// nullopt when the move does not yield a spanning tree of the host.
inline std::optional<SpanningTree> apply_move(const SpanningTree& t, const Move& m) {
  if (m.add.size() != m.remove.size() || m.add.empty()) return std::nullopt;
  const Graph& g = t.host();
  std::vector<Edge> edges = t.edges();
  for (const Edge& r : m.remove) {
    auto it = std::lower_bound(edges.begin(), edges.end(), r);
    if (it == edges.end() || *it != r) return std::nullopt;
    edges.erase(it);
  }
  for (const Edge& a : m.add) {
    if (!g.has_edge(a.u, a.v) || t.has_edge(a.u, a.v)) return std::nullopt;
    if (std::find(edges.begin(), edges.end(), a) != edges.end()) return std::nullopt;
    edges.push_back(a);
  }
  return SpanningTree::try_make(g, std::move(edges));
}

namespace detail {

// Witness-path templates for one ordered witness pair (y, z) at x.
// The path runs y = bv[0], ..., bv[L-1] = x^-, so predecessors point towards y.
template <class Visit>
bool emit_witness_templates(const Graph& g, const StemDecomposition& d, Vertex x, Vertex y, Vertex z, Vertex w,
                            Visit&& visit) {
  const auto& bv = d.leaf_path(y)->vertices;
  const int len = static_cast<int>(bv.size());
  const Vertex xm = bv.back();
  const Edge cut_x(xm, x);

  for (int k = 1; k < len; ++k) {
    const Vertex v = bv[k], prev = bv[k - 1];
    if (!g.has_edge(v, y)) continue;
    if (g.has_edge(prev, z) && !visit(Move{MoveKind::ReattachWitnessPair, {Edge(v, y), Edge(z, prev)}, {Edge(v, prev), cut_x}}))
      return false;
    if (g.has_edge(prev, w) && !visit(Move{MoveKind::ReattachWitnessHub, {Edge(v, y), Edge(w, prev)}, {Edge(v, prev), cut_x}}))
      return false;
  }

  if (g.has_edge(xm, z) && !visit(Move{MoveKind::ShortcutWitnessPath, {Edge(xm, z)}, {cut_x}})) return false;
  if (g.has_edge(xm, w) && !visit(Move{MoveKind::ShortcutWitnessPath, {Edge(xm, w)}, {cut_x}})) return false;

  const Vertex z_attach = d.leaf_path(z)->attach_neighbor();
  for (int k = 1; k + 1 < len; ++k) {
    const Vertex v = bv[k], prev = bv[k - 1], next = bv[k + 1];
    if (!g.has_edge(v, z)) continue;
    if (g.has_edge(w, next) && !visit(Move{MoveKind::SplitWitnessPath, {Edge(v, z), Edge(w, next)}, {Edge(v, next), cut_x}}))
      return false;
    if (g.has_edge(w, prev) && !visit(Move{MoveKind::SplitWitnessPath, {Edge(v, z), Edge(w, prev)}, {Edge(v, prev), cut_x}}))
      return false;
    if (g.has_edge(v, w) && g.has_edge(prev, next) &&
        !visit(Move{MoveKind::BypassPathVertex,
                    {Edge(prev, next), Edge(v, z), Edge(v, w)},
                    {Edge(z_attach, x), Edge(v, prev), Edge(v, next)}}))
      return false;
  }
  return true;
}

}  // namespace detail

// Streams the neighborhood of t in deterministic order: all 1-exchanges
// (non-tree edges ascending, cycle edges along the tree path from the smaller
// endpoint), then witness-path templates, then deficient-leaf relocations.
// `visit` returns false to stop. Returns false if stopped early.
template <class Visit>
bool for_each_move(const Graph& g, const SpanningTree& t, const StemDecomposition& d, Visit&& visit) {
  for (const Edge& e : g.edges()) {
    if (t.has_edge(e.u, e.v)) continue;
    const auto path = t.path(e.u, e.v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!visit(Move{MoveKind::Exchange, {e}, {Edge(path[i], path[i + 1])}})) return false;
  }

  if (d.rstem_leaves.size() < 3 || d.rstem_branch_vertices.empty()) return true;
  const WitnessSelection sel = compute_witnesses(g, d);
  const Vertex w = *sel.w;

  for (const auto& pl : sel.per_leaf) {
    if (pl.deficient()) continue;
    if (!detail::emit_witness_templates(g, d, pl.x, *pl.y, *pl.z, w, visit)) return false;
    if (!detail::emit_witness_templates(g, d, pl.x, *pl.z, *pl.y, w, visit)) return false;
  }

  for (const auto& pl : sel.per_leaf) {
    if (!pl.deficient()) continue;
    auto relocation = [&](Vertex leaf) -> std::optional<std::pair<Edge, Edge>> {
      for (Vertex b : g.neighbors(leaf))
        if (b != pl.x && d.in_reducible_stem(b))
          return std::pair{Edge(leaf, b), Edge(pl.x, d.leaf_path(leaf)->attach_neighbor())};
      return std::nullopt;
    };
    // Keep one attached path and move every non-qualifying other.
    std::vector<Vertex> keep_choices = pl.qualifying.empty() ? pl.attached_leaves : pl.qualifying;
    for (Vertex keep : keep_choices) {
      Move m{MoveKind::DetachDeficientLeaves, {}, {}};
      for (Vertex leaf : pl.attached_leaves) {
        if (leaf == keep) continue;
        if (auto r = relocation(leaf)) {
          m.add.push_back(r->first);
          m.remove.push_back(r->second);
        }
      }
      if (m.add.size() + 1 == pl.attached_leaves.size() && !visit(std::move(m))) return false;
    }
  }
  return true;
}

inline std::vector<Move> neighborhood(const Graph& g, const SpanningTree& t) {
  std::vector<Move> out;
  const auto d = decompose(t);
  for_each_move(g, t, d, [&](Move m) {
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

struct Improvement {
  Move move;
  SpanningTree tree;
  ObjectiveVector value;
};

// First move in neighborhood order that strictly lowers the objective.
inline std::optional<Improvement> find_improvement(const Graph& g, const SpanningTree& t) {
  const auto d = decompose(t);
  const ObjectiveVector current = objective(g, d);
  std::optional<Improvement> found;
  for_each_move(g, t, d, [&](Move m) {
    auto next = apply_move(t, m);
    if (!next) return true;
    ObjectiveVector v = objective(g, *next);
    if (v < current) {
      found.emplace(Improvement{std::move(m), std::move(*next), v});
      return false;
    }
    return true;
  });
  return found;
}

inline std::optional<Move> improve_once(const Graph& g, const SpanningTree& t) {
  auto imp = find_improvement(g, t);
  if (!imp) return std::nullopt;
  return imp->move;
}

inline constexpr int kDefaultMaxSteps = 100'000;

struct OptimizeResult {
  SpanningTree tree;
  int steps = 0;
  bool fixed_point = false;  // false: step cap reached, tree is best-so-far
  ObjectiveVector value;
  std::vector<ObjectiveVector> trajectory;  // objective of every visited tree, start included
  std::vector<MoveKind> applied;            // kind of every accepted move
  ClaimReport claims;
};

inline OptimizeResult optimize(const Graph& g, SpanningTree t0, int max_steps = kDefaultMaxSteps) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "host graph is not connected");
  OptimizeResult r{std::move(t0), 0, false, {}, {}, {}, {}};
  r.value = objective(g, r.tree);
  r.trajectory.push_back(r.value);
  while (true) {
    if (r.steps >= max_steps) break;
    auto imp = find_improvement(g, r.tree);
    if (!imp) {
      r.fixed_point = true;
      break;
    }
    r.applied.push_back(imp->move.kind);
    r.tree = std::move(imp->tree);
    r.value = imp->value;
    r.trajectory.push_back(r.value);
    ++r.steps;
  }
  if (!r.fixed_point && !find_improvement(g, r.tree)) r.fixed_point = true;
  r.claims = verify_claims(g, r.tree);
  return r;
}

struct RestartResult {
  OptimizeResult best;
  InitialStrategy strategy = InitialStrategy::BFS;
  Vertex root = 0;
  int runs = 0;
};

// BFS and DFS starts from every root (in that order); keeps the smallest
// final objective. Stops early once a run reaches `stop_at_c0` or below.
inline RestartResult optimize_with_restarts(const Graph& g, int max_steps = kDefaultMaxSteps, int stop_at_c0 = -1,
                                            int max_roots = -1) {
  std::optional<RestartResult> best;
  const int roots = max_roots < 0 ? g.n() : std::min(g.n(), max_roots);
  int runs = 0;
  for (Vertex root = 0; root < std::max(roots, 1); ++root) {
    for (InitialStrategy s : {InitialStrategy::BFS, InitialStrategy::DFS}) {
      auto r = optimize(g, initial_tree(g, s, root), max_steps);
      ++runs;
      if (!best || r.value < best->best.value) best = RestartResult{std::move(r), s, root, 0};
      if (best->best.value.c0 <= stop_at_c0) {
        best->runs = runs;
        return std::move(*best);
      }
    }
  }
  best->runs = runs;
  return std::move(*best);
}

}  // namespace rstem
