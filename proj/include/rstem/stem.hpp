#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rstem/graph.hpp"
#include "rstem/tree.hpp"

namespace rstem {

// Leaf-branch path of a leaf x: the tree path from x towards its nearest
// branch vertex, which is excluded.
struct LeafPath {
  Vertex leaf = 0;
  Vertex attach = 0;              // nearest branch vertex y_x
  std::vector<Vertex> vertices;   // x first; the last one is adjacent to `attach`

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex attach_neighbor() const { return vertices.back(); }
};

// Leaves, branch vertices, stem and reducible stem of a spanning tree.
//
// Degenerate reducible stems: no branch vertex gives an empty reducible stem,
// a single branch vertex gives that vertex alone; both have no leaves.
struct StemDecomposition {
  std::vector<int> tree_degree;
  std::vector<Vertex> leaves;
  std::vector<Vertex> branch_vertices;
  std::vector<Vertex> stem_vertices;
  std::vector<Vertex> rstem_vertices;
  std::vector<char> in_rstem;
  std::vector<int> rstem_degree;  // 0 outside the reducible stem
  std::vector<Vertex> rstem_leaves;
  std::vector<Vertex> rstem_branch_vertices;  // B(R_Stem): reducible-stem degree >= 3
  std::vector<LeafPath> leaf_paths;           // one per leaf, ascending leaf id; empty without branch vertices
  std::vector<int> leaf_path_index;           // per vertex: index into leaf_paths if it is that path's leaf, else -1

  bool in_reducible_stem(Vertex v) const { return in_rstem[v] != 0; }

  const LeafPath* leaf_path(Vertex leaf) const {
    int idx = leaf_path_index[leaf];
    return idx < 0 ? nullptr : &leaf_paths[static_cast<std::size_t>(idx)];
  }

  // Leaf-branch paths attached to a given vertex.
  std::vector<const LeafPath*> paths_at(Vertex attach) const {
    std::vector<const LeafPath*> out;
    for (const auto& p : leaf_paths)
      if (p.attach == attach) out.push_back(&p);
    return out;
  }
};

inline StemDecomposition decompose(const SpanningTree& t) {
  const int n = t.n();
  StemDecomposition d;
  d.tree_degree.resize(static_cast<std::size_t>(n));
  d.in_rstem.assign(static_cast<std::size_t>(n), 0);
  d.rstem_degree.assign(static_cast<std::size_t>(n), 0);
  d.leaf_path_index.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    d.tree_degree[v] = t.degree(v);
    if (d.tree_degree[v] == 1)
      d.leaves.push_back(v);
    else
      d.stem_vertices.push_back(v);
    if (d.tree_degree[v] >= 3) d.branch_vertices.push_back(v);
  }

  if (d.branch_vertices.size() == 1) {
    d.in_rstem[d.branch_vertices.front()] = 1;
  } else if (d.branch_vertices.size() >= 2) {
    // Peel non-branch leaves until only the minimal subtree spanning B(T) remains.
    std::vector<int> deg = d.tree_degree;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
      if (deg[v] <= 1 && d.tree_degree[v] < 3) queue.push_back(v);
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      if (removed[v]) continue;
      removed[v] = 1;
      for (Vertex u : t.neighbors(v)) {
        if (removed[u]) continue;
        if (--deg[u] == 1 && d.tree_degree[u] < 3) queue.push_back(u);
      }
    }
    for (Vertex v = 0; v < n; ++v) d.in_rstem[v] = removed[v] ? 0 : 1;
  }

  for (Vertex v = 0; v < n; ++v) {
    if (!d.in_rstem[v]) continue;
    d.rstem_vertices.push_back(v);
    for (Vertex u : t.neighbors(v))
      if (d.in_rstem[u]) ++d.rstem_degree[v];
  }
  if (d.rstem_vertices.size() >= 2) {
    for (Vertex v : d.rstem_vertices) {
      if (d.rstem_degree[v] == 1) d.rstem_leaves.push_back(v);
      if (d.rstem_degree[v] >= 3) d.rstem_branch_vertices.push_back(v);
    }
  }

  if (!d.branch_vertices.empty()) {
    for (Vertex leaf : d.leaves) {
      LeafPath p;
      p.leaf = leaf;
      Vertex prev = -1, cur = leaf;
      while (d.tree_degree[cur] < 3) {
        p.vertices.push_back(cur);
        Vertex next = -1;
        for (Vertex u : t.neighbors(cur))
          if (u != prev) {
            next = u;
            break;
          }
        prev = cur;
        cur = next;
      }
      p.attach = cur;
      d.leaf_path_index[leaf] = static_cast<int>(d.leaf_paths.size());
      d.leaf_paths.push_back(std::move(p));
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Witness leaves y_i, z_i at each reducible-stem leaf x_i.

struct RstemLeafWitnesses {
  Vertex x = 0;
  std::vector<Vertex> attached_leaves;  // leaves whose leaf-branch path attaches to x
  std::vector<Vertex> qualifying;       // attached leaves with no G-neighbor in R_Stem - {x}; longest path first
  std::optional<Vertex> y;
  std::optional<Vertex> z;

  bool deficient() const { return !y || !z; }
};

struct WitnessSelection {
  std::vector<RstemLeafWitnesses> per_leaf;  // one per x_i, ascending x
  std::optional<Vertex> w;                   // smallest-id vertex of B(R_Stem)
  std::vector<Vertex> u1;                    // {y_i, z_i} over non-deficient x_i, sorted
  std::vector<Vertex> u;                     // u1 plus w, sorted

  int sum_selected_lengths(const StemDecomposition& d) const {
    int total = 0;
    for (const auto& pl : per_leaf)
      if (!pl.deficient()) total += d.leaf_path(*pl.y)->length() + d.leaf_path(*pl.z)->length();
    return total;
  }
};

// True when leaf y has no G-neighbor in V(R_Stem) - {x}.
inline bool leaf_qualifies(const Graph& g, const StemDecomposition& d, Vertex y, Vertex x) {
  for (Vertex u : g.neighbors(y))
    if (u != x && d.in_reducible_stem(u)) return false;
  return true;
}

// Works for any tree; `w` is empty when the reducible stem has no branch vertex.
inline WitnessSelection compute_witnesses(const Graph& g, const StemDecomposition& d) {
  WitnessSelection sel;
  for (Vertex x : d.rstem_leaves) {
    RstemLeafWitnesses pl;
    pl.x = x;
    for (const auto& p : d.leaf_paths) {
      if (p.attach != x) continue;
      pl.attached_leaves.push_back(p.leaf);
      if (leaf_qualifies(g, d, p.leaf, x)) pl.qualifying.push_back(p.leaf);
    }
    std::stable_sort(pl.qualifying.begin(), pl.qualifying.end(), [&](Vertex a, Vertex b) {
      return d.leaf_path(a)->length() > d.leaf_path(b)->length();
    });
    if (pl.qualifying.size() >= 2) {
      pl.y = pl.qualifying[0];
      pl.z = pl.qualifying[1];
      sel.u1.push_back(*pl.y);
      sel.u1.push_back(*pl.z);
    }
    sel.per_leaf.push_back(std::move(pl));
  }
  if (!d.rstem_branch_vertices.empty()) sel.w = d.rstem_branch_vertices.front();
  std::sort(sel.u1.begin(), sel.u1.end());
  sel.u = sel.u1;
  if (sel.w) {
    sel.u.push_back(*sel.w);
    std::sort(sel.u.begin(), sel.u.end());
  }
  return sel;
}

inline WitnessSelection select_witnesses(const Graph& g, const SpanningTree& t) {
  const auto d = decompose(t);
  if (d.rstem_leaves.size() < 3 || d.rstem_branch_vertices.empty())
    throw Error(ErrorKind::NoBranchVertex, "reducible stem has " + std::to_string(d.rstem_leaves.size()) +
                                               " leaves; witness selection needs at least 3");
  return compute_witnesses(g, d);
}

// ---------------------------------------------------------------------------
// Lexicographic objective; smaller is better in every component.

struct ObjectiveVector {
  int c0 = 0;     // |L(R_Stem)|
  int c1 = 0;     // |R_Stem|
  int c2 = 0;     // |L(T)|
  int c3 = 0;     // sum of tree degrees over reducible-stem leaves
  int c4neg = 0;  // -S_T
  int c5neg = 0;  // -max reducible-stem degree over B(R_Stem)

  auto operator<=>(const ObjectiveVector&) const = default;

  std::string str() const {
    return "(" + std::to_string(c0) + ", " + std::to_string(c1) + ", " + std::to_string(c2) + ", " +
           std::to_string(c3) + ", " + std::to_string(c4neg) + ", " + std::to_string(c5neg) + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, const ObjectiveVector& o) { return os << o.str(); }

inline ObjectiveVector objective(const Graph& g, const StemDecomposition& d) {
  ObjectiveVector o;
  o.c0 = static_cast<int>(d.rstem_leaves.size());
  o.c1 = static_cast<int>(d.rstem_vertices.size());
  o.c2 = static_cast<int>(d.leaves.size());
  for (Vertex x : d.rstem_leaves) o.c3 += d.tree_degree[x];
  o.c4neg = -compute_witnesses(g, d).sum_selected_lengths(d);
  int best = 0;
  for (Vertex b : d.rstem_branch_vertices) best = std::max(best, d.rstem_degree[b]);
  o.c5neg = -best;
  return o;
}

inline ObjectiveVector objective(const Graph& g, const SpanningTree& t) { return objective(g, decompose(t)); }

}  // namespace rstem
