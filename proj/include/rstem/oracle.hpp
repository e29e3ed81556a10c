#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rstem/stem.hpp"
#include "rstem/tree.hpp"

namespace rstem {

struct EnumerationBudget {
  std::uint64_t max_trees = 1'000'000;
  double max_seconds = 60.0;

  void validate() const {
    if (max_trees == 0 || !(max_seconds > 0)) throw Error(ErrorKind::InvalidArgument, "enumeration budget must be positive");
  }
};

struct EnumerationResult {
  std::uint64_t count = 0;
  bool budget_exceeded = false;  // count is partial
  bool stopped = false;          // the visitor asked to stop
};

namespace detail {

// Union-find with undo; union by size, no path compression.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

}  // namespace detail

// Visits every spanning tree exactly once. Edges are decided in ascending
// order: include when it joins two components, exclude only when the
// remaining undecided edges still connect the graph, so every branch ends
// in a tree. `visit(const SpanningTree&)` returns false to stop.
template <class Visit>
EnumerationResult enumerate_spanning_trees(const Graph& g, const EnumerationBudget& budget, Visit&& visit) {
  budget.validate();
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "host graph is not connected");
  EnumerationResult result;
  const int n = g.n();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t nodes = 0;
  bool halt = false;

  detail::RollbackSets sets(n);
  std::vector<Edge> chosen;
  chosen.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));

  // Whether chosen edges plus edges[from..m) connect every vertex.
  auto spans_with_rest = [&](int from) {
    detail::DisjointSets ds(n);
    int comps = n;
    for (const Edge& e : chosen)
      if (ds.unite(e.u, e.v)) --comps;
    for (int j = from; j < m && comps > 1; ++j)
      if (ds.unite(edges[j].u, edges[j].v)) --comps;
    return comps <= 1;
  };

  auto out_of_time = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.max_seconds;
  };

  auto recurse = [&](auto&& self, int i) -> void {
    if (halt) return;
    if ((++nodes & 1023u) == 0 && out_of_time()) {
      result.budget_exceeded = true;
      halt = true;
      return;
    }
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (result.count >= budget.max_trees) {
        result.budget_exceeded = true;
        halt = true;
        return;
      }
      ++result.count;
      if (!visit(SpanningTree(g, chosen))) {
        result.stopped = true;
        halt = true;
      }
      return;
    }
    if (i >= m) return;
    const Edge& e = edges[i];
    if (sets.unite(e.u, e.v)) {
      chosen.push_back(e);
      self(self, i + 1);
      chosen.pop_back();
      sets.undo();
      if (halt) return;
      if (spans_with_rest(i + 1)) self(self, i + 1);
    } else {
      self(self, i + 1);
    }
  };

  if (n <= 1) {
    result.count = 1;
    if (!visit(SpanningTree(g, {}))) result.stopped = true;
    return result;
  }
  recurse(recurse, 0);
  return result;
}

inline EnumerationResult count_spanning_trees(const Graph& g, const EnumerationBudget& budget = {}) {
  return enumerate_spanning_trees(g, budget, [](const SpanningTree&) { return true; });
}

struct MinLeavesResult {
  int min_c0 = 0;
  std::optional<SpanningTree> witness;
  std::uint64_t trees_visited = 0;
  bool exact = true;  // false: budget ran out, min_c0 is only an upper bound
};

// Exact minimum of |L(R_Stem(T))| over all spanning trees. The scan ends as
// soon as a tree with no reducible-stem leaves is seen, which is optimal.
inline MinLeavesResult min_rstem_leaves(const Graph& g, const EnumerationBudget& budget = {}) {
  MinLeavesResult r;
  r.min_c0 = -1;
  auto res = enumerate_spanning_trees(g, budget, [&](const SpanningTree& t) {
    const int c0 = static_cast<int>(decompose(t).rstem_leaves.size());
    if (r.min_c0 < 0 || c0 < r.min_c0) {
      r.min_c0 = c0;
      r.witness.emplace(t);
    }
    return c0 > 0;
  });
  r.trees_visited = res.count;
  r.exact = !res.budget_exceeded;
  return r;
}

// Number of spanning trees by the Matrix-Tree theorem: determinant of a
// reduced Laplacian, by fraction-free (Bareiss) elimination.
inline boost::multiprecision::cpp_int matrix_tree_count(const Graph& g) {
  using boost::multiprecision::cpp_int;
  const int n = g.n();
  if (n <= 1) return 1;
  const int k = n - 1;
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(k), std::vector<cpp_int>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i) {
    a[i][i] = g.degree(i);
    for (Vertex j : g.neighbors(i))
      if (j < k) a[i][j] = -1;
  }
  cpp_int prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < k; ++r)
        if (a[r][p] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (int r = p + 1; r < k; ++r) {
      for (int c = p + 1; c < k; ++c) a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / prev;
      a[r][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace rstem
