#pragma once

#include <algorithm>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "rstem/graph.hpp"

namespace rstem {

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// A spanning tree of a host graph. Holds a non-owning pointer to the host,
// which must outlive the tree.
class SpanningTree {
 public:
  SpanningTree(const Graph& host, std::vector<Edge> edges) : host_(&host), adj_(static_cast<std::size_t>(host.n())) {
    if (auto err = validate(host, edges)) throw Error(err->first, err->second);
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  // Validation without throwing; used on every candidate move.
  static std::optional<SpanningTree> try_make(const Graph& host, std::vector<Edge> edges) {
    if (validate(host, edges)) return std::nullopt;
    return SpanningTree(host, std::move(edges));
  }

  const Graph& host() const { return *host_; }
  int n() const { return host_->n(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n() || b >= n()) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  // Unique tree path from u to v, both ends included.
  std::vector<Vertex> path(Vertex u, Vertex v) const {
    host_->check_vertex(u);
    host_->check_vertex(v);
    std::vector<Vertex> parent(static_cast<std::size_t>(n()), -1);
    std::vector<Vertex> stack{u};
    parent[u] = u;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      if (x == v) break;
      for (Vertex y : adj_[x])
        if (parent[y] < 0) {
          parent[y] = x;
          stack.push_back(y);
        }
    }
    std::vector<Vertex> out;
    for (Vertex x = v; x != u; x = parent[x]) out.push_back(x);
    out.push_back(u);
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool operator==(const SpanningTree& other) const { return host_ == other.host_ && edges_ == other.edges_; }

 private:
  static std::optional<std::pair<ErrorKind, std::string>> validate(const Graph& host, const std::vector<Edge>& edges) {
    const int n = host.n();
    if (static_cast<int>(edges.size()) != std::max(n - 1, 0))
      return std::pair{ErrorKind::NotATree,
                       "expected " + std::to_string(std::max(n - 1, 0)) + " edges, got " + std::to_string(edges.size())};
    detail::DisjointSets sets(n);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n || e.u == e.v)
        return std::pair{ErrorKind::VertexOutOfRange, "edge " + std::to_string(e.u) + " " + std::to_string(e.v)};
      if (!host.has_edge(e.u, e.v))
        return std::pair{ErrorKind::NotAHostEdge, "edge " + std::to_string(e.u) + " " + std::to_string(e.v)};
      if (!sets.unite(e.u, e.v))
        return std::pair{ErrorKind::NotATree,
                         "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " closes a cycle"};
    }
    return std::nullopt;
  }

  const Graph* host_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Oriented tree path P_T[u,v] with successor/predecessor queries.
class TreePath {
 public:
  TreePath(const SpanningTree& t, Vertex u, Vertex v) : index_(static_cast<std::size_t>(t.n()), -1) {
    if (u == v) throw Error(ErrorKind::InvalidArgument, "tree path needs distinct endpoints");
    seq_ = t.path(u, v);
    for (std::size_t i = 0; i < seq_.size(); ++i) index_[seq_[i]] = static_cast<int>(i);
  }

  const std::vector<Vertex>& vertices() const { return seq_; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  std::size_t size() const { return seq_.size(); }
  bool contains(Vertex x) const { return x >= 0 && x < static_cast<Vertex>(index_.size()) && index_[x] >= 0; }

  std::optional<Vertex> successor(Vertex x) const {
    if (!contains(x) || index_[x] + 1 >= static_cast<int>(seq_.size())) return std::nullopt;
    return seq_[index_[x] + 1];
  }
  std::optional<Vertex> predecessor(Vertex x) const {
    if (!contains(x) || index_[x] == 0) return std::nullopt;
    return seq_[index_[x] - 1];
  }

  // (N(X) ∩ P)^- : predecessors of path vertices other than the start that
  // have a G-neighbor in X.
  std::vector<Vertex> shifted_predecessors(const Graph& g, std::span<const Vertex> set) const {
    std::vector<Vertex> out;
    for (std::size_t i = 1; i < seq_.size(); ++i)
      if (touches(g, seq_[i], set)) out.push_back(seq_[i - 1]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // (N(X) ∩ P)^+ : successors of path vertices other than the end that have
  // a G-neighbor in X.
  std::vector<Vertex> shifted_successors(const Graph& g, std::span<const Vertex> set) const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
      if (touches(g, seq_[i], set)) out.push_back(seq_[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static bool touches(const Graph& g, Vertex x, std::span<const Vertex> set) {
    return std::any_of(set.begin(), set.end(), [&](Vertex s) { return g.has_edge(x, s); });
  }

  std::vector<Vertex> seq_;
  std::vector<int> index_;
};

inline TreePath tree_path(const SpanningTree& t, Vertex u, Vertex v) { return TreePath(t, u, v); }

// ---------------------------------------------------------------------------
// Tree files: n-1 lines "u v"; '#' comment lines are skipped.

inline SpanningTree parse_tree(std::istream& in, const Graph& host) {
  std::string line;
  int lineno = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment(line) || detail::is_blank(line)) continue;
    auto vals = detail::parse_ints(line, 2);
    if (!vals) throw Error(ErrorKind::MalformedLine, "expected \"u v\", got \"" + line + "\"", lineno);
    long long a = (*vals)[0], b = (*vals)[1];
    if (a < 0 || b < 0 || a >= host.n() || b >= host.n())
      throw Error(ErrorKind::VertexOutOfRange, "edge " + std::to_string(a) + " " + std::to_string(b), lineno);
    if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a), lineno);
    if (!host.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
      throw Error(ErrorKind::NotAHostEdge, "edge " + std::to_string(a) + " " + std::to_string(b), lineno);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return SpanningTree(host, std::move(edges));
}

inline SpanningTree parse_tree(const std::string& text, const Graph& host) {
  std::istringstream ss(text);
  return parse_tree(ss, host);
}

inline void write_tree(std::ostream& os, const SpanningTree& t, std::span<const std::string> comments = {}) {
  for (const auto& c : comments) os << '#' << c << '\n';
  for (const Edge& e : t.edges()) os << e << '\n';
}

inline std::string format_tree(const SpanningTree& t, std::span<const std::string> comments = {}) {
  std::ostringstream ss;
  write_tree(ss, t, comments);
  return ss.str();
}

}  // namespace rstem
