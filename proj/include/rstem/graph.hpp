#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rstem/error.hpp"

namespace rstem {

using Vertex = int;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool has(Vertex x) const { return x == u || x == v; }

  auto operator<=>(const Edge&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << ' ' << e.v; }

// Undirected simple graph on vertices 0..n-1. Immutable after construction;
// neighbor lists and the edge list are sorted ascending.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
    for (const Edge& e : edges) {
      if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n)
        throw Error(ErrorKind::VertexOutOfRange, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                                     " outside 0.." + std::to_string(n - 1));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    if (adj_[a].size() > adj_[b].size()) std::swap(a, b);
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  int degree_sum(std::span<const Vertex> set) const {
    int total = 0;
    for (Vertex v : set) total += degree(v);
    return total;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// ---------------------------------------------------------------------------
// Edge-list documents: '#' comment lines, a header "n m", then m lines "u v"
// with 0 <= u < v < n.

namespace detail {

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string::npos && line[pos] == '#';
}

// Parses exactly `count` integers from a line; nullopt on anything else.
inline std::optional<std::vector<long long>> parse_ints(const std::string& line, int count) {
  std::istringstream ss(line);
  std::vector<long long> vals;
  long long x = 0;
  while (ss >> x) vals.push_back(x);
  if (!ss.eof()) return std::nullopt;
  if (static_cast<int>(vals.size()) != count) return std::nullopt;
  return vals;
}

}  // namespace detail

struct EdgeListDocument {
  Graph graph;
  std::vector<std::string> comments;  // '#' lines, without the leading '#'
};

inline EdgeListDocument parse_edge_list_document(std::istream& in) {
  EdgeListDocument doc;
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment(line)) {
      auto pos = line.find('#');
      doc.comments.push_back(line.substr(pos + 1));
      continue;
    }
    if (detail::is_blank(line)) continue;
    auto vals = detail::parse_ints(line, 2);
    if (n < 0) {
      if (!vals || (*vals)[0] < 0 || (*vals)[1] < 0)
        throw Error(ErrorKind::MalformedHeader, "expected \"n m\", got \"" + line + "\"", lineno);
      n = (*vals)[0];
      m = (*vals)[1];
      header_line = lineno;
      if (n > std::numeric_limits<int>::max() / 2) throw Error(ErrorKind::MalformedHeader, "vertex count too large", lineno);
      continue;
    }
    if (!vals) throw Error(ErrorKind::MalformedLine, "expected \"u v\", got \"" + line + "\"", lineno);
    long long a = (*vals)[0], b = (*vals)[1];
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(a) + " " + std::to_string(b) + " outside 0.." + std::to_string(n - 1), lineno);
    if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a), lineno);
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == e)
        throw Error(ErrorKind::DuplicateEdge,
                    "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " repeats line " +
                        std::to_string(edge_lines[i]),
                    lineno);
    edges.push_back(e);
    edge_lines.push_back(lineno);
  }
  if (n < 0) throw Error(ErrorKind::MalformedHeader, "missing \"n m\" header", lineno + 1);
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorKind::EdgeCountMismatch,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), header_line);
  doc.graph = Graph(static_cast<int>(n), std::move(edges));
  return doc;
}

inline Graph parse_graph(std::istream& in) { return parse_edge_list_document(in).graph; }

inline Graph parse_graph(const std::string& text) {
  std::istringstream ss(text);
  return parse_graph(ss);
}

inline void write_graph(std::ostream& os, const Graph& g, std::span<const std::string> comments = {}) {
  for (const auto& c : comments) os << '#' << c << '\n';
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e << '\n';
}

inline std::string format_graph(const Graph& g, std::span<const std::string> comments = {}) {
  std::ostringstream ss;
  write_graph(ss, g, comments);
  return ss.str();
}

// ---------------------------------------------------------------------------
// Distances

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Hop distances from one source by breadth-first search.
struct DistanceOracle {
  Vertex source = 0;
  std::vector<int> dist;

  DistanceOracle(const Graph& g, Vertex s) : source(s), dist(static_cast<std::size_t>(g.n()), kInfiniteDistance) {
    g.check_vertex(s);
    std::queue<Vertex> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] == kInfiniteDistance) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
      }
    }
  }

  int operator[](Vertex v) const { return dist[v]; }
};

inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex s = 0; s < g.n(); ++s) out.push_back(DistanceOracle(g, s).dist);
  return out;
}

inline int distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return DistanceOracle(g, u)[v];
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  const DistanceOracle d(g, 0);
  return std::none_of(d.dist.begin(), d.dist.end(), [](int x) { return x == kInfiniteDistance; });
}

// ---------------------------------------------------------------------------
// Induced stars

struct StarWitness {
  Vertex center = 0;
  std::vector<Vertex> leaves;
};

// nullopt means the graph is K_{1,t}-free. Otherwise the first induced star
// found with centers ascending and leaf sets in lexicographic order.
inline std::optional<StarWitness> find_induced_star(const Graph& g, int t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "star size must be positive");
  std::vector<Vertex> chosen;
  for (Vertex c = 0; c < g.n(); ++c) {
    auto nb = g.neighbors(c);
    if (static_cast<int>(nb.size()) < t) continue;
    chosen.clear();
    // Lexicographic depth-first search over t-subsets of N(c) that stay independent.
    auto extend = [&](auto&& self, std::size_t from) -> bool {
      if (static_cast<int>(chosen.size()) == t) return true;
      std::size_t need = static_cast<std::size_t>(t) - chosen.size();
      for (std::size_t i = from; i + need <= nb.size(); ++i) {
        Vertex cand = nb[i];
        bool ok = std::none_of(chosen.begin(), chosen.end(), [&](Vertex x) { return g.has_edge(x, cand); });
        if (!ok) continue;
        chosen.push_back(cand);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (extend(extend, 0)) return StarWitness{c, chosen};
  }
  return std::nullopt;
}

inline bool is_k1t_free(const Graph& g, int t) {
  if (t < 3) throw Error(ErrorKind::InvalidArgument, "K_{1,t}-freeness needs t >= 3");
  return !find_induced_star(g, t).has_value();
}

}  // namespace rstem
