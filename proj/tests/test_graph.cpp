#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "rstem/generators.hpp"
#include "rstem/graph.hpp"

namespace rstem {
namespace {

ErrorKind parse_error_kind(const std::string& text, int* line = nullptr) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return ErrorKind::InvalidArgument;
}

TEST(ParseGraph, Triangle) {
  Graph g = parse_graph("3 3\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_EQ(g, complete_graph(3));
}

TEST(ParseGraph, CommentsAndBlankLinesSkipped) {
  auto doc = [] {
    std::istringstream in("# generated\n#  m=1\n\n2 1\n# mid\n0 1\n");
    return parse_edge_list_document(in);
  }();
  EXPECT_EQ(doc.graph.n(), 2);
  ASSERT_EQ(doc.comments.size(), 3u);
  EXPECT_EQ(doc.comments[0], " generated");
}

TEST(ParseGraph, SelfLoopRejectedWithLine) {
  int line = 0;
  EXPECT_EQ(parse_error_kind("2 1\n0 0\n", &line), ErrorKind::SelfLoop);
  EXPECT_EQ(line, 2);
}

TEST(ParseGraph, Errors) {
  int line = 0;
  EXPECT_EQ(parse_error_kind("three 3\n", &line), ErrorKind::MalformedHeader);
  EXPECT_EQ(line, 1);
  EXPECT_EQ(parse_error_kind("# only comments\n"), ErrorKind::MalformedHeader);
  EXPECT_EQ(parse_error_kind("3 1 7\n0 1\n"), ErrorKind::MalformedHeader);
  EXPECT_EQ(parse_error_kind("3 1\n0 3\n", &line), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(line, 2);
  EXPECT_EQ(parse_error_kind("3 2\n0 1\n# c\n1 0\n", &line), ErrorKind::DuplicateEdge);
  EXPECT_EQ(line, 4);
  EXPECT_EQ(parse_error_kind("3 2\n0 1\n"), ErrorKind::EdgeCountMismatch);
  EXPECT_EQ(parse_error_kind("3 1\n0 x\n"), ErrorKind::MalformedLine);
}

TEST(ParseGraph, RoundTripPreservesGraph) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_connected(1 + static_cast<int>(seed % 12), 0.35, seed);
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(complete_graph(3)));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_FALSE(is_connected(Graph(4, {Edge(0, 1), Edge(2, 3)})));
  EXPECT_TRUE(is_connected(example_G({1, 1})));
}

TEST(Distance, Examples) {
  Graph c5 = cycle_graph(5);
  EXPECT_EQ(distance(c5, 0, 1), 1);
  EXPECT_EQ(distance(c5, 0, 0), 0);
  EXPECT_EQ(distance(path_graph(7), 0, 6), 6);
  Graph two(4, {Edge(0, 1), Edge(2, 3)});
  EXPECT_EQ(distance(two, 0, 3), kInfiniteDistance);
  EXPECT_THROW(distance(c5, 0, 5), Error);
}

TEST(Distance, MatchesFloydWarshallAndIsMetric) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 11));
    Graph g = random_graph(n, 0.3, rng);
    const auto ref = testing::floyd_warshall(g);
    const auto d = all_pairs_distances(g);
    for (int u = 0; u < n; ++u) {
      const DistanceOracle bfs(g, u);
      for (int v = 0; v < n; ++v) {
        const int expect = ref[u][v] >= testing::kInf ? kInfiniteDistance : ref[u][v];
        EXPECT_EQ(bfs[v], expect);
        EXPECT_EQ(d[u][v], d[v][u]);
        for (int w = 0; w < n; ++w)
          if (d[u][w] != kInfiniteDistance && d[w][v] != kInfiniteDistance) { EXPECT_LE(d[u][v], d[u][w] + d[w][v]); }
      }
      for (const Edge& e : g.edges())
        if (bfs[e.u] != kInfiniteDistance) { EXPECT_LE(std::abs(bfs[e.u] - bfs[e.v]), 1); }
    }
  }
}

TEST(InducedStar, StarHasWitness) {
  auto w = find_induced_star(star_graph(4), 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->center, 0);
  EXPECT_EQ(w->leaves, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_FALSE(is_k1t_free(star_graph(4), 4));
}

TEST(InducedStar, CycleAndSharpnessFamiliesAreFree) {
  EXPECT_TRUE(is_k1t_free(cycle_graph(5), 4));
  EXPECT_TRUE(is_k1t_free(example_H({2}), 4));
  EXPECT_THROW(is_k1t_free(cycle_graph(5), 2), Error);
}

TEST(InducedStar, FirstWitnessIsLexicographic) {
  // Center 0 has neighbors 1..5 with 1-2 adjacent: first independent 3-set is {1,3,4}.
  Graph g(6, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(0, 5), Edge(1, 2)});
  auto w = find_induced_star(g, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->center, 0);
  EXPECT_EQ(w->leaves, (std::vector<Vertex>{1, 3, 4}));
}

TEST(InducedStar, AgreesWithExhaustionAndIsMonotoneInT) {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 10));
    Graph g = random_graph(n, 0.2 + 0.5 * rng.uniform(), rng);
    for (int t = 3; t <= 6; ++t) {
      const bool free_t = is_k1t_free(g, t);
      EXPECT_EQ(free_t, !testing::brute_has_induced_star(g, t)) << format_graph(g) << " t=" << t;
      if (free_t) { EXPECT_TRUE(is_k1t_free(g, t + 1)); }
      if (auto w = find_induced_star(g, t)) {
        ASSERT_EQ(static_cast<int>(w->leaves.size()), t);
        for (std::size_t a = 0; a < w->leaves.size(); ++a) {
          EXPECT_TRUE(g.has_edge(w->center, w->leaves[a]));
          for (std::size_t b = a + 1; b < w->leaves.size(); ++b) EXPECT_FALSE(g.has_edge(w->leaves[a], w->leaves[b]));
        }
      }
    }
  }
}

TEST(GraphInvariants, RejectsBadEdgesAndKeepsCanonicalForm) {
  EXPECT_THROW(Graph(3, {Edge(1, 1)}), Error);
  EXPECT_THROW(Graph(3, {Edge(0, 1), Edge(1, 0)}), Error);
  EXPECT_THROW(Graph(2, {Edge(0, 2)}), Error);
  Graph g(4, {Edge(3, 0), Edge(2, 0), Edge(1, 0)});
  EXPECT_EQ(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()), (std::vector<Vertex>{1, 2, 3}));
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.has_edge(v, u));
}

}  // namespace
}  // namespace rstem
