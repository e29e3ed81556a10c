#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "rstem/generators.hpp"
#include "rstem/oracle.hpp"

namespace rstem {
namespace {

TEST(CountTrees, SmallFamilies) {
  EXPECT_EQ(count_spanning_trees(cycle_graph(5)).count, 5u);
  EXPECT_EQ(count_spanning_trees(complete_graph(4)).count, 16u);
  EXPECT_EQ(count_spanning_trees(example_G({1, 1})).count, 1u);
  EXPECT_EQ(count_spanning_trees(Graph(1)).count, 1u);
  EXPECT_EQ(matrix_tree_count(complete_graph(4)), 16);
  EXPECT_EQ(matrix_tree_count(complete_graph(7)), 16807);
  EXPECT_EQ(matrix_tree_count(Graph(3, {Edge(0, 1)})), 0);
  EXPECT_THROW(count_spanning_trees(Graph(3, {Edge(0, 1)})), Error);
}

TEST(CountTrees, MatrixTreeAgreesWithEnumerationAndBruteForce) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 8));
    Graph g = random_connected(n, 0.25 + 0.6 * rng.uniform(), rng.next());
    const auto brute = testing::brute_spanning_trees(g);
    std::set<std::vector<Edge>> seen;
    auto res = enumerate_spanning_trees(g, {}, [&](const SpanningTree& t) {
      EXPECT_TRUE(seen.insert(t.edges()).second) << "tree visited twice";
      return true;
    });
    EXPECT_FALSE(res.budget_exceeded);
    EXPECT_EQ(res.count, brute.size());
    EXPECT_EQ(matrix_tree_count(g), res.count);
    std::set<std::vector<Edge>> expected;
    for (auto es : brute) {
      std::sort(es.begin(), es.end());
      expected.insert(es);
    }
    EXPECT_EQ(seen, expected);
  }
}

TEST(MinLeaves, Examples) {
  auto c6 = min_rstem_leaves(cycle_graph(6));
  EXPECT_EQ(c6.min_c0, 0);
  EXPECT_TRUE(c6.exact);
  EXPECT_EQ(c6.trees_visited, 1u);

  Graph h1 = example_H({1});
  auto h = min_rstem_leaves(h1);
  EXPECT_EQ(h.min_c0, 3);
  EXPECT_EQ(h.trees_visited, 1u);

  Graph g11 = example_G({1, 1});
  auto g = min_rstem_leaves(g11);
  EXPECT_EQ(g.min_c0, 4);
  ASSERT_TRUE(g.witness);
  EXPECT_EQ(decompose(*g.witness).rstem_leaves.size(), 4u);
}

TEST(MinLeaves, EveryTreeOfSecondSharpnessGraphHasThreeStemLeaves) {
  Graph g = example_H({2});
  std::uint64_t trees = 0;
  auto res = enumerate_spanning_trees(g, {}, [&](const SpanningTree& t) {
    ++trees;
    EXPECT_EQ(decompose(t).rstem_leaves.size(), 3u);
    return true;
  });
  EXPECT_EQ(res.count, 729u);
  EXPECT_EQ(matrix_tree_count(g), 729);
  auto m = min_rstem_leaves(g);
  EXPECT_EQ(m.min_c0, 3);
  EXPECT_TRUE(m.exact);
}

TEST(MinLeaves, WitnessAchievesMinimumFoundByBruteForce) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 9));
    Graph g = testing::tree_plus_edges(n, static_cast<int>(rng.uniform_int(0, 3)), rng);
    int best = -1;
    for (const auto& es : testing::brute_spanning_trees(g)) {
      const int c0 = testing::brute_rstem_leaf_count(SpanningTree(g, es));
      if (best < 0 || c0 < best) best = c0;
    }
    auto r = min_rstem_leaves(g);
    EXPECT_EQ(r.min_c0, best);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(static_cast<int>(decompose(*r.witness).rstem_leaves.size()), best);
  }
}

TEST(Budget, TreeCapIsReported) {
  Graph k6 = complete_graph(6);
  auto r = count_spanning_trees(k6, {100, 60.0});
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_EQ(r.count, 100u);
  auto exact = count_spanning_trees(k6, {1296, 60.0});
  EXPECT_FALSE(exact.budget_exceeded);
  EXPECT_EQ(exact.count, 1296u);
  EXPECT_THROW(count_spanning_trees(k6, {0, 60.0}), Error);
  EXPECT_THROW(count_spanning_trees(k6, {10, 0.0}), Error);
}

TEST(Budget, PartialMinimumIsNotExact) {
  Graph h = example_H({3});
  auto r = min_rstem_leaves(h, {5, 60.0});
  EXPECT_FALSE(r.exact);
  EXPECT_GE(r.min_c0, 3);
  EXPECT_EQ(r.trees_visited, 5u);
}

}  // namespace
}  // namespace rstem
