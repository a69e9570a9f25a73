#include <random>

#include <gtest/gtest.h>

#include "autequiv/error.hpp"
#include "autequiv/graph.hpp"
#include "oracles.hpp"

using namespace autequiv;

TEST(Graph, MakeNormalizesEdgesAndLoops) {
  const Graph g = make_graph(4, {{2, 1}, {3, 4}, {1, 2}}, {3, 3});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{3, 4}));
  EXPECT_EQ(g.loops(), std::vector<int>{3});
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_TRUE(g.has_loop(3));
  EXPECT_FALSE(g.has_loop(1));
}

TEST(Graph, MakeRejectsBadInput) {
  EXPECT_THROW(make_graph(3, {{1, 4}}), DomainError);
  EXPECT_THROW(make_graph(3, {{2, 2}}), DomainError);
  EXPECT_THROW(make_graph(3, {}, {0}), DomainError);
  EXPECT_THROW(make_graph(0, {}), DomainError);
}

TEST(Graph, NamedLabellings) {
  EXPECT_EQ(builtin_graph("2K2_A"), make_graph(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(builtin_graph("Kbar3"), make_graph(3, {}));
  EXPECT_EQ(builtin_graph("S2_A"), make_graph(3, {{1, 2}}));
  EXPECT_EQ(builtin_graph("LOOP3"), make_graph(3, {{1, 2}}, {3}));
  EXPECT_EQ(builtin_graph("K4").edges().size(), 6u);
  EXPECT_EQ(builtin_graph("C5").edges().size(), 5u);
  EXPECT_THROW(builtin_graph("nope"), DomainError);
}

TEST(Graph, ComplementOfTwoCopiesIsSquare) {
  EXPECT_EQ(complement(builtin_graph("2K2_A")), make_graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_EQ(complement(Graph::edgeless(5)), Graph::complete(5));
}

TEST(Graph, ComplementKeepsLoopsAndIsInvolution) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 6, 0.5, 0.3);
    const Graph c = complement(g);
    EXPECT_EQ(c.loops(), g.loops());
    EXPECT_EQ(complement(c), g);
    const IntMatrix a = adjacency_matrix(g), ac = adjacency_matrix(c);
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j)
        EXPECT_EQ(ac(i, j), i == j ? a(i, j) : 1 - a(i, j));
  }
}

TEST(Graph, AdjacencyMatrix) {
  EXPECT_EQ(adjacency_matrix(builtin_graph("2K2_A")),
            oracle::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  EXPECT_EQ(adjacency_matrix(Graph::edgeless(3)), IntMatrix(3, 3));
  EXPECT_EQ(adjacency_matrix(make_graph(1, {}, {1})), oracle::from_rows({{1}}));
}

TEST(Graph, LongestTrailKnownValues) {
  EXPECT_EQ(longest_trail(Graph::edgeless(4)), 0);
  EXPECT_EQ(longest_trail(builtin_graph("2K2_A")), 1);
  EXPECT_EQ(longest_trail(builtin_graph("C4_A")), 4);
  EXPECT_EQ(longest_trail(Graph::complete(4)), 5);
  EXPECT_EQ(longest_trail(builtin_graph("S2_A")), 1);
  EXPECT_EQ(longest_trail(builtin_graph("LOOP3")), 1);
  EXPECT_EQ(longest_trail(make_graph(2, {{1, 2}}, {1, 2})), 3);
}

TEST(Graph, LongestTrailMatchesSubsetOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 6, 0.45, 0.2);
    EXPECT_EQ(longest_trail(g), oracle::longest_trail(g)) << trial;
  }
}

TEST(Graph, LongestTrailZeroIffNoEdges) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 5, 0.2, 0.1);
    EXPECT_EQ(longest_trail(g) == 0, g.edges().empty() && g.loops().empty());
  }
}

TEST(Graph, RelabelMovesEdges) {
  const Graph g = relabel(builtin_graph("2K2_A"), {1, 3, 2, 4});
  EXPECT_EQ(g, builtin_graph("2K2_B"));
}
