#include <random>

#include <gtest/gtest.h>

#include "autequiv/bilabelled.hpp"
#include "autequiv/error.hpp"
#include "autequiv/hom_matrix.hpp"
#include "autequiv/hom_reference.hpp"
#include "oracles.hpp"

using namespace autequiv;

namespace {

const Graph kFig4H = make_graph(4, {{1, 2}, {3, 4}});

}  // namespace

TEST(HomCount, Figure4Entries) {
  const Graph g = builtin_graph("S2_A");
  EXPECT_EQ(hom_count(kFig4H, g, {{1, 1}, {3, 1}}), 1);
  EXPECT_EQ(hom_count(kFig4H, g, {{1, 3}, {3, 2}}), 0);
}

TEST(HomCount, SingleVertex) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(hom_count(make_graph(1, {}), Graph::edgeless(n)), n);
}

TEST(HomCount, PinErrors) {
  EXPECT_THROW(hom_count(kFig4H, builtin_graph("S2_A"), {{5, 1}}), DomainError);
  EXPECT_THROW(hom_count(kFig4H, builtin_graph("S2_A"), {{1, 4}}), DomainError);
  EXPECT_EQ(hom_count(kFig4H, builtin_graph("S2_A"), {{1, 1}, {1, 2}}), 0);
}

TEST(HomCount, LoopSemantics) {
  // An edge can only collapse onto a looped vertex.
  const Graph looped = make_graph(2, {}, {1});
  EXPECT_EQ(hom_count(make_graph(2, {{1, 2}}), looped), 1);
  EXPECT_EQ(hom_count(make_graph(1, {}, {1}), builtin_graph("LOOP3")), 1);
  EXPECT_EQ(hom_count(make_graph(1, {}, {1}), Graph::complete(4)), 0);
}

TEST(HomCount, KnownClosedForms) {
  // Closed walks: hom(C_t, K_n) = (n-1)^t + (-1)^t (n-1).
  for (int t = 3; t <= 9; ++t)
    for (int n = 2; n <= 5; ++n) {
      std::int64_t p = 1;
      for (int i = 0; i < t; ++i) p *= n - 1;
      EXPECT_EQ(hom_count(Graph::cycle(t), Graph::complete(n)), p + (t % 2 ? -1 : 1) * (n - 1));
    }
  // Paths with t edges into K_n: n (n-1)^t.
  std::vector<std::pair<int, int>> path;
  for (int t = 1; t <= 20; ++t) {
    path.emplace_back(t, t + 1);
    std::int64_t expect = 4;
    for (int i = 0; i < t; ++i) expect *= 3;
    EXPECT_EQ(hom_count(make_graph(t + 1, path), Graph::complete(4)), expect);
  }
}

TEST(HomCount, MatchesBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph h = oracle::random_graph(rng, 1 + trial % 7, 0.35, 0.1);
    const Graph g = oracle::random_graph(rng, 1 + trial % 4, 0.6, 0.3);
    std::vector<std::pair<int, int>> pins;
    if (trial % 3 == 0) pins.emplace_back(1, 1 + trial % g.order());
    EXPECT_EQ(hom_count(h, g, pins), oracle::hom_count(h, g, pins)) << trial;
    EXPECT_EQ(reference::hom_count_naive(h, g, pins), oracle::hom_count(h, g, pins)) << trial;
  }
}

TEST(HomCount, OverflowIsReported) {
  EXPECT_THROW(hom_count(Graph::edgeless(70), Graph::edgeless(4)), OverflowError);
}

TEST(HomMatrix, Figure4MatchesBruteForce) {
  const BLG h(kFig4H, {3}, {1});
  const Graph g = builtin_graph("S2_A");
  const HomMatrix x = hom_matrix(h, g);
  EXPECT_EQ(x.values, oracle::hom_matrix(h, g));
  EXPECT_EQ(x.values(0, 0), 1);
  EXPECT_EQ(x.values(2, 1), 0);
}

TEST(HomMatrix, Examples) {
  const Graph kbar4 = Graph::edgeless(4);
  EXPECT_EQ(hom_matrix(spider_blg(1, 1), kbar4).values, IntMatrix::identity(4));
  EXPECT_EQ(hom_matrix(BLG(Graph::edgeless(2), {1}, {2}), kbar4).values, IntMatrix::ones(4, 4));
  for (const char* name : {"2K2_A", "C4_B", "C5", "LOOP3", "K4"})
    EXPECT_EQ(hom_matrix(adjacency_blg(), builtin_graph(name)).values,
              adjacency_matrix(builtin_graph(name)));
}

TEST(HomMatrix, MatchesBruteForceOnRandomDiagrams) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = trial % 3, l = (trial / 3) % 3;
    const BLG h = oracle::random_blg(rng, 5, k, l);
    const Graph g = oracle::random_graph(rng, 1 + trial % 4, 0.5, 0.25);
    const IntMatrix expect = oracle::hom_matrix(h, g);
    EXPECT_EQ(hom_matrix(h, g).values, expect) << trial;
    EXPECT_EQ(reference::hom_matrix_naive(h, g).values, expect) << trial;
  }
}

TEST(HomMatrix, LongPathsUseSharedPowers) {
  // Paths long enough to leave the stored power range still agree with
  // the product of adjacency matrices.
  const Graph g = Graph::cycle(5);
  const IntMatrix a = adjacency_matrix(g);
  IntMatrix p = IntMatrix::identity(5);
  for (int t = 1; t <= 30; ++t) {
    p = p * a;
    // 1 - 3 - 4 - ... - (t+1) - 2
    std::vector<int> walk{1};
    for (int v = 3; v <= t + 1; ++v) walk.push_back(v);
    walk.push_back(2);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < walk.size(); ++i) edges.emplace_back(walk[i - 1], walk[i]);
    const BLG h(make_graph(t + 1, edges), {2}, {1});
    EXPECT_EQ(hom_matrix(h, g).values, p) << t;
  }
}

TEST(HomMatrix, WideAgreesWhereNarrowFits) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const BLG h = oracle::random_blg(rng, 6, 1, 2);
    const Graph g = oracle::random_graph(rng, 3, 0.6, 0.2);
    const HomCounter counter(g);
    const HomMatrix x = counter.matrix(h);
    const WideMatrix w = counter.matrix_wide(h);
    ASSERT_EQ(w.data.size(), x.values.size());
    for (std::size_t i = 0; i < w.data.size(); ++i)
      EXPECT_TRUE(w.data[i] == static_cast<WideInt>(x.values.flat()[i]));
  }
}

TEST(HomMatrix, WideHandlesCountsPast63Bits) {
  // Six disjoint 12-edge paths between two labelled vertices into K_4:
  // each entry is ((A^12)_{ij})^6, which exceeds 2^63.
  std::vector<std::pair<int, int>> edges;
  int next = 3;
  for (int p = 0; p < 6; ++p) {
    int prev = 1;
    for (int i = 0; i < 11; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 2);
  }
  const BLG h(make_graph(next - 1, edges), {2}, {1});
  const Graph g = Graph::complete(4);
  EXPECT_THROW(hom_matrix(h, g), OverflowError);
  const WideMatrix w = HomCounter(g).matrix_wide(h);
  // (A^12)_{11} and (A^12)_{12} for K_4: (3^12 + 3) / 4 and (3^12 - 1) / 4.
  const WideInt diag = (531441 + 3) / 4, off = (531441 - 1) / 4;
  auto pow6 = [](WideInt x) { return x * x * x * x * x * x; };
  EXPECT_TRUE(w.data[0] == pow6(diag));
  EXPECT_TRUE(w.data[1] == pow6(off));
}

TEST(Batch, ParallelMatchesSerial) {
  std::mt19937 rng(12);
  std::vector<BLG> hs;
  for (int i = 0; i < 200; ++i) hs.push_back(oracle::random_blg(rng, 6, 1, 2));
  const Graph g = builtin_graph("C4_A");
  EXPECT_EQ(hom_matrices(hs, g), reference::hom_matrices_serial(hs, g));
}

TEST(Batch, ErrorsPropagate) {
  std::vector<BLG> hs{spider_blg(1, 1), BLG(Graph::edgeless(70), {1}, {1})};
  EXPECT_THROW(hom_matrices(hs, Graph::edgeless(4)), OverflowError);
}

TEST(Spider, Definitions) {
  EXPECT_EQ(spider(0, 0, 5).values, oracle::from_rows({{5}}));
  EXPECT_EQ(spider(0, 1, 3).values, IntMatrix::ones(3, 1));
  EXPECT_EQ(spider(2, 1, 2).values, oracle::from_rows({{1, 0, 0, 0}, {0, 0, 0, 1}}));
  for (int n = 2; n <= 3; ++n)
    for (auto [k, l] : std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {0, 1}, {1, 0}, {2, 1}, {1, 2}, {2, 2}})
      EXPECT_EQ(spider(k, l, n), hom_matrix(spider_blg(k, l), Graph::edgeless(n)));
}

TEST(Swap, Definitions) {
  EXPECT_EQ(swap_matrix(1).values, IntMatrix::identity(1));
  const IntMatrix s = swap_matrix(2).values;
  EXPECT_EQ(s, oracle::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  for (const char* name : {"Kbar3", "S2_A", "LOOP3", "K4", "2K2_C", "C5"})
    EXPECT_EQ(swap_matrix(builtin_graph(name).order()), hom_matrix(swap_blg(), builtin_graph(name)));
}

TEST(Reshape, KeepsFlatData) {
  const HomMatrix x = hom_matrix(spider_blg(1, 1), Graph::edgeless(4));
  const HomMatrix r = reshape(x, 2, 0);
  EXPECT_EQ(r.values.rows(), 1u);
  EXPECT_EQ(r.values.cols(), 16u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(r.values.flat()[i], i % 5 == 0 ? 1 : 0);
  EXPECT_THROW(reshape(x, 2, 1), DomainError);
}
