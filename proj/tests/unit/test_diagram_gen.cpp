#include <set>

#include <gtest/gtest.h>

#include "autequiv/bilabelled.hpp"
#include "autequiv/diagram_gen.hpp"
#include "autequiv/error.hpp"

using namespace autequiv;

namespace {

BLG seed(unsigned q, std::size_t index) { return set_partition_diagrams(q).at(index); }

std::size_t bell(unsigned q) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (unsigned i = 0; i < q; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

}  // namespace

TEST(SeedName, Spreadsheet) {
  EXPECT_EQ(seed_name(0), "A_0");
  EXPECT_EQ(seed_name(4), "E_0");
  EXPECT_EQ(seed_name(25), "Z_0");
  EXPECT_EQ(seed_name(26), "AA_0");
}

TEST(SetPartitions, CountsAreBellNumbers) {
  for (unsigned q = 0; q <= 7; ++q) EXPECT_EQ(set_partitions(q).size(), bell(q)) << q;
}

TEST(SetPartitions, OrderAndBlockLayout) {
  const auto p = set_partitions(3);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p[0], (std::vector<std::vector<int>>{{1, 2, 3}}));
  EXPECT_EQ(p[1], (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(p[2], (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_EQ(p[3], (std::vector<std::vector<int>>{{2, 3}, {1}}));
  EXPECT_EQ(p[4], (std::vector<std::vector<int>>{{1}, {2}, {3}}));
  for (unsigned q = 1; q <= 5; ++q)
    for (const auto& part : set_partitions(q))
      for (std::size_t b = 1; b < part.size(); ++b) EXPECT_GE(part[b - 1].size(), part[b].size());
}

TEST(SetPartitionDiagrams, SmallCases) {
  const auto d2 = set_partition_diagrams(2);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[0], BLG(Graph::edgeless(1), {1, 1}, {}));
  EXPECT_EQ(d2[1], BLG(Graph::edgeless(2), {1, 2}, {}));
  EXPECT_EQ(set_partition_diagrams(3).size(), 5u);
  EXPECT_EQ(set_partition_diagrams(1), std::vector<BLG>{BLG(Graph::edgeless(1), {1}, {})});
}

TEST(InternalVariants, PaperCounts) {
  const auto b = internal_edge_variants(seed(2, 1), 1);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], BLG(make_graph(2, {{1, 2}}), {1, 2}, {}));
  EXPECT_EQ(b[1], BLG(make_graph(3, {{1, 3}, {2, 3}}), {1, 2}, {}));
  EXPECT_EQ(internal_edge_variants(seed(3, 4), 1).size(), 26u);
  EXPECT_TRUE(internal_edge_variants(seed(2, 0), 3).empty());
}

TEST(InternalVariants, CountFormula) {
  // (2m+1)^(c choose 2) - 1 strings for a seed with c vertices.
  for (int m = 1; m <= 2; ++m) {
    EXPECT_EQ(internal_edge_variants(seed(3, 4), m).size(),
              static_cast<std::size_t>((2 * m + 1) * (2 * m + 1) * (2 * m + 1) - 1));
  }
}

TEST(ExternalVariants, PaperCounts) {
  const auto a = external_edge_variants(seed(2, 0), 1);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], BLG(make_graph(2, {{1, 2}}), {1, 1}, {}));
  EXPECT_EQ(external_edge_variants(seed(2, 1), 1).size(), 3u);
  EXPECT_EQ(external_edge_variants(seed(3, 4), 1).size(), 7u);
}

TEST(MixedVariants, SquareExampleIsEmpty) {
  const BLG b0 = seed(2, 1);
  for (const auto& h : internal_edge_variants(b0, 1)) EXPECT_TRUE(mixed_variants(h, b0, 1).empty());
}

TEST(MixedVariants, SixAcrossTheS2Step2Outputs) {
  std::size_t total = 0;
  for (const auto& s : set_partition_diagrams(3))
    for (const auto& h : internal_edge_variants(s, 1)) total += mixed_variants(h, s, 1).size();
  EXPECT_EQ(total, 6u);
}

TEST(MixedVariants, OnlyIsolatedOriginalsGetPendants) {
  const BLG e0 = seed(3, 4);
  const BLG h = apply_internal_string(e0, {1, 0, 0});  // edge 1-2, vertex 3 isolated
  EXPECT_EQ(isolated_originals(h, 3), std::vector<int>{3});
  const auto v = mixed_variants(h, e0, 1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].underlying().degree(3), 1);
}

TEST(LoopVariants, Counts) {
  EXPECT_EQ(loop_variants(seed(1, 0)).size(), 1u);
  EXPECT_EQ(loop_variants(seed(2, 1)).size(), 3u);
  EXPECT_TRUE(loop_variants(seed(2, 1))[0].underlying().has_loop(2));
}

TEST(Generate, WorkedExamples) {
  EXPECT_EQ(generate_diagrams(builtin_graph("2K2_A"), 1, 1).size(), 8u);
  EXPECT_EQ(generate_diagrams(builtin_graph("S2_A"), 2, 1).size(), 60u);
  EXPECT_EQ(generate_diagrams(Graph::edgeless(4), 1, 1).size(), 2u);
}

TEST(Generate, SquareExampleOrder) {
  const auto d = generate_diagrams(builtin_graph("2K2_A"), 1, 1);
  const std::vector<int> steps{1, 1, 2, 2, 3, 3, 3, 3};
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i].provenance.step, steps[i]);
  EXPECT_EQ(d[0].diagram, spider_blg(1, 1));
  EXPECT_EQ(d[2].diagram, BLG(make_graph(2, {{1, 2}}), {2}, {1}));
  EXPECT_EQ(d[4].provenance.seed, "A_0");
  EXPECT_EQ(d[5].provenance.string, (std::vector<int>{0, 1}));
}

TEST(Generate, S2PerStepPerSeedCounts) {
  const auto c = count_diagrams(make_gen_config(builtin_graph("S2_A"), 3));
  EXPECT_EQ(c.total, 60u);
  EXPECT_EQ(c.per_step.at(1), 5u);
  EXPECT_EQ(c.per_step_seed.at(2), (std::vector<std::size_t>{0, 2, 2, 2, 26}));
  EXPECT_EQ(c.per_step_seed.at(3), (std::vector<std::size_t>{1, 3, 3, 3, 7}));
  EXPECT_EQ(c.per_step_seed.at(4), (std::vector<std::size_t>{0, 0, 0, 0, 6}));
  EXPECT_EQ(c.per_step.count(5), 0u);
}

TEST(Generate, LoopsAddStepFive) {
  const Graph g = builtin_graph("LOOP3");
  const auto c = count_diagrams(make_gen_config(g, 2));
  std::size_t vertices = 0;
  GenConfig base = make_gen_config(g, 2);
  base.has_loops = false;
  for_each_flat_diagram(base, [&](const BLG& h, const Provenance&) {
    vertices += (std::size_t{1} << h.vertex_count()) - 1;
  });
  EXPECT_EQ(c.per_step.at(5), vertices);
  EXPECT_EQ(generate_diagrams(g, 1, 1).back().provenance.step, 5);
}

TEST(Generate, UnflattenedTypes) {
  for (const auto& d : generate_diagrams(builtin_graph("C4_B"), 2, 1)) {
    EXPECT_EQ(d.diagram.k(), 2u);
    EXPECT_EQ(d.diagram.l(), 1u);
  }
}
