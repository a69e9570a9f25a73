#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "autequiv/error.hpp"
#include "autequiv/exact_rank.hpp"
#include "oracles.hpp"

using namespace autequiv;

namespace {

std::vector<IntMatrix> random_family(std::mt19937& rng, std::size_t count, std::size_t rows,
                                     std::size_t cols, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    IntMatrix m(rows, cols);
    for (auto& v : m.flat()) v = d(rng);
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(RankExact, Basics) {
  const std::vector<IntMatrix> ij{IntMatrix::identity(4), IntMatrix::ones(4, 4)};
  EXPECT_EQ(rank_exact(ij), 2u);
  EXPECT_EQ(rank_exact(std::vector<IntMatrix>{}), 0u);
  EXPECT_EQ(rank_exact(std::vector<IntMatrix>{IntMatrix(2, 2)}), 0u);
  EXPECT_THROW(rank_exact(std::vector<IntMatrix>{IntMatrix(2, 2), IntMatrix(2, 3)}), DomainError);
}

TEST(RankExact, NearDependencyThatFloatsMiss) {
  // Rows differ only past double precision.
  const std::int64_t big = (std::int64_t{1} << 60) + 1;
  const std::vector<IntMatrix> m{oracle::from_rows({{big, big - 1}}),
                                 oracle::from_rows({{big - 1, big - 2}})};
  EXPECT_EQ(rank_exact(m), 2u);
}

TEST(RankExact, MatchesRationalGauss) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 80; ++trial) {
    auto fam = random_family(rng, 1 + trial % 9, 2, 3, trial % 2 ? 1 : 5);
    if (trial % 4 == 0) {
      // Force dependencies.
      IntMatrix sum = fam[0];
      for (std::size_t i = 1; i < fam.size(); ++i) sum = sum + fam[i] + fam[i];
      fam.push_back(sum);
    }
    EXPECT_EQ(rank_exact(fam), oracle::rank_q(fam)) << trial;
  }
}

TEST(RankExact, PermutationAndCombinationInvariant) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    auto fam = random_family(rng, 4, 3, 3, 3);
    const std::size_t r = rank_exact(fam);
    std::shuffle(fam.begin(), fam.end(), rng);
    EXPECT_EQ(rank_exact(fam), r);
    IntMatrix comb = fam[0] + fam[1] - fam[2] - fam[2];
    fam.push_back(comb);
    EXPECT_EQ(rank_exact(fam), r);
  }
}

TEST(IncrementalRank, TracksRankAndMembership) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto fam = random_family(rng, 6, 2, 4, 2);
    IncrementalRank inc(8);
    std::vector<IntMatrix> seen;
    for (const auto& m : fam) {
      const bool in_before = inc.in_span(m.flat());
      const bool grew = inc.add(m.flat());
      EXPECT_EQ(grew, !in_before);
      seen.push_back(m);
      EXPECT_EQ(inc.rank(), oracle::rank_q(seen));
    }
  }
}

TEST(IncrementalRank, WideVectors) {
  IncrementalRank inc(2);
  const WideInt huge = static_cast<WideInt>(std::int64_t{1} << 62) * 1000;
  const std::vector<WideInt> a{huge, 1}, b{huge * 2, 2}, c{huge, 2};
  EXPECT_TRUE(inc.add(std::span<const WideInt>(a)));
  EXPECT_TRUE(inc.in_span(std::span<const WideInt>(b)));
  EXPECT_FALSE(inc.in_span(std::span<const WideInt>(c)));
  EXPECT_TRUE(inc.add(std::span<const WideInt>(c)));
  EXPECT_EQ(inc.rank(), 2u);
}

TEST(IncrementalRank, DimensionMismatch) {
  IncrementalRank inc(3);
  const std::vector<std::int64_t> v{1, 2};
  EXPECT_THROW(inc.add(v), DomainError);
}
