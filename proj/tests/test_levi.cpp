#include <gtest/gtest.h>

#include <set>

#include "mpendo/levi.hpp"
#include "oracles.hpp"

using namespace mpendo;

TEST(Levi, RankZeroHasOnlyTheTrivialLevi)
{
  auto levis = enumerate_levis_sp(0);
  ASSERT_EQ(levis.size(), 1u);
  EXPECT_TRUE(levis[0].gl_parts().empty());
  EXPECT_EQ(levis[0].m(), 0);
}

TEST(Levi, RankOneOrder)
{
  auto levis = enumerate_levis_sp(1);
  ASSERT_EQ(levis.size(), 2u);
  EXPECT_EQ(levis[0], LeviSp({}, 1, 1));
  EXPECT_EQ(levis[1], LeviSp({1}, 0, 1));
}

TEST(Levi, RankTwelveCount) { EXPECT_EQ(enumerate_levis_sp(12).size(), 4096u); }

TEST(Levi, MatchesSimpleRootSubsets)
{
  for (int n = 0; n <= 10; ++n) {
    const auto levis = enumerate_levis_sp(n);
    std::set<std::pair<Parts, int>> got;
    for (const auto& l : levis)
      got.emplace(l.gl_parts(), l.m());
    EXPECT_EQ(got.size(), levis.size()) << "duplicates at n=" << n;
    EXPECT_EQ(got, oracle::levi_shapes_from_root_subsets(n)) << "n=" << n;
    EXPECT_TRUE(std::is_sorted(levis.begin(), levis.end()));
  }
}

TEST(Levi, EnumerationIsStable) { EXPECT_EQ(enumerate_levis_sp(7), enumerate_levis_sp(7)); }

TEST(Levi, SemisimpleRankSp)
{
  EXPECT_EQ(semisimple_rank_sp(LeviSp({}, 5, 5)), 5);
  EXPECT_EQ(semisimple_rank_sp(LeviSp({1, 1}, 0, 2)), 0);
  EXPECT_EQ(semisimple_rank_sp(LeviSp({2}, 1, 3)), 2);
  for (int n = 0; n <= 8; ++n)
    for (const auto& l : enumerate_levis_sp(n)) {
      int direct = l.m();
      for (int part : l.gl_parts())
        direct += part - 1;
      EXPECT_EQ(semisimple_rank_sp(l), direct);
      EXPECT_EQ(semisimple_rank_sp(l), n - l.k());
    }
}

TEST(Levi, SemisimpleRankSOPair)
{
  EXPECT_EQ(semisimple_rank_so_pair({LeviSO({}, 3, 3), LeviSO({}, 2, 2)}), 5);
  EXPECT_EQ(semisimple_rank_so_pair({LeviSO({1}, 0, 1), LeviSO({1}, 0, 1)}), 0);
  EXPECT_EQ(semisimple_rank_so_pair({LeviSO({2}, 1, 3), LeviSO({}, 2, 2)}), 4);
}

TEST(Levi, RejectsBadShapes)
{
  EXPECT_THROW(LeviSp({0, 2}, 1, 3), std::invalid_argument);
  EXPECT_THROW(LeviSp({1, 2}, 1, 5), std::invalid_argument);
  EXPECT_THROW(LeviSp({}, -1, -1), std::invalid_argument);
  EXPECT_THROW(enumerate_levis_sp(-1), std::invalid_argument);
}

TEST(Levi, SubLevisAreRefinements)
{
  // GL(2) x Sp(2): refine the GL(2) and cut into Sp(2).
  auto subs = sub_levis({2}, 1);
  std::set<std::pair<Parts, int>> expected{{{2}, 1}, {{2, 1}, 0}, {{1, 1}, 1}, {{1, 1, 1}, 0}};
  EXPECT_EQ((std::set<std::pair<Parts, int>>(subs.begin(), subs.end())), expected);
  for (const auto& [parts, m] : subs) {
    Parts prefix, tail;
    ASSERT_TRUE(split_sub_levi(parts, m, {2}, 1, &prefix, &tail));
    EXPECT_TRUE(is_refinement(prefix, {2}));
  }
  EXPECT_FALSE(split_sub_levi({1}, 2, {2}, 1));
  EXPECT_FALSE(split_sub_levi({3}, 0, {2}, 1));
  EXPECT_EQ(sub_levis({}, 4).size(), 16u);
}

TEST(Levi, ToString)
{
  EXPECT_EQ(LeviSp({1, 2}, 1).to_string(), "GL(1,2)xSp(2)");
  EXPECT_EQ(LeviSO({}, 1).to_string(), "SO(3)");
}
