#include <gtest/gtest.h>

#include <map>
#include <set>

#include "mpendo/endoscopy.hpp"
#include "oracles.hpp"

using namespace mpendo;

TEST(EllipticData, Examples)
{
  EXPECT_EQ(elliptic_data(0), (std::vector<EndoDatum>{{0, 0}}));
  EXPECT_EQ(elliptic_data(2), (std::vector<EndoDatum>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(elliptic_data(5).size(), 6u);
  EXPECT_NE((EndoDatum{1, 2}), (EndoDatum{2, 1}));
}

TEST(SplitSequences, WholeGroupHasEmptySequence)
{
  for (const auto& d : elliptic_data(3)) {
    auto seqs = split_sequences(LeviSp({}, 3, 3), d);
    ASSERT_EQ(seqs.size(), 1u);
    EXPECT_TRUE(seqs[0].empty());
  }
}

TEST(SplitSequences, Examples)
{
  const LeviSp levi({1}, 1, 2);
  EXPECT_EQ(split_sequences(levi, {1, 1}), (std::vector<SplitSeq>{{{1, 0}}, {{0, 1}}}));
  EXPECT_EQ(split_sequences(levi, {2, 0}), (std::vector<SplitSeq>{{{1, 0}}}));
  EXPECT_THROW(split_sequences(levi, {1, 2}), std::invalid_argument);
}

TEST(SplitSequences, SatisfyBothConditionsAndAreComplete)
{
  for (int n = 0; n <= 6; ++n)
    for (const auto& levi : enumerate_levis_sp(n))
      for (const auto& d : elliptic_data(n)) {
        const auto seqs = split_sequences(levi, d);
        std::set<SplitSeq> uniq(seqs.begin(), seqs.end());
        EXPECT_EQ(uniq.size(), seqs.size());
        for (const auto& s : seqs)
          EXPECT_TRUE(is_split_sequence(levi, s, d));
        // Count every aligned sequence directly.
        std::size_t count = 0;
        std::vector<int> p(levi.gl_parts().size(), 0);
        while (true) {
          SplitSeq s;
          for (std::size_t i = 0; i < p.size(); ++i)
            s.push_back({p[i], levi.gl_parts()[i] - p[i]});
          if (is_split_sequence(levi, s, d))
            ++count;
          std::size_t i = 0;
          while (i < p.size() && p[i] == levi.gl_parts()[i])
            p[i++] = 0;
          if (i == p.size())
            break;
          ++p[i];
        }
        EXPECT_EQ(count, seqs.size());
      }
}

TEST(EndoscopicLevi, Examples)
{
  {
    auto e = endoscopic_levi(LeviSp({2}, 0, 2), {{1, 1}}, {1, 1});
    EXPECT_EQ(e.m_s_bang.primed, LeviSO({1}, 0, 1));
    EXPECT_EQ(e.m_s_bang.doubleprimed, LeviSO({1}, 0, 1));
    EXPECT_EQ(e.z.signs_p, std::vector<int>{1});
    EXPECT_EQ(e.z.signs_pp, std::vector<int>{-1});
    EXPECT_EQ(e.m_s, LeviSp({1, 1}, 0, 2));
  }
  {
    auto e = endoscopic_levi(LeviSp({1}, 1, 2), {{1, 0}}, {1, 1});
    EXPECT_EQ(e.m_s_bang.primed, LeviSO({1}, 0, 1));
    EXPECT_EQ(e.m_s_bang.doubleprimed, LeviSO({}, 1, 1));
    EXPECT_TRUE(e.z.is_trivial());
  }
  {
    auto e = endoscopic_levi(LeviSp({}, 2, 2), {}, {2, 0});
    EXPECT_EQ(e.m_s_bang.primed, LeviSO({}, 2, 2));
    EXPECT_EQ(e.m_s_bang.doubleprimed, LeviSO({}, 0, 0));
    EXPECT_TRUE(e.z.is_trivial());
  }
}

TEST(EndoscopicLevi, OmitsZeroPartsInSubscriptOrder)
{
  auto e = endoscopic_levi(LeviSp({2, 1, 3}, 0, 6), {{2, 0}, {0, 1}, {1, 2}}, {3, 3});
  EXPECT_EQ(e.m_s_bang.primed.gl_parts(), (Parts{2, 1}));
  EXPECT_EQ(e.m_s_bang.doubleprimed.gl_parts(), (Parts{1, 2}));
  EXPECT_EQ(e.m_s.gl_parts(), (Parts{2, 1, 1, 2}));
}

TEST(EndoscopicLevi, RejectsMisalignedSequences)
{
  const LeviSp levi({1}, 1, 2);
  EXPECT_THROW(endoscopic_levi(levi, {{1, 0}, {1, 0}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(endoscopic_levi(levi, {{0, 1}}, {2, 0}), std::invalid_argument);
  EXPECT_THROW(endoscopic_levi(levi, {{1, 1}}, {1, 1}), std::invalid_argument);
}

TEST(EndoscopicLevi, RankDropsByNumberOfGLFactors)
{
  for (int n = 0; n <= 6; ++n)
    for (const auto& levi : enumerate_levis_sp(n))
      for (const auto& d : elliptic_data(n))
        for (const auto& s : split_sequences(levi, d)) {
          auto e = endoscopic_levi(levi, s, d);
          const int k_p = static_cast<int>(primed_parts(s).size());
          const int k_pp = static_cast<int>(doubleprimed_parts(s).size());
          EXPECT_EQ(semisimple_rank_so_pair(e.m_s_bang), n - (k_p + k_pp));
        }
}

TEST(ZTwist, IsAnInvolution)
{
  for (int n = 0; n <= 5; ++n)
    for (const auto& L : enumerate_levis_so_pair(n, 5 - n)) {
      ZTwist z = twist_for(L);
      EXPECT_TRUE(z.compose(z).is_trivial());
      EXPECT_EQ(z.is_trivial(), L.doubleprimed.gl_parts().empty());
    }
}

TEST(LeviPreimages, Examples)
{
  {
    const EndoDatum d{2, 1};
    auto pre = levi_preimages({LeviSO({}, 2, 2), LeviSO({}, 1, 1)}, d);
    ASSERT_EQ(pre.size(), 1u);
    EXPECT_EQ(pre[0].levi, LeviSp({}, 3, 3));
    EXPECT_TRUE(pre[0].s.empty());
  }
  {
    const EndoDatum d{1, 1};
    auto pre = levi_preimages({LeviSO({1}, 0, 1), LeviSO({1}, 0, 1)}, d);
    std::set<LeviTriple> got;
    for (const auto& p : pre)
      got.insert(p.triple);
    std::set<LeviTriple> expected{{1, {1}, {1}}, {2, {1, 0}, {0, 1}}, {2, {0, 1}, {1, 0}}};
    EXPECT_EQ(got, expected);
  }
  {
    const EndoDatum d{1, 0};
    auto pre = levi_preimages({LeviSO({1}, 0, 1), LeviSO({}, 0, 0)}, d);
    ASSERT_EQ(pre.size(), 1u);
    EXPECT_EQ(pre[0].levi, LeviSp({1}, 0, 1));
    EXPECT_EQ(pre[0].s, (SplitSeq{{1, 0}}));
  }
}

TEST(LeviPreimages, RejectsForeignLevi)
{
  EXPECT_THROW(levi_preimages({LeviSO({}, 2, 2), LeviSO({}, 1, 1)}, {1, 2}), std::invalid_argument);
}

TEST(LeviPreimages, MatchBruteForceAndMapBackToL)
{
  for (int n = 0; n <= 6; ++n)
    for (const auto& d : elliptic_data(n))
      for (const auto& L : enumerate_levis_so_pair(d.n_p, d.n_pp)) {
        std::set<std::pair<std::pair<Parts, int>, SplitSeq>> got;
        for (const auto& pre : levi_preimages(L, d)) {
          EXPECT_EQ(endoscopic_levi(pre.levi, pre.s, d).m_s_bang, L);
          EXPECT_EQ(triple_from_split(pre.s), pre.triple);
          EXPECT_TRUE(got.insert({{pre.levi.gl_parts(), pre.levi.m()}, pre.s}).second);
        }
        EXPECT_EQ(got, oracle::brute_force_preimages(L, d)) << L.to_string() << " d=" << d.to_string();
      }
}

TEST(LeviPreimages, TripleBijectionRoundTrip)
{
  for (int k_p = 0; k_p <= 6; ++k_p)
    for (int k_pp = 0; k_pp <= 6; ++k_pp) {
      // Distinct part sizes so any mix-up shows.
      Parts p, pp;
      for (int i = 0; i < k_p; ++i)
        p.push_back(i + 1);
      for (int i = 0; i < k_pp; ++i)
        pp.push_back(10 + i);
      const LeviSOPair L{LeviSO(p, 1), LeviSO(pp, 0)};
      const EndoDatum d{L.primed.n(), L.doubleprimed.n()};
      for (const auto& pattern : marker_patterns(k_p, k_pp)) {
        const LeviTriple t = fill_pattern(pattern, L);
        EXPECT_GE(t.k, std::max(k_p, k_pp));
        EXPECT_LE(t.k, k_p + k_pp);
        const LeviPreimage pre = preimage_from_triple(t, L, d);
        EXPECT_EQ(triple_from_split(pre.s), t);
        EXPECT_EQ(endoscopic_levi(pre.levi, pre.s, d).m_s_bang, L);
      }
    }
}

TEST(LeviPreimages, SignedSumEqualsLeviSign)
{
  for (int n = 0; n <= 6; ++n)
    for (const auto& d : elliptic_data(n))
      for (const auto& L : enumerate_levis_so_pair(d.n_p, d.n_pp)) {
        std::int64_t total = 0;
        for (const auto& pre : levi_preimages(L, d))
          total += parity_sign(semisimple_rank_sp(pre.levi));
        EXPECT_EQ(total, parity_sign(semisimple_rank_so_pair(L)));
      }
}

TEST(SignSum, Examples)
{
  EXPECT_EQ(sign_sum(0, 0), 1);
  EXPECT_EQ(sign_sum(1, 0), -1);
  EXPECT_EQ(sign_sum(1, 1), 1);
}

TEST(SignSum, AgreesWithOraclesUpToEight)
{
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const auto direct = sign_sum(a, b);
      EXPECT_EQ(direct, sign_sum_recursive(a, b)) << a << "," << b;
      EXPECT_EQ(direct, sign_sum_closed_form(a, b)) << a << "," << b;
      if (a + b <= 10)
        EXPECT_EQ(direct, oracle::signed_triple_count(a, b)) << a << "," << b;
    }
}

TEST(SignSum, PatternCountsAreDelannoyNumbers)
{
  // |M(k',k'')| satisfies D(a,b) = D(a-1,b) + D(a,b-1) + D(a-1,b-1).
  std::map<std::pair<int, int>, std::size_t> D;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      std::size_t expected = (a == 0 && b == 0) ? 1 : 0;
      if (a > 0)
        expected += D[{a - 1, b}];
      if (b > 0)
        expected += D[{a, b - 1}];
      if (a > 0 && b > 0)
        expected += D[{a - 1, b - 1}];
      D[{a, b}] = expected;
      EXPECT_EQ(marker_patterns(a, b).size(), expected);
    }
}
