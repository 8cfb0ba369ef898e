#include <map>
#include <set>

#include <gtest/gtest.h>

#include "matchkit/dyckbij.hpp"
#include "matchkit/enumeration.hpp"
#include "oracles.hpp"

using namespace matchkit;

namespace {

DyckWord D(const char* s) { return DyckWord::parse(s); }

const Matching& m231() {
  static const Matching m = permutational("231");
  return m;
}

}  // namespace

TEST(Tunnels, Examples) {
  auto t = tunnels(D("001011"));
  EXPECT_EQ(t.down_of_up, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(t.up_of_down, (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(t.up_steps, (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(t.down_steps, (std::vector<int>{3, 5, 6}));
  EXPECT_DOUBLE_EQ(t.tunnel_height(1), 0.5);
  EXPECT_DOUBLE_EQ(t.tunnel_height(2), 1.5);
  EXPECT_EQ(tunnels(D("")).size(), 0);
}

TEST(Tunnels, AgreeWithForwardScan) {
  for (int m = 0; m <= 7; ++m)
    for (const auto& p : enumerate_bases(m)) {
      auto t = tunnels(p);
      ASSERT_EQ(t.down_of_up, oracle::tunnel_partners(p.bits())) << p.str();
      for (int i = 1; i <= m; ++i) ASSERT_EQ(t.up_of_down[t.down_of_up[i - 1] - 1], i);
    }
}

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(D("000111"), D("010101")));
  EXPECT_TRUE(dominates(D("001011"), D("001011")));
  EXPECT_FALSE(dominates(D("010101"), D("001011")));
  EXPECT_FALSE(dominates(D("010011"), D("001101")));
  EXPECT_THROW(dominates(D("01"), D("0011")), PreconditionError);
}

TEST(MatchingFromPair, Examples) {
  EXPECT_EQ(matching_from_pair(D("001011"), D("001011")), parse_matching("1-6,2-3,4-5"));
  EXPECT_EQ(matching_from_pair(D("001011"), D("010101")), parse_matching("1-3,2-5,4-6"));
  EXPECT_EQ(matching_from_pair(D("000111"), D("000111")), permutational("321"));
  EXPECT_EQ(matching_from_pair(D("000111"), D("010101")), permutational("123"));
  EXPECT_THROW(matching_from_pair(D("010101"), D("000111")), PreconditionError);
}

TEST(MatchingFromPair, PeakBaseGivesPermutationalAvoiders) {
  for (int m = 1; m <= 6; ++m) {
    std::set<Matching> images;
    for (const auto& p : enumerate_noncrossing(DyckWord::peak(m))) {
      auto mt = matching_from_pair(DyckWord::peak(m), p);
      EXPECT_FALSE(contains(mt, m231()));
      images.insert(mt);
    }
    std::size_t expected = 0;
    for (const auto& pi : oracle::all_permutations(m))
      expected += !oracle::perm_contains(pi, {2, 3, 1});
    EXPECT_EQ(images.size(), expected);
  }
}

// For each base W, P -> M(W,P) is one-to-one onto the M_231-avoiders on W.
TEST(MatchingFromPair, BijectionOntoAvoiders) {
  for (int m = 0; m <= 6; ++m)
    for (const auto& w : enumerate_bases(m)) {
      std::set<Matching> avoiders;
      for (const auto& mt : enumerate_matchings(w))
        if (!contains(mt, m231())) avoiders.insert(mt);
      std::set<Matching> images;
      std::size_t paths = 0;
      for_each_noncrossing(w, [&](const DyckWord& p) {
        auto mt = matching_from_pair(w, p);
        ASSERT_EQ(base(mt), w);
        images.insert(mt);
        ++paths;
      });
      ASSERT_EQ(images.size(), paths) << "not injective on " << w.str();
      ASSERT_EQ(images, avoiders) << w.str();
    }
}

TEST(Split, Examples) {
  auto s = split_short_long(parse_matching("1-6,2-3,4-5"));
  EXPECT_EQ(s.pivot, (Edge{1, 6}));
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(s.short_edges, (std::vector<Edge>{{2, 3}, {4, 5}}));
  EXPECT_TRUE(s.long_edges.empty());
  EXPECT_TRUE(s.short_precede_long);

  auto t = split_short_long(m231());
  EXPECT_EQ(t.pivot, (Edge{1, 5}));
  EXPECT_EQ(t.k, 2);
  EXPECT_EQ(t.short_edges, (std::vector<Edge>{{3, 4}}));
  EXPECT_EQ(t.long_edges, (std::vector<Edge>{{2, 6}}));
  EXPECT_FALSE(t.short_precede_long);
  EXPECT_THROW(split_short_long(Matching{}), PreconditionError);
}

TEST(Split, CharacterizationAgreesWithContainment) {
  for (int m = 0; m <= 6; ++m)
    for (const auto& mt : oracle::all_matchings(m))
      ASSERT_EQ(avoids231_by_split(mt), !contains(mt, m231())) << mt.str();
}

TEST(PathFromMatching, Examples) {
  EXPECT_EQ(path_from_matching(parse_matching("1-6,2-3,4-5")).str(), "001011");
  EXPECT_EQ(path_from_matching(parse_matching("1-3,2-5,4-6")).str(), "010101");
  EXPECT_EQ(path_from_matching(Matching{}).str(), "");
  EXPECT_THROW(path_from_matching(m231()), PreconditionError);
}

TEST(PathFromMatching, InvertsMatchingFromPair) {
  for (int m = 0; m <= 5; ++m)
    for (const auto& w : enumerate_bases(m))
      for (const auto& p : enumerate_noncrossing(w)) {
        auto mt = matching_from_pair(w, p);
        ASSERT_EQ(path_from_matching(mt), p) << w.str() << " " << p.str();
      }
}

TEST(Noncrossing, Examples) {
  auto under = enumerate_noncrossing(D("0011"));
  ASSERT_EQ(under.size(), 2u);
  EXPECT_EQ(under[0].str(), "0011");
  EXPECT_EQ(under[1].str(), "0101");
  EXPECT_EQ(count_noncrossing(D("0101")), 1u);
  EXPECT_EQ(count_noncrossing(D("")), 1u);

  Count total = 0;
  for (const auto& w : enumerate_bases(4)) total += count_noncrossing(w);
  EXPECT_EQ(total, 84u);
}

TEST(Noncrossing, DpAgreesWithEnumerationAndDomination) {
  for (int m = 0; m <= 7; ++m) {
    Count total = 0;
    const auto all = enumerate_bases(m);
    for (const auto& w : all) {
      auto list = enumerate_noncrossing(w);
      ASSERT_EQ(count_noncrossing(w), list.size()) << w.str();
      ASSERT_TRUE(std::is_sorted(list.begin(), list.end()));
      std::size_t direct = 0;
      for (const auto& p : all) direct += dominates(w, p);
      ASSERT_EQ(direct, list.size()) << w.str();
      total += list.size();
    }
    EXPECT_EQ(total, static_cast<Count>(a005700(m))) << m;
  }
}

TEST(Noncrossing, BoundIsEnforced) {
  Limits tight;
  tight.paths = 2;
  EXPECT_THROW(count_noncrossing(DyckWord::peak(3), tight), BoundExceeded);
  EXPECT_THROW(enumerate_noncrossing(DyckWord::peak(3), tight), BoundExceeded);
}
