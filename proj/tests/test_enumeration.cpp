#include <map>
#include <set>

#include <gtest/gtest.h>

#include "matchkit/enumeration.hpp"
#include "oracles.hpp"

using namespace matchkit;

namespace {

PatternSet P(const char* pi) { return PatternSet::single(permutational(pi), pi); }

}  // namespace

TEST(EnumerateBases, Examples) {
  auto b2 = enumerate_bases(2);
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_EQ(b2[0].str(), "0011");
  EXPECT_EQ(b2[1].str(), "0101");
  EXPECT_EQ(enumerate_bases(3).size(), 5u);
  auto b0 = enumerate_bases(0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_TRUE(b0[0].empty());
}

TEST(EnumerateBases, CatalanManyLexicographicDistinct) {
  for (int m = 0; m <= 9; ++m) {
    auto bases = enumerate_bases(m);
    EXPECT_EQ(bases.size(), oracle::catalan(m));
    EXPECT_TRUE(std::is_sorted(bases.begin(), bases.end()));
    EXPECT_EQ(std::set<DyckWord>(bases.begin(), bases.end()).size(), bases.size());
  }
}

TEST(EnumerateMatchings, Examples) {
  auto a = enumerate_matchings(DyckWord::parse("0011"));
  ASSERT_EQ(a.size(), 2u);
  std::set<Matching> got(a.begin(), a.end());
  EXPECT_TRUE(got.count(parse_matching("1-3,2-4")));
  EXPECT_TRUE(got.count(parse_matching("1-4,2-3")));

  auto b = enumerate_matchings(DyckWord::parse("0101"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], parse_matching("1-2,3-4"));

  std::size_t total = 0;
  for (const auto& w : enumerate_bases(3)) total += enumerate_matchings(w).size();
  EXPECT_EQ(total, 15u);
}

TEST(EnumerateMatchings, PartitionOfAllMatchingsByBase) {
  for (int m = 0; m <= 6; ++m) {
    std::map<DyckWord, std::set<Matching>> expected;
    for (const auto& mt : oracle::all_matchings(m)) expected[base(mt)].insert(mt);
    std::size_t seen = 0;
    for (const auto& w : enumerate_bases(m)) {
      auto got = enumerate_matchings(w);
      std::set<Matching> uniq(got.begin(), got.end());
      EXPECT_EQ(uniq.size(), got.size()) << "duplicates for " << w.str();
      EXPECT_EQ(uniq, expected[w]) << w.str();
      EXPECT_EQ(got.size(), matchings_with_base(w));
      seen += got.size();
    }
    EXPECT_EQ(seen, static_cast<std::size_t>(double_factorial_odd(m)));
  }
}

TEST(EnumerateMatchings, DoubleFactorialTotals) {
  const Count expected[] = {1, 1, 3, 15, 105, 945, 10395, 135135};
  for (int m = 0; m <= 7; ++m) {
    Count total = 0;
    for_each_base(m, [&](const DyckWord& w) { for_each_matching(w, [&](const Matching&) { ++total; }); });
    EXPECT_EQ(total, expected[m]) << "m=" << m;
    EXPECT_EQ(static_cast<Count>(double_factorial_odd(m)), expected[m]);
  }
}

TEST(Sequences, Catalan) {
  EXPECT_EQ(catalan(3), 5u);
  for (int m = 0; m <= 30; ++m) EXPECT_EQ(catalan(m), oracle::catalan(m)) << m;
  EXPECT_EQ(to_string(catalan(30)), "3814986502092304");
  EXPECT_THROW(catalan(-1), PreconditionError);
}

TEST(Sequences, A005700) {
  EXPECT_EQ(a005700(3), 14u);
  EXPECT_EQ(a005700(1), 1u);
  EXPECT_EQ(a005700(0), 1u);
  const Count known[] = {1, 1, 3, 14, 84, 594, 4719};
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(a005700(m), known[m]);
  // Exact at m = 30 without overflow: c_32 c_30 - c_31^2 computed in 128 bits.
  WideCount c30 = catalan(30), c31 = catalan(31), c32 = catalan(32);
  EXPECT_EQ(a005700(30), c32 * c30 - c31 * c31);
  EXPECT_GT(a005700(30), WideCount{std::numeric_limits<std::uint64_t>::max()});
  EXPECT_THROW(catalan(200), std::overflow_error);
}

TEST(Sequences, A005700MatchesBruteForce231) {
  for (int m = 1; m <= 6; ++m)
    EXPECT_EQ(count_avoiders(m, P("231")), static_cast<Count>(a005700(m))) << m;
}

TEST(CountAvoiders, Examples) {
  EXPECT_EQ(count_avoiders(DyckWord::parse("000111"), P("231")), 5u);
  EXPECT_EQ(count_avoiders(3, P("123")), 14u);
  for (const auto& w : enumerate_bases(4))
    EXPECT_EQ(count_avoiders(w, PatternSet{}), enumerate_matchings(w).size());
}

TEST(CountAvoiders, BoundIsEnforced) {
  Limits tight;
  tight.enumeration = 3;
  EXPECT_THROW(count_avoiders(DyckWord::peak(4), P("123"), tight), BoundExceeded);
  EXPECT_THROW(count_table(4, P("123"), tight), BoundExceeded);
  EXPECT_NO_THROW(count_table(3, P("123"), tight));
}

TEST(CountTableTest, MarginalIsSumOfCells) {
  for (int m = 1; m <= 5; ++m) {
    auto t = count_table(m, P("132"));
    Count direct = 0;
    for (const auto& mt : oracle::all_matchings(m))
      direct += !contains(mt, permutational("132"));
    EXPECT_EQ(t.total(), direct);
    EXPECT_EQ(t.rows.size(), oracle::catalan(m));
    EXPECT_EQ(t.pattern_set, "132");
  }
}

TEST(CountAvoiders, ChainFamilyBelow123AndMirrorIdentity) {
  const auto fam = PatternSet::chain_family();
  for (int m = 1; m <= 6; ++m)
    for (const auto& w : enumerate_bases(m)) {
      EXPECT_LE(count_avoiders(w, fam), count_avoiders(w, P("123")));
      EXPECT_EQ(count_avoiders(w, P("213")), count_avoiders(mirror_word(w), P("132")));
    }
}

TEST(CountAvoiders, SizeThreeClassificationChain) {
  // 213 = 132 <= 123 = 321 = 231 <= 312 in every cell.
  for (int m = 1; m <= 6; ++m) {
    Count agg132 = 0, agg123 = 0;
    for (const auto& w : enumerate_bases(m)) {
      std::map<std::string, Count> g;
      for (const char* pi : {"123", "132", "213", "231", "312", "321"}) g[pi] = count_avoiders(w, P(pi));
      EXPECT_EQ(g["213"], g["132"]);
      EXPECT_LE(g["132"], g["123"]);
      EXPECT_EQ(g["123"], g["321"]);
      EXPECT_EQ(g["321"], g["231"]);
      EXPECT_LE(g["231"], g["312"]);
      agg132 += g["132"];
      agg123 += g["123"];
    }
    if (m >= 4) {
      EXPECT_LT(agg132, agg123);
    }
  }
}

TEST(ClassifyRelation, Examples) {
  auto eq = classify_relation(P("132"), P("213"), 5);
  EXPECT_EQ(eq.tag, Verdict::EqualEverywhere);
  EXPECT_TRUE(eq.consistent());
  EXPECT_FALSE(eq.a_below_witness);

  auto lt = classify_relation(P("132"), P("123"), 4);
  EXPECT_EQ(lt.tag, Verdict::AStrictlyBelow);
  ASSERT_TRUE(lt.a_below_witness);
  EXPECT_EQ(lt.a_below_witness->m, 4);
  EXPECT_LT(lt.a_below_witness->a, lt.a_below_witness->b);
  EXPECT_TRUE(lt.consistent());

  auto refl = classify_relation(P("123"), P("123"), 4);
  EXPECT_EQ(refl.tag, Verdict::EqualEverywhere);

  auto gt = classify_relation(P("312"), P("231"), 5);
  EXPECT_EQ(gt.tag, Verdict::BStrictlyBelow);
  EXPECT_EQ(gt.b_below_witness->m, 5);
}

TEST(ClassifyRelation, DegenerateSetsAndConsistency) {
  // Nothing of positive size avoids a single edge.
  auto a = P("123");
  auto b = PatternSet::single(parse_matching("1-2"), "single-edge");
  auto v = classify_relation(a, b, 3);
  EXPECT_EQ(v.tag, Verdict::BStrictlyBelow);
  EXPECT_TRUE(v.consistent());

  RelationVerdict fake = v;
  fake.tag = Verdict::EqualEverywhere;
  EXPECT_FALSE(fake.consistent());

  // Each base has exactly one non-crossing and one non-nesting matching.
  auto cross = PatternSet::single(parse_matching("1-3,2-4"), "cross");
  auto nest = PatternSet::single(parse_matching("1-4,2-3"), "nest");
  auto both = classify_relation(cross, nest, 3);
  EXPECT_TRUE(both.consistent());
  EXPECT_EQ(both.tag, Verdict::EqualEverywhere);  // both count 1 per base
}
