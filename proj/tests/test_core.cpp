#include <random>

#include <gtest/gtest.h>

#include "matchkit/core.hpp"
#include "matchkit/enumeration.hpp"
#include "oracles.hpp"

using namespace matchkit;

namespace {

Matching M(const char* text) { return parse_matching(text); }

}  // namespace

TEST(ParseMatching, Examples) {
  auto m = M("1-4,2-6,3-5");
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.edges(), (std::vector<Edge>{{1, 4}, {2, 6}, {3, 5}}));
  EXPECT_EQ(m, permutational("132"));

  EXPECT_EQ(M("1-2").size(), 1);
  EXPECT_EQ(M("").size(), 0);
  EXPECT_EQ(M(" 3-5 , 1-4,6-2").str(), "1-4,2-6,3-5");
}

TEST(ParseMatching, Errors) {
  try {
    M("1-3,2-3");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate vertex 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(M("1-2,3-5"), ParseError);  // 5 outside [4]
  EXPECT_THROW(M("0-1"), ParseError);
  EXPECT_THROW(M("2-2"), ParseError);
  EXPECT_THROW(M("1-2,"), ParseError);
  EXPECT_THROW(M("1-2,3"), ParseError);
  EXPECT_THROW(M("a-b"), ParseError);
  EXPECT_THROW(Matching::from_partners({2, 1, 4}), InvalidValue);
}

TEST(Base, Examples) {
  EXPECT_EQ(base(permutational("123")).str(), "000111");
  EXPECT_EQ(base(M("1-2")).str(), "01");
  EXPECT_EQ(base(chain(4)).str(), "00010111");
  EXPECT_EQ(base(Matching{}).str(), "");
}

TEST(DyckWords, Predicate) {
  EXPECT_TRUE(is_dyck_word("0011"));
  EXPECT_TRUE(is_dyck_word("0101"));
  EXPECT_TRUE(is_dyck_word(""));
  EXPECT_FALSE(is_dyck_word("10"));
  EXPECT_FALSE(is_dyck_word("011"));
  EXPECT_FALSE(is_dyck_word("011001"));
  EXPECT_FALSE(is_dyck_word("0110"));
  EXPECT_FALSE(is_dyck_word("000"));
  EXPECT_FALSE(is_dyck_word("0x11"));
  EXPECT_TRUE(is_dyck_word("UUDD"));
  EXPECT_EQ(DyckWord::parse("UDUUDD").str(), "010011");
  EXPECT_THROW(DyckWord::parse("0110"), ParseError);
  EXPECT_THROW(DyckWord::parse("0a"), ParseError);
}

TEST(DyckWords, PredicateMatchesPrefixDefinitionExhaustively) {
  for (int len = 0; len <= 12; ++len) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::vector<std::uint8_t> bits(len);
      int ones = 0;
      bool prefix_ok = true;
      for (int i = 0; i < len; ++i) {
        bits[i] = (mask >> i) & 1u;
        ones += bits[i];
        if (2 * ones > i + 1) prefix_ok = false;
      }
      bool expect = len % 2 == 0 && 2 * ones == len && prefix_ok;
      ASSERT_EQ(is_dyck_word(bits), expect) << "len " << len << " mask " << mask;
    }
  }
}

TEST(Permutational, Examples) {
  EXPECT_EQ(permutational("132").str(), "1-4,2-6,3-5");
  EXPECT_EQ(permutational("1").str(), "1-2");
  EXPECT_EQ(permutational("231").str(), "1-5,2-6,3-4");
  EXPECT_THROW(permutational("122"), InvalidValue);
  EXPECT_THROW(permutational("14"), InvalidValue);
}

TEST(Chain, Examples) {
  EXPECT_EQ(chain(3), M("1-4,2-5,3-6"));
  EXPECT_EQ(chain(3), permutational("123"));
  EXPECT_EQ(chain(4), M("1-4,3-6,5-8,2-7"));
  EXPECT_THROW(chain(2), PreconditionError);
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(permutational("213")), permutational("132"));
  for (int k = 3; k <= 9; ++k) EXPECT_EQ(mirror(chain(k)), chain(k));
  EXPECT_EQ(mirror_word(DyckWord::parse("000111")).str(), "000111");
  EXPECT_EQ(mirror_word(DyckWord::parse("001011")).str(), "001011");
  EXPECT_EQ(mirror_word(DyckWord::parse("010011")).str(), "001101");
}

TEST(Mirror, InvolutionAndBaseCompatibility) {
  for (int m = 0; m <= 5; ++m) {
    for (const auto& mt : oracle::all_matchings(m)) {
      EXPECT_EQ(mirror(mirror(mt)), mt);
      EXPECT_EQ(base(mirror(mt)), mirror_word(base(mt)));
    }
    for (const auto& w : enumerate_bases(m)) EXPECT_EQ(mirror_word(mirror_word(w)), w);
  }
}

TEST(EdgeRelationTest, Examples) {
  EXPECT_EQ(edge_relation({1, 4}, {2, 6}).kind, EdgeRelationKind::Crossing);
  auto nested = edge_relation({2, 6}, {3, 5});
  EXPECT_EQ(nested.kind, EdgeRelationKind::Nested);
  EXPECT_EQ(nested.outer, (Edge{2, 6}));
  EXPECT_EQ(edge_relation({3, 5}, {2, 6}).outer, (Edge{2, 6}));
  EXPECT_EQ(edge_relation({1, 2}, {3, 4}).kind, EdgeRelationKind::Disjoint);
  EXPECT_EQ(edge_relation({3, 4}, {1, 2}).kind, EdgeRelationKind::Disjoint);
  EXPECT_THROW(edge_relation({1, 3}, {3, 4}), PreconditionError);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(permutational("132"), M("1-2")));
  EXPECT_FALSE(contains(permutational("123"), permutational("132")));
  EXPECT_FALSE(contains(chain(4), permutational("123")));
  EXPECT_TRUE(contains(chain(4), chain(4)));
  EXPECT_FALSE(contains(M("1-2"), permutational("123")));
  EXPECT_TRUE(contains(M("1-2"), Matching{}));
}

TEST(Contains, AgreesWithInjectionDefinition) {
  std::vector<Matching> patterns;
  for (int p = 1; p <= 3; ++p)
    for (const auto& q : oracle::all_matchings(p)) patterns.push_back(q);
  for (int m = 1; m <= 5; ++m)
    for (const auto& host : oracle::all_matchings(m))
      for (const auto& pat : patterns)
        ASSERT_EQ(contains(host, pat), oracle::contains_by_injection(host, pat))
            << host.str() << " vs " << pat.str();
}

TEST(Contains, PermutationalMatchesPermutationContainment) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& pi : oracle::all_permutations(m))
      for (int k = 1; k <= 3; ++k)
        for (const auto& sigma : oracle::all_permutations(k))
          ASSERT_EQ(contains(permutational(pi), permutational(sigma)),
                    oracle::perm_contains(pi, sigma));
}

TEST(Contains, ReflexiveAndTransitive) {
  std::mt19937 rng(12345);
  auto all4 = oracle::all_matchings(4);
  auto all3 = oracle::all_matchings(3);
  auto all2 = oracle::all_matchings(2);
  for (const auto& m : all4) EXPECT_TRUE(contains(m, m));
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = all4[rng() % all4.size()];
    const auto& b = all3[rng() % all3.size()];
    const auto& c = all2[rng() % all2.size()];
    if (contains(a, b) && contains(b, c)) {
      EXPECT_TRUE(contains(a, c));
    }
  }
}

TEST(Avoids, Examples) {
  auto m123 = PatternSet::single(permutational("123"), "123");
  EXPECT_TRUE(avoids(chain(4), m123));
  EXPECT_FALSE(avoids(chain(4), PatternSet::chain_family()));
  EXPECT_TRUE(avoids(M("1-6,2-3,4-5"), PatternSet::single(permutational("231"))));
  EXPECT_TRUE(avoids(chain(4), PatternSet{}));
}

TEST(Avoids, ChainFamilyTruncatesAtAmbientSize) {
  auto fam = PatternSet::chain_family();
  EXPECT_EQ(fam.expand(2).size(), 0u);
  EXPECT_EQ(fam.expand(5).size(), 3u);
  for (int m = 1; m <= 5; ++m) {
    PatternSet explicit_chains;
    for (int k = 3; k <= m; ++k) explicit_chains.add(chain(k));
    for (const auto& mt : oracle::all_matchings(m))
      ASSERT_EQ(avoids(mt, fam), avoids(mt, explicit_chains)) << mt.str();
  }
}

TEST(Prefix, Examples) {
  auto g = prefix(permutational("132"), 4);
  EXPECT_EQ(g.closed_edges(), (std::vector<Edge>{{1, 4}}));
  EXPECT_EQ(g.stubs(), (std::vector<int>{2, 3}));

  auto m = chain(4);
  auto full = prefix(m, 8);
  EXPECT_TRUE(full.stubs().empty());
  EXPECT_EQ(full.to_matching(), m);

  auto empty = prefix(m, 0);
  EXPECT_EQ(empty.k(), 0);
  EXPECT_TRUE(empty.closed_edges().empty());
  EXPECT_THROW(prefix(m, 9), PreconditionError);
  EXPECT_THROW(prefix(m, -1), PreconditionError);
}

TEST(Prefix, StubCountIsPathHeight) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& mt : oracle::all_matchings(m)) {
      const auto h = base(mt).heights();
      for (int k = 0; k <= 2 * m; ++k) {
        auto g = prefix(mt, k);
        ASSERT_EQ(g.stub_count(), h[k]);
        ASSERT_TRUE(g.is_consistent());
        for (int s : g.stubs()) ASSERT_TRUE(g.base().is_up(s));
      }
    }
}

TEST(PrefixGraphTest, ConsistencyCheck) {
  const auto w = DyckWord::parse("000111");
  EXPECT_TRUE(PrefixGraph::from_edges(w, 5, {{1, 4}, {3, 5}}).is_consistent());
  // vertex 4 is an r-vertex of w but left as a stub
  EXPECT_FALSE(PrefixGraph::from_edges(w, 4, {{1, 2}}).is_consistent());
  EXPECT_THROW(PrefixGraph::from_edges(w, 4, {{1, 5}}), InvalidValue);
  EXPECT_THROW(PrefixGraph::from_edges(w, 4, {{1, 4}, {2, 4}}), InvalidValue);
  EXPECT_THROW(PrefixGraph::from_edges(w, 7, {}), PreconditionError);
}
