#include <gtest/gtest.h>

#include "ekrlab/ekrlab.hpp"
#include "oracles.hpp"

using namespace ekrlab;

namespace {

template <Setting S>
void compare_with_oracle(const S& s) {
  const auto c = oracle::exhaustive(oracle::ground_of(s));
  Budget b = Budget::unlimited();
  const auto poly = count_families(s, true, b);
  ASSERT_EQ(poly.coefficients.size(), c.by_size.size());
  for (std::size_t m = 0; m < c.by_size.size(); ++m) EXPECT_EQ(poly.coefficients[m], c.by_size[m]) << m;
  EXPECT_EQ(count_families(s, false, b).total(), c.total);
  EXPECT_EQ(count_trivial(s, b), c.trivial);
  EXPECT_EQ(count_trivial_enumerated(s, b), c.trivial);
  EXPECT_EQ(enumerate_maximal(s, b), oracle::maximal_families(s, c));
  EXPECT_EQ(max_family_size(s, b), c.max_size);
  EXPECT_EQ(max_nontrivial_size(s, b), c.max_nontrivial);
}

}  // namespace

TEST(Oracle, SmallHypergraphs) {
  for (auto [n, k, t] : {std::tuple{5, 2, 1}, {4, 2, 1}, {6, 2, 1}, {5, 3, 1}, {5, 3, 2}, {6, 5, 3}, {6, 2, 2}, {4, 1, 1}})
    compare_with_oracle(HypergraphSetting(n, k, t));
}

TEST(Oracle, S3AndSubspaces) {
  compare_with_oracle(PermutationSetting(3, 1));
  compare_with_oracle(PermutationSetting(3, 2));
  compare_with_oracle(SubspaceSetting(3, 2, 2));
  compare_with_oracle(SubspaceSetting(3, 1, 3));
}

TEST(Petersen, FullCensus) {
  HypergraphSetting s(5, 2, 1);
  Budget b = Budget::unlimited();
  const auto poly = count_families(s, true, b);
  EXPECT_EQ(poly.coefficients, (std::vector<BigCount>{1, 10, 30, 30, 5}));
  EXPECT_EQ(poly.total(), 76);
  EXPECT_EQ(poly.degree(), 4u);
  EXPECT_EQ(count_trivial(s), 66);
  const auto fams = enumerate_maximal(s, b);
  ASSERT_EQ(fams.size(), 15u);
  int stars = 0, triangles = 0;
  for (const auto& f : fams) {
    if (is_trivial(s, f) && f.count() == 4) ++stars;
    if (!is_trivial(s, f) && f.count() == 3) ++triangles;
  }
  EXPECT_EQ(stars, 5);
  EXPECT_EQ(triangles, 10);
}

TEST(Counting, HalfAndBelowHalfIdentities) {
  Budget b = Budget::unlimited();
  // n = 2k: complementary pairs conflict and nothing else does.
  EXPECT_EQ(count_families(HypergraphSetting(6, 3, 1), false, b).total(), 59049);   // 3^10
  EXPECT_EQ(count_families(HypergraphSetting(4, 2, 1), false, b).total(), 27);       // 3^3
  EXPECT_EQ(count_families(HypergraphSetting(5, 3, 1), false, b).total(), 1024);    // 2^10
  EXPECT_EQ(count_families(HypergraphSetting(7, 4, 1), false, b).total(), pow2(35));
}

TEST(Counting, KneserSevenThree) {
  Budget b = Budget::unlimited();
  EXPECT_EQ(count_families(HypergraphSetting(7, 3, 1), false, b).total(), 1278686);
  const auto by_size = count_families(HypergraphSetting(7, 3, 1), true, b);
  EXPECT_EQ(by_size.total(), 1278686);
  EXPECT_EQ(by_size.degree(), 15u);
  EXPECT_EQ(by_size.coefficients[15], 7);  // only the stars reach 15
  EXPECT_EQ(by_size.coefficients[1], 35);
}

TEST(Counting, RefusesLargeGraphs) {
  Budget b = Budget::unlimited();
  EXPECT_THROW(count_families(HypergraphSetting(9, 3, 1), false, b), budget_exceeded);  // 84 objects
}

TEST(Counting, NodeBudgetIsEnforced) {
  Budget tiny(10, std::nullopt);
  EXPECT_THROW(count_families(HypergraphSetting(7, 3, 1), false, tiny), budget_exceeded);
  Budget tiny2(10, std::nullopt);
  EXPECT_THROW(max_nontrivial_size(HypergraphSetting(8, 3, 1), tiny2), budget_exceeded);
}

TEST(Maximal, KneserCounts) {
  Budget b = Budget::unlimited();
  EXPECT_EQ(enumerate_maximal(HypergraphSetting(7, 3, 1), b).size(), 6127u);
  EXPECT_EQ(maximal_independent_sets(kneser_graph(8, 3), b).size(), 23936u);
}

TEST(Maximal, SixThreeTwo) {
  HypergraphSetting s(6, 3, 2);
  Budget b = Budget::unlimited();
  EXPECT_EQ(count_families(s, false, b).total(), 261);
  EXPECT_EQ(enumerate_maximal(s, b).size(), 30u);
  EXPECT_EQ(max_family_size(s, b), 4u);
}

TEST(Extremal, WitnessesAreValid) {
  HypergraphSetting s(8, 3, 1);
  Budget b = Budget::unlimited();
  const auto g = build_conflict_graph(s);
  const auto best = max_family(g, b);
  EXPECT_EQ(best.size, 21u);
  EXPECT_TRUE(g.is_independent(best.vertices));
  const auto nt = max_nontrivial_family(g, b);
  ASSERT_TRUE(nt.has_value());
  EXPECT_EQ(nt->size, 16u);
  const Family f = g.to_family(nt->vertices);
  EXPECT_TRUE(is_intersecting(s, f));
  EXPECT_FALSE(is_trivial(s, f));
  EXPECT_FALSE(max_nontrivial_family(g, b, 16).has_value());
}

TEST(TrivialCount, ClosedFormMatchesEnumeration) {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k <= n && k <= 4; ++k)
      for (int t = 1; t <= k; ++t) {
        HypergraphSetting s(n, k, t);
        if (s.size() > 40) continue;
        Budget b = Budget::unlimited();
        EXPECT_EQ(count_trivial(s), count_trivial_enumerated(s, b)) << n << ' ' << k << ' ' << t;
      }
}

TEST(TrivialCount, PermutationDpMatchesEnumeration) {
  for (auto [n, t] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
    PermutationSetting s(n, t);
    Budget b = Budget::unlimited();
    EXPECT_EQ(count_trivial(s, b), count_trivial_enumerated(s, b)) << n << ' ' << t;
  }
}
