#include <gtest/gtest.h>

#include "ekrlab/ekrlab.hpp"
#include "oracles.hpp"

using namespace ekrlab;

TEST(Perm, Construction) {
  EXPECT_THROW(Perm({0, 0, 1}), std::invalid_argument);
  EXPECT_EQ(Perm::one_based({2, 1, 3})(0), 1);
  EXPECT_EQ(perm_label(Perm::identity(3)), "[1,2,3]");
  EXPECT_THROW(agreement(Perm::identity(3), Perm::identity(4)), std::invalid_argument);
  EXPECT_THROW(enumerate_perms(9), std::invalid_argument);
}

TEST(Perm, EnumerationIsLexicographic) {
  const auto ps = enumerate_perms(5);
  ASSERT_EQ(ps.size(), 120u);
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  PermutationSetting s(5, 1);
  for (std::size_t r = 0; r < ps.size(); ++r) EXPECT_EQ(s.rank_of(ps[r]), r);
}

TEST(Perm, PairEncodingIdentityOverS4Squared) {
  const auto ps = enumerate_perms(4);
  PermutationSetting s(4, 1);
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = 0; b < ps.size(); ++b) {
      const auto ea = pair_encode(ps[a]), eb = pair_encode(ps[b]);
      std::size_t shared = 0;
      for (const auto& x : ea) shared += eb.count(x);
      EXPECT_EQ(static_cast<int>(shared), agreement(ps[a], ps[b]));
      EXPECT_EQ(s.agreement(a, b), agreement(ps[a], ps[b]));
      EXPECT_EQ(ea.size(), 4u);
    }
}

TEST(Perm, TrivialCores) {
  EXPECT_EQ(PermutationSetting(4, 1).trivial_cores().size(), 16u);
  EXPECT_EQ(PermutationSetting(4, 2).trivial_cores().size(), 72u);  // C(4,2)^2 2!
  EXPECT_EQ(PermutationSetting(3, 1).generating_set_bound(), 10u);  // C(6,3)/2
}

TEST(Perm, S3MatchesOracle) {
  PermutationSetting s(3, 1);
  const auto c = oracle::exhaustive(oracle::ground_of(s));
  Budget b = Budget::unlimited();
  EXPECT_EQ(c.total, 16u);
  EXPECT_EQ(c.trivial, 16u);
  EXPECT_EQ(c.maximal.size(), 9u);
  EXPECT_EQ(c.max_size, 2u);
  EXPECT_EQ(count_families(s, false, b).total(), 16);
  EXPECT_EQ(count_trivial(s, b), 16);
  EXPECT_EQ(enumerate_maximal(s, b), oracle::maximal_families(s, c));
  EXPECT_EQ(max_nontrivial_size(s, b), 0u);
}

TEST(Perm, S4AgainstReferenceValues) {
  PermutationSetting s(4, 1);
  Budget b = Budget::unlimited();
  EXPECT_EQ(count_families(s, false, b).total(), 1057);
  EXPECT_EQ(count_trivial(s, b), 865);
  EXPECT_EQ(count_trivial_enumerated(s, b), 865);
  EXPECT_EQ(enumerate_maximal(s, b).size(), 112u);
  EXPECT_EQ(max_family_size(s, b), 6u);
  EXPECT_EQ(max_nontrivial_size(s, b), 4u);
}

// Largest non-trivial family: (n-1)! - D(n-1) - D(n-2) + 1, D = derangement numbers.
TEST(Perm, NontrivialMaximumMatchesDerangementFormula) {
  const std::vector<std::uint64_t> derangements{1, 0, 1, 2, 9, 44};
  for (int n = 4; n <= 5; ++n) {
    PermutationSetting s(n, 1);
    Budget b = Budget::unlimited();
    const auto expected = factorial(n - 1) - derangements[static_cast<std::size_t>(n - 1)] -
                          derangements[static_cast<std::size_t>(n - 2)] + 1;
    EXPECT_EQ(BigCount(max_family_size(s, b)), factorial(n - 1));
    EXPECT_EQ(BigCount(max_nontrivial_size(s, b)), expected) << n;
  }
}
