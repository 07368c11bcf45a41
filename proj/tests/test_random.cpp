#include <gtest/gtest.h>

#include <cmath>

#include "ekrlab/ekrlab.hpp"
#include "oracles.hpp"

using namespace ekrlab;

TEST(Sampler, ExtremeProbabilities) {
  HypergraphSetting s(7, 3, 1);
  EXPECT_EQ(sample(s, 1.0, 5), full_family(s));
  EXPECT_EQ(sample(s, 0.0, 5), empty_family(s));
  EXPECT_THROW(sample(s, 1.5, 5), std::invalid_argument);
  EXPECT_THROW(sample(s, -0.1, 5), std::invalid_argument);
}

TEST(Sampler, CounterBasedAndDeterministic) {
  HypergraphSetting s(9, 3, 1);
  EXPECT_EQ(sample(s, 0.3, 42), sample(s, 0.3, 42));
  EXPECT_NE(sample(s, 0.3, 42), sample(s, 0.3, 43));
  // Raising p only adds objects: inclusion is a threshold on a fixed uniform.
  EXPECT_TRUE(sample(s, 0.2, 42).is_subset_of(sample(s, 0.6, 42)));
  for (std::uint64_t c = 0; c < 10000; ++c) {
    const double u = counter_uniform(3, c);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
}

TEST(Sampler, MeanSampleSize) {
  HypergraphSetting s(7, 3, 1);
  const std::size_t trials = 10000;
  double total = 0;
  for (std::size_t i = 0; i < trials; ++i) total += static_cast<double>(sample(s, 0.5, trial_seed(11, i)).count());
  const double mean = total / trials;
  // Sample sizes lie in [0, 35]; the radius scales with that range.
  EXPECT_NEAR(mean, 17.5, 35 * hoeffding_radius(trials));
}

TEST(LargestInSample, FullGroundSets) {
  Budget b = Budget::unlimited();
  const auto r73 = largest_in_sample(HypergraphSetting(7, 3, 1), full_family(HypergraphSetting(7, 3, 1)), b);
  EXPECT_EQ(r73.max_size, 15u);
  EXPECT_TRUE(r73.every_max_trivial);
  HypergraphSetting s63(6, 3, 1);
  const auto r63 = largest_in_sample(s63, full_family(s63), b);
  EXPECT_EQ(r63.max_size, 10u);
  EXPECT_FALSE(r63.every_max_trivial);
  EXPECT_EQ(r63.witness.count(), 10u);
  EXPECT_TRUE(is_intersecting(s63, r63.witness));
  EXPECT_FALSE(is_trivial(s63, r63.witness));
  PermutationSetting s4(4, 1);
  const auto rp = largest_in_sample(s4, full_family(s4), b);
  EXPECT_EQ(rp.max_size, 6u);
  EXPECT_TRUE(rp.every_max_trivial);
}

TEST(LargestInSample, StarSample) {
  HypergraphSetting s(8, 3, 1);
  const Family st = star(s, Bitset(8, {2}));
  Budget b = Budget::unlimited();
  const auto r = largest_in_sample(s, st, b);
  EXPECT_EQ(r.max_size, st.count());
  EXPECT_TRUE(r.every_max_trivial);
  EXPECT_EQ(r.witness, st);
}

TEST(LargestInSample, WitnessInvariantsAndSubsampling) {
  HypergraphSetting s(9, 3, 1);
  Budget b = Budget::unlimited();
  const std::size_t full_max = max_family_size(s, b);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Family f = sample(s, 0.3, seed);
    const auto r = largest_in_sample(s, f, b, seed);
    EXPECT_EQ(r.witness.count(), r.max_size);
    EXPECT_TRUE(r.witness.is_subset_of(f));
    EXPECT_TRUE(is_intersecting(s, r.witness));
    EXPECT_LE(r.max_size, full_max);
    EXPECT_EQ(r.every_max_trivial, is_trivial(s, r.witness));
    EXPECT_EQ(r.sample_size, f.count());
  }
}

// Sparse-sample verdicts against brute force: the maximum size, and whether
// some maximum-size intersecting subfamily is non-trivial.
TEST(LargestInSample, SparseVerdictsMatchOracle) {
  HypergraphSetting s(12, 3, 1);
  const auto ground = oracle::ground_of(s);
  std::size_t checked = 0, nontrivial = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto seed = trial_seed(7, i);
    const Family f = sample(s, 0.05, seed);
    if (f.count() > 20) continue;
    const auto o = oracle::exhaustive(oracle::restrict(ground, f.to_vector()));
    Budget b = Budget::unlimited();
    const auto r = largest_in_sample(s, f, b, seed);
    EXPECT_EQ(r.max_size, o.max_size) << seed;
    EXPECT_EQ(r.every_max_trivial, o.max_nontrivial < o.max_size) << seed;
    ++checked;
    nontrivial += !r.every_max_trivial;
  }
  EXPECT_GT(checked, 250u);
  EXPECT_GT(nontrivial, 0u);
}

TEST(MonteCarlo, FullProbabilityGivesEkr) {
  Budget b = Budget::unlimited();
  const auto sum = monte_carlo(HypergraphSetting(12, 3, 1), 1.0, 10, 7, 1, b);
  EXPECT_EQ(sum.empirical_probability, 1.0);
  EXPECT_EQ(sum.trivial_trials, 10u);
  EXPECT_EQ(sum.mean_max_size, 55.0);
  EXPECT_EQ(sum.mean_sample_size, 220.0);
  EXPECT_NEAR(sum.confidence_radius, std::sqrt(std::log(40.0) / 20), 1e-15);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults) {
  HypergraphSetting s(9, 3, 1);
  Budget b = Budget::unlimited();
  std::vector<TrialOutcome> one, eight;
  const auto a = monte_carlo(s, 0.2, 40, 99, 1, b, &one);
  const auto c = monte_carlo(s, 0.2, 40, 99, 8, b, &eight);
  EXPECT_EQ(a.trivial_trials, c.trivial_trials);
  EXPECT_EQ(a.empirical_probability, c.empirical_probability);
  EXPECT_EQ(a.mean_sample_size, c.mean_sample_size);
  EXPECT_EQ(a.mean_max_size, c.mean_max_size);
  ASSERT_EQ(one.size(), eight.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].seed, eight[i].seed);
    EXPECT_EQ(one[i].witness, eight[i].witness);
    EXPECT_EQ(one[i].every_max_trivial, eight[i].every_max_trivial);
  }
}

TEST(MonteCarlo, BudgetErrorsPropagateFromWorkers) {
  Budget tiny(3, std::nullopt);
  EXPECT_THROW(monte_carlo(HypergraphSetting(9, 3, 1), 0.5, 8, 1, 4, tiny), budget_exceeded);
}

TEST(MonteCarlo, HoeffdingRadius) {
  EXPECT_NEAR(hoeffding_radius(100), std::sqrt(std::log(40.0) / 200), 1e-15);
  EXPECT_EQ(hoeffding_radius(0), 1.0);
}
