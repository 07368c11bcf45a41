#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include "budget.hpp"
#include "conflict_graph.hpp"
#include "enumeration.hpp"

namespace ekrlab {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based generator: a pure function of (key, counter).
constexpr std::uint64_t counter_random(std::uint64_t key, std::uint64_t counter) {
  return mix64(mix64(key) ^ mix64(counter + 0x632be59bd9b4e019ULL));
}

/// Uniform double in [0, 1) from 53 random bits.
constexpr double counter_uniform(std::uint64_t key, std::uint64_t counter) {
  return static_cast<double>(counter_random(key, counter) >> 11) * 0x1.0p-53;
}

/// Seed of trial `index` under `master_seed`.
constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  return counter_random(master_seed ^ 0x5851f42d4c957f2dULL, index);
}

/// p-random subset of the ground set: object r is kept iff
/// counter_uniform(seed, r) < p.
template <Setting S>
Family sample(const S& s, double p, std::uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("sample: p must lie in [0, 1]");
  Family f(s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    if (counter_uniform(seed, r) < p) f.set(r);
  return f;
}

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::size_t sample_size = 0;
  std::size_t max_size = 0;
  bool every_max_trivial = true;
  /// A maximum intersecting subfamily; non-trivial whenever one exists.
  Family witness;
};

inline constexpr std::size_t max_sample_vertices = 10000;

/// Exact largest intersecting subfamily of a sample, and whether every
/// such maximum family is trivial (decided by a second search for a
/// non-trivial family of the same size).
template <Setting S>
TrialOutcome largest_in_sample(const S& s, const Family& sampled, Budget& budget, std::uint64_t seed = 0) {
  if (sampled.count() > max_sample_vertices) throw budget_exceeded("largest_in_sample: sample too large");
  const auto g = build_conflict_graph(s, sampled);
  TrialOutcome out;
  out.seed = seed;
  out.sample_size = g.size();
  const auto best = max_family(g, budget);
  out.max_size = best.size;
  out.witness = g.to_family(best.vertices);
  if (best.size > 0) {
    if (auto nt = max_nontrivial_family(g, budget, best.size - 1)) {
      out.every_max_trivial = false;
      out.witness = g.to_family(nt->vertices);
    }
  }
  return out;
}

struct ExperimentSummary {
  std::size_t trials = 0;
  double p = 0;
  std::size_t trivial_trials = 0;
  double empirical_probability = 0;
  /// Half-width with 95% coverage from the additive Hoeffding bound.
  double confidence_radius = 0;
  double mean_sample_size = 0;
  double mean_max_size = 0;
};

/// Additive Hoeffding radius: P(|mean - E| >= r) <= 2 exp(-2 trials r^2) = delta.
inline double hoeffding_radius(std::size_t trials, double delta = 0.05) {
  if (trials == 0) return 1.0;
  return std::sqrt(std::log(2 / delta) / (2.0 * static_cast<double>(trials)));
}

/// Runs `trials` independent samples. Trial i uses trial_seed(master_seed, i),
/// so results do not depend on the thread count.
template <Setting S>
ExperimentSummary monte_carlo(const S& s, double p, std::size_t trials, std::uint64_t master_seed,
                              unsigned threads, Budget& budget, std::vector<TrialOutcome>* outcomes = nullptr) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("monte_carlo: p must lie in [0, 1]");
  threads = std::max(1U, threads);
  std::vector<TrialOutcome> results(trials);
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < trials; i += threads) {
        Budget local = budget;  // node allowance is per trial
        const auto seed = trial_seed(master_seed, i);
        results[i] = largest_in_sample(s, sample(s, p, seed), local, seed);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExperimentSummary sum;
  sum.trials = trials;
  sum.p = p;
  std::uint64_t samples = 0, maxes = 0;
  for (const auto& r : results) {
    sum.trivial_trials += r.every_max_trivial;
    samples += r.sample_size;
    maxes += r.max_size;
  }
  if (trials) {
    const auto tr = static_cast<double>(trials);
    sum.empirical_probability = static_cast<double>(sum.trivial_trials) / tr;
    sum.mean_sample_size = static_cast<double>(samples) / tr;
    sum.mean_max_size = static_cast<double>(maxes) / tr;
  }
  sum.confidence_radius = hoeffding_radius(trials);
  if (outcomes) *outcomes = std::move(results);
  return sum;
}

}  // namespace ekrlab
