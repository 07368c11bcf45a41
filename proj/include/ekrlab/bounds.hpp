#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "combinatorics.hpp"
#include "hypergraph.hpp"

namespace ekrlab {

// Logarithms: log = base 2, ln = natural.

/// Closed-form quantities for one parameter choice. N0: largest trivial
/// family; N1: largest non-trivial family; N2: largest overlap of two
/// maximal trivial families; T: number of maximal trivial families;
/// M: number of maximal families (bounded through log2 M).
struct BoundsReport {
  int n = 0, k = 0, t = 0, q = 0;
  BigCount N0, N2, T;
  std::optional<BigCount> N1_exact;
  /// Real upper bound or reference value for N1.
  double N1_upper = 0;
  /// N1_upper is an asymptotic reference value, not an exact size.
  bool N1_asymptotic = false;
  double logM_upper = 0;
  std::optional<double> eta;
  std::optional<std::int64_t> ekr_threshold;
  /// log M + N1 - N0.
  double cond_allsizes = 0;
  /// 2 log T + N2 - N0.
  double cond_union = 0;

  double n1_value() const { return N1_exact ? to_double(*N1_exact) : N1_upper; }

  /// log M - m log(N0/N1).
  double cond_fixedsize(double m) const { return logM_upper - m * std::log2(to_double(N0) / n1_value()); }
};

/// Threshold shift added to (t+1)(k-t+1) in the hypergraph counting result.
inline double eta(int k, int t) {
  if (t < 1 || k <= t) throw std::invalid_argument("eta: need 1 <= t < k");
  if (t == 1) return k + 8 * std::log(static_cast<double>(k));
  if (k - t == 1) return 18.0 * k;
  if (k - t == 2) return 31.0;
  if (t == 2) return 12 * std::log(static_cast<double>(k));
  return 1.0;
}

inline std::int64_t ekr_threshold(int k, int t) { return static_cast<std::int64_t>(t + 1) * (k - t + 1); }

inline BoundsReport hypergraph_bounds(int n, int k, int t) {
  if (!(1 <= t && t < k && k < n)) throw std::invalid_argument("hypergraph_bounds: need 1 <= t < k < n");
  BoundsReport r;
  r.n = n, r.k = k, r.t = t;
  r.N0 = binomial(n - t, k - t);
  r.N2 = binomial(n - t - 1, k - t - 1);
  r.T = binomial(n, t);
  r.logM_upper = to_double(binomial(2 * (k - t) + 1, k - t)) * log2_big(binomial(n, k));
  r.ekr_threshold = ekr_threshold(k, t);
  if (n >= *r.ekr_threshold) {
    const BigCount h1 = h1_size(n, k, t), h2 = h2_size(n, k, t);
    r.N1_exact = k <= 2 * t + 1 ? h1 : std::max(h1, h2);
  }
  r.N1_upper = to_double(binomial(n - t, k - t)) - to_double(binomial(n - k - 1, k - t)) / n + n;
  r.eta = eta(k, t);
  r.cond_allsizes = r.logM_upper + r.n1_value() - to_double(r.N0);
  r.cond_union = 2 * log2_big(r.T) + to_double(r.N2) - to_double(r.N0);
  return r;
}

inline BoundsReport permutation_bounds(int n, int t) {
  if (!(1 <= t && t < n)) throw std::invalid_argument("permutation_bounds: need 1 <= t < n");
  BoundsReport r;
  r.n = n, r.t = t;
  r.N0 = factorial(n - t);
  r.N2 = factorial(n - t - 1);
  r.T = binomial(n, t) * binomial(n, t) * factorial(t);
  r.logM_upper = to_double(binomial(2 * n - 2 * t + 2, n - t + 1)) / 2 * log2_big(factorial(n));
  r.N1_upper = (1 - 1 / std::exp(1.0)) * to_double(r.N0);
  r.N1_asymptotic = true;
  r.cond_allsizes = r.logM_upper + r.N1_upper - to_double(r.N0);
  r.cond_union = 2 * log2_big(r.T) + to_double(r.N2) - to_double(r.N0);
  return r;
}

/// Whether the non-trivial stability size for subspaces applies.
inline bool subspace_stability_applies(int n, int k, int q) {
  return k >= 2 && ((q == 2 && n >= 2 * k + 2) || (q >= 3 && n >= 2 * k + 1));
}

inline BoundsReport subspace_bounds(int n, int k, int q) {
  if (!is_prime(q)) throw std::invalid_argument("subspace_bounds: q must be prime");
  if (!(2 <= k && k < n)) throw std::invalid_argument("subspace_bounds: need 2 <= k < n");
  BoundsReport r;
  r.n = n, r.k = k, r.t = 1, r.q = q;
  r.N0 = gaussian_binomial(n - 1, k - 1, q);
  r.N2 = gaussian_binomial(n - 2, k - 2, q);
  r.T = gaussian_binomial(n, 1, q);
  r.logM_upper = to_double(binomial(2 * k - 1, k - 1)) * log2_big(gaussian_binomial(n, k, q));
  r.ekr_threshold = 2 * k + 1;
  if (subspace_stability_applies(n, k, q)) {
    r.N1_exact = r.N0 - power(BigCount(q), static_cast<std::uint64_t>(k * (k - 1))) * gaussian_binomial(n - k - 1, k - 1, q) +
                 power(BigCount(q), static_cast<std::uint64_t>(k));
    r.N1_upper = to_double(*r.N1_exact);
  } else {
    r.N1_upper = to_double(r.N0);
  }
  r.cond_allsizes = r.logM_upper + r.n1_value() - to_double(r.N0);
  r.cond_union = 2 * log2_big(r.T) + to_double(r.N2) - to_double(r.N0);
  return r;
}

/// p0(n,k) = 9 n log(ne/k) C(2k,k) C(n,k) / C(n-k,k)^2; may exceed 1.
inline double p0_hypergraph(int n, int k) {
  if (k < 3 || 4 * k > n) throw std::invalid_argument("p0_hypergraph: need 3 <= k <= n/4");
  const double cnk = to_double(binomial(n - k, k));
  return 9.0 * n * std::log2(n * std::exp(1.0) / k) * to_double(binomial(2 * k, k)) * to_double(binomial(n, k)) /
         (cnk * cnk);
}

/// tau = p C(n-k-1,k-1) / 3, the deviation used for the sparse hypergraph result.
inline double tau_hypergraph(int n, int k, double p) { return p * to_double(binomial(n - k - 1, k - 1)) / 3; }

/// p >= 800 n 2^{2n-2t} log n / (n-t)! for sparse permutation families.
inline double permutation_threshold(int n, int t) {
  if (!(1 <= t && t < n)) throw std::invalid_argument("permutation_threshold: need 1 <= t < n");
  return 800.0 * n * std::ldexp(1.0, 2 * n - 2 * t) * std::log2(static_cast<double>(n)) / to_double(factorial(n - t));
}

/// log2 of (n^{n 2^{2n-2t+1}} + 1) exp(-p N1 / 200) with N1 = (1 - 1/e)(n-t)!.
inline double permutation_union_bound_log2(int n, int t, double p) {
  const double log2m = n * std::ldexp(1.0, 2 * n - 2 * t + 1) * std::log2(static_cast<double>(n));
  const double n1 = (1 - 1 / std::exp(1.0)) * to_double(factorial(n - t));
  const double log2m1 = log2m + std::log2(1 + std::exp2(-log2m));
  return log2m1 - p * n1 / 200 * std::log2(std::exp(1.0));
}

/// Two-sided multiplicative tail bound exp(-eps^2 mu / 2).
inline double hoeffding_bound(double mu, double eps) {
  if (mu < 0 || !(eps > 0)) throw std::invalid_argument("hoeffding_bound: need mu >= 0 and eps > 0");
  return std::exp(-0.5 * eps * eps * mu);
}

/// [T 2^N0 - C(T,2) 2^N2, T 2^N0], lower end clamped at zero.
inline std::pair<BigCount, BigCount> bonferroni_window(const BigCount& T, std::uint64_t N0, std::uint64_t N2) {
  if (N2 > N0) throw std::invalid_argument("bonferroni_window: need N2 <= N0");
  const BigCount upper = T * pow2(N0);
  BigCount lower = upper - T * (T - 1) / 2 * pow2(N2);
  if (lower < 0) lower = 0;
  return {lower, upper};
}

}  // namespace ekrlab
