#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekrlab {

/// Exact non-negative counts. Values such as 2^C(n,k) run to thousands of bits.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

inline BigCount pow2(std::uint64_t e) {
  BigCount r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline BigCount power(BigCount base, std::uint64_t e) {
  BigCount r = 1;
  while (e) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

/// log2 of a positive big integer; -inf for zero.
inline double log2_big(const BigCount& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log2(v.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(bits) - 60;
  BigCount top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline double to_double(const BigCount& v) { return v.convert_to<double>(); }

/// C(a, r); zero outside 0 <= r <= a.
inline BigCount binomial(std::int64_t a, std::int64_t r) {
  if (a < 0 || r < 0 || r > a) return 0;
  if (r > a - r) r = a - r;
  BigCount c = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    c *= (a - r + i);
    c /= i;
  }
  return c;
}

/// Machine-word binomial for small arguments (ranking, table sizes).
inline std::uint64_t binomial_u64(int a, int r) {
  if (a < 0 || r < 0 || r > a) return 0;
  if (r > a - r) r = a - r;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(a - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

inline BigCount factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigCount f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Number of k-dimensional subspaces of F_q^n, by the product formula.
inline BigCount gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("gaussian_binomial: q must be prime");
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
  BigCount num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= power(BigCount(q), static_cast<std::uint64_t>(n - i)) - 1;
    den *= power(BigCount(q), static_cast<std::uint64_t>(k - i)) - 1;
  }
  return num / den;
}

// Colexicographic ranking of k-subsets of {0..n-1} held as bitmasks:
// rank(S) = sum_i C(s_i, i+1) over the elements s_0 < s_1 < ... of S.
// Increasing numeric mask order coincides with colex order.

struct SubsetRank {
  int n = 0;
  int k = 0;
  std::uint64_t rank = 0;
};

inline std::uint64_t rank_subset(std::uint64_t mask) {
  std::uint64_t r = 0;
  int i = 1;
  while (mask) {
    const int e = std::countr_zero(mask);
    r += binomial_u64(e, i++);
    mask &= mask - 1;
  }
  return r;
}

inline std::uint64_t unrank_subset(const SubsetRank& s) {
  if (s.k < 0 || s.k > s.n || s.n > 63) throw std::invalid_argument("unrank_subset: bad (n, k)");
  if (s.rank >= binomial_u64(s.n, s.k)) throw std::out_of_range("unrank_subset: rank out of range");
  std::uint64_t mask = 0;
  std::uint64_t r = s.rank;
  int hi = s.n - 1;
  for (int i = s.k; i >= 1; --i) {
    while (binomial_u64(hi, i) > r) --hi;
    mask |= std::uint64_t{1} << hi;
    r -= binomial_u64(hi, i);
    --hi;
  }
  return mask;
}

/// Next mask with the same popcount (Gosper's hack); colex successor.
inline std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// All k-subsets of {0..n-1} in colex (rank) order.
inline std::vector<std::uint64_t> all_subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial_u64(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < limit; m = next_combination(m)) out.push_back(m);
  return out;
}

}  // namespace ekrlab
