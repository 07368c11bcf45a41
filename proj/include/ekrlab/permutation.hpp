#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "setting.hpp"

namespace ekrlab {

inline constexpr int max_permutation_n = 8;

/// A bijection on {0..n-1}; images[i] is the image of i. Labels are 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("Perm: images are not a bijection");
  }
  static Perm identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }
  /// From one-line notation with 1-based values, e.g. {2,1,3}.
  static Perm one_based(std::initializer_list<int> values) {
    std::vector<int> v;
    for (int x : values) v.push_back(x - 1);
    return Perm(std::move(v));
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

inline std::vector<Perm> enumerate_perms(int n) {
  if (n < 1 || n > max_permutation_n) throw std::invalid_argument("enumerate_perms: need 1 <= n <= 8");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Number of indices on which the two permutations agree.
inline int agreement(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("agreement: permutations of different degree");
  int c = 0;
  for (int i = 0; i < a.n(); ++i) c += a(i) == b(i);
  return c;
}

/// The n-set {(i, sigma(i))} of index/value pairs.
inline std::set<std::pair<int, int>> pair_encode(const Perm& p) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < p.n(); ++i) out.emplace(i, p(i));
  return out;
}

/// Pair encoding packed as an n*n-bit mask, bit i*n + sigma(i).
inline std::uint64_t pair_mask(const Perm& p) {
  std::uint64_t m = 0;
  for (int i = 0; i < p.n(); ++i) m |= std::uint64_t{1} << (i * p.n() + p(i));
  return m;
}

inline std::string perm_label(const Perm& p) {
  std::string s = "[";
  for (int i = 0; i < p.n(); ++i) {
    if (i) s += ',';
    s += std::to_string(p(i) + 1);
  }
  return s + "]";
}

/// Families of permutations of [n] in which any two agree on >= t indices.
class PermutationSetting {
 public:
  PermutationSetting(int n, int t) : n_(n), t_(t) {
    if (t < 1 || t > n) throw std::invalid_argument("permutation setting: need 1 <= t <= n");
    perms_ = enumerate_perms(n);
    masks_.reserve(perms_.size());
    for (const auto& p : perms_) masks_.push_back(pair_mask(p));
  }

  SettingKind kind() const { return SettingKind::permutation; }
  int n() const { return n_; }
  int t() const { return t_; }
  std::size_t size() const { return perms_.size(); }
  const std::vector<Perm>& perms() const { return perms_; }
  const Perm& perm(std::size_t r) const { return perms_[r]; }
  std::size_t rank_of(const Perm& p) const {
    auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
    if (it == perms_.end() || *it != p) throw std::invalid_argument("rank_of: permutation of wrong degree");
    return static_cast<std::size_t>(it - perms_.begin());
  }

  int agreement(std::size_t a, std::size_t b) const { return std::popcount(masks_[a] & masks_[b]); }

  Bitset signature(std::size_t a) const {
    Bitset s(signature_bits());
    std::uint64_t m = masks_[a];
    while (m) {
      s.set(static_cast<std::size_t>(std::countr_zero(m)));
      m &= m - 1;
    }
    return s;
  }
  std::size_t signature_bits() const { return static_cast<std::size_t>(n_ * n_); }
  int core_threshold() const { return t_; }

  /// Cores are partial permutations on t indices: C(n,t)^2 t! of them.
  std::vector<Bitset> trivial_cores() const {
    std::vector<Bitset> cores;
    for (auto idx : all_subsets(n_, t_)) {
      std::vector<int> indices;
      for (int i = 0; i < n_; ++i)
        if (idx >> i & 1U) indices.push_back(i);
      for (auto vals : all_subsets(n_, t_)) {
        std::vector<int> values;
        for (int v = 0; v < n_; ++v)
          if (vals >> v & 1U) values.push_back(v);
        do {
          Bitset c(signature_bits());
          for (std::size_t j = 0; j < indices.size(); ++j)
            c.set(static_cast<std::size_t>(indices[j] * n_ + values[j]));
          cores.push_back(std::move(c));
        } while (std::next_permutation(values.begin(), values.end()));
      }
    }
    return cores;
  }

  /// C(2n-2t+2, n-t+1) / 2.
  std::uint64_t generating_set_bound() const { return binomial_u64(2 * n_ - 2 * t_ + 2, n_ - t_ + 1) / 2; }

  std::string label(std::size_t r) const { return perm_label(perms_[r]); }

 private:
  int n_, t_;
  std::vector<Perm> perms_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace ekrlab
