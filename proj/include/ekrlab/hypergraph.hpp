#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "setting.hpp"

namespace ekrlab {

/// A k-subset of {0..n-1} as a bitmask. Labels print 1-based vertices.
struct Edge {
  std::uint32_t mask = 0;
  int size() const { return std::popcount(mask); }
  friend bool operator==(Edge, Edge) = default;
};

inline constexpr int max_hypergraph_n = 30;
inline constexpr std::uint64_t max_hypergraph_edges = std::uint64_t{1} << 24;

/// All C(n,k) edges in colex rank order.
inline std::vector<Edge> enumerate_edges(int n, int k) {
  if (k <= 0 || k > n || n > max_hypergraph_n)
    throw std::invalid_argument("enumerate_edges: need 0 < k <= n <= 30");
  if (binomial_u64(n, k) > max_hypergraph_edges)
    throw std::invalid_argument("enumerate_edges: C(n,k) exceeds the materialisation cap");
  std::vector<Edge> edges;
  for (auto m : all_subsets(n, k)) edges.push_back(Edge{static_cast<std::uint32_t>(m)});
  return edges;
}

inline std::uint32_t edge_from_vertices(std::initializer_list<int> one_based) {
  std::uint32_t m = 0;
  for (int v : one_based) m |= std::uint32_t{1} << (v - 1);
  return m;
}

inline std::string edge_label(Edge e) {
  std::string s;
  for (int v = 0; v < 32; ++v)
    if (e.mask >> v & 1U) {
      if (!s.empty()) s += ',';
      s += std::to_string(v + 1);
    }
  return "{" + s + "}";
}

/// k-uniform hypergraphs on [n] where members must share at least t vertices.
class HypergraphSetting {
 public:
  HypergraphSetting(int n, int k, int t) : n_(n), k_(k), t_(t) {
    if (t < 1 || t > k) throw std::invalid_argument("hypergraph setting: need 1 <= t <= k");
    edges_ = enumerate_edges(n, k);
  }

  SettingKind kind() const { return SettingKind::hypergraph; }
  int n() const { return n_; }
  int k() const { return k_; }
  int t() const { return t_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(std::size_t r) const { return edges_[r]; }
  std::size_t rank_of(std::uint32_t mask) const { return static_cast<std::size_t>(rank_subset(mask)); }

  int agreement(std::size_t a, std::size_t b) const { return std::popcount(edges_[a].mask & edges_[b].mask); }

  Bitset signature(std::size_t a) const {
    Bitset s(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      if (edges_[a].mask >> v & 1U) s.set(static_cast<std::size_t>(v));
    return s;
  }
  std::size_t signature_bits() const { return static_cast<std::size_t>(n_); }
  int core_threshold() const { return t_; }

  /// Every t-subset of [n] is the core of one maximal star.
  std::vector<Bitset> trivial_cores() const {
    std::vector<Bitset> cores;
    for (auto m : all_subsets(n_, t_)) {
      Bitset c(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v)
        if (m >> v & 1U) c.set(static_cast<std::size_t>(v));
      cores.push_back(std::move(c));
    }
    return cores;
  }

  /// Bound on a minimal generating set of a maximal t-intersecting family:
  /// C(2(k-t)+1, k-t), which is C(2k,k)/2 when t = 1.
  std::uint64_t generating_set_bound() const { return binomial_u64(2 * (k_ - t_) + 1, k_ - t_); }

  std::string label(std::size_t r) const { return edge_label(edges_[r]); }

 private:
  int n_, k_, t_;
  std::vector<Edge> edges_;
};

/// Ahlswede-Khachatrian family {F : |F & [t+2]| >= t+1}.
inline Family build_h1(const HypergraphSetting& s) {
  const int n = s.n(), k = s.k(), t = s.t();
  if (n < k + 2 || k <= t) throw std::invalid_argument("build_h1: need n >= k+2 and k > t");
  const std::uint32_t head = (std::uint32_t{1} << (t + 2)) - 1;
  Family f(s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    if (std::popcount(s.edge(r).mask & head) >= t + 1) f.set(r);
  return f;
}

/// Hilton-Milner type family {F : [t] in F, F meets [t+1,k+1]} plus [k+1]\{i}, i <= t.
inline Family build_h2(const HypergraphSetting& s) {
  const int n = s.n(), k = s.k(), t = s.t();
  if (n < k + 1 || k <= t) throw std::invalid_argument("build_h2: need n >= k+1 and k > t");
  const std::uint32_t core = (std::uint32_t{1} << t) - 1;
  const std::uint32_t first_k1 = (std::uint32_t{1} << (k + 1)) - 1;
  const std::uint32_t middle = first_k1 & ~core;
  Family f(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) {
    const std::uint32_t m = s.edge(r).mask;
    if ((m & core) == core && (m & middle)) f.set(r);
  }
  for (int i = 0; i < t; ++i) f.set(s.rank_of(first_k1 & ~(std::uint32_t{1} << i)));
  return f;
}

/// |H1| = (t+2) C(n-t-2, k-t-1) + C(n-t-2, k-t-2).
inline BigCount h1_size(int n, int k, int t) {
  return BigCount(t + 2) * binomial(n - t - 2, k - t - 1) + binomial(n - t - 2, k - t - 2);
}

/// |H2| = C(n-t, k-t) - C(n-k-1, k-t) + t.
inline BigCount h2_size(int n, int k, int t) {
  return binomial(n - t, k - t) - binomial(n - k - 1, k - t) + t;
}

}  // namespace ekrlab
