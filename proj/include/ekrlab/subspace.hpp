#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "setting.hpp"

namespace ekrlab {

/// Arithmetic in F_q for prime q through precomputed tables.
class PrimeField {
 public:
  explicit PrimeField(int q) : q_(q) {
    if (!is_prime(q) || q > 251) throw std::invalid_argument("PrimeField: q must be a prime below 256");
    const auto qq = static_cast<std::size_t>(q);
    add_.resize(qq * qq);
    mul_.resize(qq * qq);
    inv_.assign(qq, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[idx(a, b)] = static_cast<std::uint8_t>((a + b) % q);
        mul_[idx(a, b)] = static_cast<std::uint8_t>((a * b) % q);
        if ((a * b) % q == 1) inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
      }
  }
  int q() const { return q_; }
  std::uint8_t add(int a, int b) const { return add_[idx(a, b)]; }
  std::uint8_t sub(int a, int b) const { return add_[idx(a, neg(b))]; }
  std::uint8_t mul(int a, int b) const { return mul_[idx(a, b)]; }
  std::uint8_t neg(int a) const { return static_cast<std::uint8_t>((q_ - a) % q_); }
  std::uint8_t inv(int a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return inv_[static_cast<std::size_t>(a)];
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }
  int q_;
  std::vector<std::uint8_t> add_, mul_, inv_;
};

using Row = std::vector<std::uint8_t>;
using Matrix = std::vector<Row>;

/// Row-reduces in place; returns the rank.
inline int row_reduce(Matrix& m, const PrimeField& f) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const auto scale = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, scale);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const auto factor = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline int matrix_rank(Matrix m, const PrimeField& f) { return row_reduce(m, f); }

/// A k-dimensional subspace of F_q^n held by its reduced row-echelon basis.
class Subspace {
 public:
  Subspace(int n, int q, Matrix basis) : n_(n), q_(q), basis_(std::move(basis)) {
    const PrimeField f(q);
    for (const auto& r : basis_)
      if (static_cast<int>(r.size()) != n) throw std::invalid_argument("Subspace: row length differs from n");
    const int rank = row_reduce(basis_, f);
    if (rank != static_cast<int>(basis_.size())) throw std::invalid_argument("Subspace: basis rows are dependent");
  }

  int n() const { return n_; }
  int q() const { return q_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Matrix& basis() const { return basis_; }

  std::uint32_t pivot_mask() const {
    std::uint32_t m = 0;
    for (const auto& r : basis_)
      for (int c = 0; c < n_; ++c)
        if (r[static_cast<std::size_t>(c)]) {
          m |= std::uint32_t{1} << c;
          break;
        }
    return m;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int n_, q_;
  Matrix basis_;
};

inline constexpr std::uint64_t max_subspace_count = 10000;

/// Every k-dimensional subspace of F_q^n once. Order: pivot columns in
/// colex order, then free entries as a base-q odometer (row-major, last
/// entry fastest).
inline std::vector<Subspace> enumerate_subspaces(int n, int k, int q) {
  if (!is_prime(q)) throw std::invalid_argument("enumerate_subspaces: q must be prime");
  if (k < 1 || k > n || n > 30) throw std::invalid_argument("enumerate_subspaces: need 1 <= k <= n");
  if (gaussian_binomial(n, k, q) > max_subspace_count)
    throw std::invalid_argument("enumerate_subspaces: more than 10^4 subspaces");

  std::vector<Subspace> out;
  for (auto pivots : all_subsets(n, k)) {
    std::vector<int> pcol;
    for (int c = 0; c < n; ++c)
      if (pivots >> c & 1U) pcol.push_back(c);
    // Free positions: row i, column c > pcol[i], c not a pivot.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
      for (int c = pcol[static_cast<std::size_t>(i)] + 1; c < n; ++c)
        if (!(pivots >> c & 1U)) free.emplace_back(i, c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Matrix m(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pcol[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t j = 0; j < free.size(); ++j)
        m[static_cast<std::size_t>(free[j].first)][static_cast<std::size_t>(free[j].second)] = static_cast<std::uint8_t>(digits[j]);
      out.emplace_back(n, q, std::move(m));
      std::size_t j = free.size();
      while (j > 0 && digits[j - 1] == q - 1) digits[--j] = 0;
      if (j == 0) break;
      ++digits[j - 1];
    }
  }
  return out;
}

/// dim(U & V) = dim U + dim V - rank of the stacked bases.
inline int intersection_dim(const Subspace& u, const Subspace& v) {
  if (u.n() != v.n() || u.q() != v.q()) throw std::invalid_argument("intersection_dim: different ambient spaces");
  Matrix stacked = u.basis();
  stacked.insert(stacked.end(), v.basis().begin(), v.basis().end());
  return u.dim() + v.dim() - matrix_rank(std::move(stacked), PrimeField(u.q()));
}

inline std::string subspace_label(const Subspace& s) {
  std::string out = "<";
  for (std::size_t r = 0; r < s.basis().size(); ++r) {
    if (r) out += ';';
    for (auto x : s.basis()[r]) out += static_cast<char>('0' + x);
  }
  return out + ">";
}

/// Families of k-subspaces of F_q^n that pairwise meet in a nonzero vector.
/// Signatures are the sets of projective points each subspace contains.
class SubspaceSetting {
 public:
  SubspaceSetting(int n, int k, int q) : n_(n), k_(k), q_(q), field_(q) {
    if (k < 1 || k > n) throw std::invalid_argument("subspace setting: need 1 <= k <= n");
    subspaces_ = enumerate_subspaces(n, k, q);
    points_ = enumerate_subspaces(n, 1, q);
    std::map<std::uint64_t, std::size_t> point_index;
    for (std::size_t i = 0; i < points_.size(); ++i) point_index[encode(points_[i].basis()[0])] = i;

    std::uint64_t qk = 1;
    for (int i = 0; i < k; ++i) qk *= static_cast<std::uint64_t>(q);
    signatures_.reserve(subspaces_.size());
    for (const auto& s : subspaces_) {
      Bitset sig(points_.size());
      for (std::uint64_t c = 1; c < qk; ++c) {
        Row v(static_cast<std::size_t>(n), 0);
        std::uint64_t code = c;
        for (int r = 0; r < k; ++r) {
          const int coef = static_cast<int>(code % static_cast<std::uint64_t>(q));
          code /= static_cast<std::uint64_t>(q);
          if (!coef) continue;
          for (int j = 0; j < n; ++j)
            v[static_cast<std::size_t>(j)] = field_.add(v[static_cast<std::size_t>(j)], field_.mul(coef, s.basis()[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]));
        }
        sig.set(point_index.at(encode(normalise(v))));
      }
      signatures_.push_back(std::move(sig));
    }
    // dim <-> number of points: (q^d - 1)/(q - 1).
    std::uint64_t qd = 1;
    for (int d = 0; d <= k; ++d) {
      points_per_dim_.push_back((qd - 1) / static_cast<std::uint64_t>(q - 1));
      qd *= static_cast<std::uint64_t>(q);
    }
  }

  SettingKind kind() const { return SettingKind::subspace; }
  int n() const { return n_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int t() const { return 1; }
  std::size_t size() const { return subspaces_.size(); }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const Subspace& subspace(std::size_t r) const { return subspaces_[r]; }
  const std::vector<Subspace>& points() const { return points_; }

  /// dim(U & V), read off the number of shared projective points.
  int agreement(std::size_t a, std::size_t b) const {
    const auto shared = signatures_[a].intersection_count(signatures_[b]);
    for (int d = 0; d <= k_; ++d)
      if (points_per_dim_[static_cast<std::size_t>(d)] == shared) return d;
    throw std::logic_error("subspace agreement: point count is not a subspace size");
  }

  const Bitset& signature(std::size_t a) const { return signatures_[a]; }
  std::size_t signature_bits() const { return points_.size(); }
  int core_threshold() const { return 1; }

  /// One star per projective point.
  std::vector<Bitset> trivial_cores() const {
    std::vector<Bitset> cores;
    for (std::size_t p = 0; p < points_.size(); ++p) cores.push_back(Bitset(points_.size(), {p}));
    return cores;
  }

  /// C(2k-1, k-1).
  std::uint64_t generating_set_bound() const { return binomial_u64(2 * k_ - 1, k_ - 1); }

  std::string label(std::size_t r) const { return subspace_label(subspaces_[r]); }

 private:
  std::uint64_t encode(const Row& v) const {
    std::uint64_t code = 0;
    for (auto x : v) code = code * static_cast<std::uint64_t>(q_) + x;
    return code;
  }
  Row normalise(Row v) const {
    auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    const auto s = field_.inv(*it);
    for (auto& x : v) x = field_.mul(x, s);
    return v;
  }

  int n_, k_, q_;
  PrimeField field_;
  std::vector<Subspace> subspaces_;
  std::vector<Subspace> points_;
  std::vector<Bitset> signatures_;
  std::vector<std::uint64_t> points_per_dim_;
};

}  // namespace ekrlab
