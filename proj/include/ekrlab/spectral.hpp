#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "budget.hpp"
#include "combinatorics.hpp"
#include "conflict_graph.hpp"
#include "enumeration.hpp"
#include "hypergraph.hpp"

namespace ekrlab {

/// Smallest eigenvalue of a dense symmetric matrix (row-major, n x n) by
/// cyclic Jacobi rotations, swept until the off-diagonal mass is below
/// `tol` relative to the Frobenius norm.
inline double min_eigenvalue_symmetric(std::vector<double> a, std::size_t n, double tol = 1e-12) {
  if (a.size() != n * n) throw std::invalid_argument("min_eigenvalue_symmetric: matrix is not n x n");
  if (n == 0) throw std::invalid_argument("min_eigenvalue_symmetric: empty matrix");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double norm = 0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (std::sqrt(2 * off) <= tol * std::max(1.0, norm)) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double app = at(p, p), aqq = at(q, q);
        double* rp = &a[p * n];
        double* rq = &a[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k], y = rq[k];
          rp[k] = c * x - s * y;
          rq[k] = s * x + c * y;
        }
        rp[p] = c * c * app - 2 * c * s * apq + s * s * aqq;
        rq[q] = s * s * app + 2 * c * s * apq + c * c * aqq;
        rp[q] = rq[p] = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          at(k, p) = rp[k];
          at(k, q) = rq[k];
        }
      }
  }
  double lo = at(0, 0);
  for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, at(i, i));
  return lo;
}

/// Kneser graph KG(n,k): conflict graph of the intersecting setting.
inline ConflictGraph kneser_graph(int n, int k) { return build_conflict_graph(HypergraphSetting(n, k, 1)); }

struct SpectralReport {
  std::uint64_t vertices = 0;  // N = C(n,k)
  std::uint64_t degree = 0;    // D = C(n-k,k)
  std::int64_t lambda_min_closed = 0;
  double lambda_min_numeric = 0;
};

inline constexpr std::uint64_t max_spectral_vertices = 500;

/// Dense 0/1 adjacency matrix of KG(n,k), vertices in colex order. Works
/// for any n; subsets are held as sorted index lists.
inline std::vector<double> kneser_adjacency(int n, int k, std::size_t limit = max_spectral_vertices) {
  if (k < 1 || n < k) throw std::invalid_argument("kneser_adjacency: need 1 <= k <= n");
  if (binomial(n, k) > limit) throw std::invalid_argument("kneser_adjacency: too many vertices");
  std::vector<std::vector<int>> sets;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    sets.push_back(cur);
    // colex successor: bump the lowest element that can move up
    std::size_t i = 0;
    while (i + 1 < cur.size() && cur[i] + 1 == cur[i + 1]) ++i;
    if (cur[i] + 1 >= n) break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j) cur[j] = static_cast<int>(j);
  }
  const std::size_t N = sets.size();
  std::vector<double> a(N * N, 0.0);
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < N; ++i) {
    for (int x : sets[i]) mark[static_cast<std::size_t>(x)] = 1;
    for (std::size_t j = 0; j < N; ++j) {
      bool disjoint = true;
      for (int x : sets[j]) disjoint = disjoint && !mark[static_cast<std::size_t>(x)];
      if (disjoint) a[i * N + j] = 1.0;
    }
    for (int x : sets[i]) mark[static_cast<std::size_t>(x)] = 0;
  }
  return a;
}

/// Closed-form and numeric minimum eigenvalue of KG(n,k), n >= 2k.
inline SpectralReport spectral_report(int n, int k) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("spectral_report: need 1 <= k and n >= 2k");
  if (binomial(n, k) > max_spectral_vertices)
    throw std::invalid_argument("spectral_report: numeric eigenvalue limited to C(n,k) <= 500");
  SpectralReport r;
  r.vertices = binomial_u64(n, k);
  r.degree = binomial_u64(n - k, k);
  r.lambda_min_closed = -static_cast<std::int64_t>(binomial_u64(n - k - 1, k - 1));
  r.lambda_min_numeric = min_eigenvalue_symmetric(kneser_adjacency(n, k), r.vertices);
  return r;
}

/// Number of graph edges with both ends in S.
inline std::uint64_t induced_edges(const ConflictGraph& g, const Bitset& s) {
  std::uint64_t e = 0;
  s.for_each([&](std::size_t v) { e += g.conflicts[v].intersection_count(s); });
  return e / 2;
}

/// Expander-mixing lower bound D|S|^2/(2N) + lambda |S| (N - |S|)/(2N)
/// on the edges induced by a vertex set of size s in KG(n,k).
inline double mixing_lower_bound(int n, int k, std::uint64_t s) {
  const double N = to_double(binomial(n, k));
  const double D = to_double(binomial(n - k, k));
  const double lambda = -to_double(binomial(n - k - 1, k - 1));
  const double x = static_cast<double>(s);
  return D * x * x / (2 * N) + lambda * x * (N - x) / (2 * N);
}

/// beta = (1 - 1/(1+eps)) D n / (N (n-k)).
inline double supersaturation_density(int n, int k, double eps) {
  const double N = to_double(binomial(n, k));
  const double D = to_double(binomial(n - k, k));
  return (1 - 1 / (1 + eps)) * D * n / (N * (n - k));
}

/// Edges guaranteed inside any s-vertex set of KG(n,k) with s >= (1+eps) C(n-1,k-1).
inline double supersaturation_bound(int n, int k, double eps, std::uint64_t s) {
  if (!(eps > 0)) throw std::invalid_argument("supersaturation_bound: eps must be positive");
  if (static_cast<double>(s) < (1 + eps) * to_double(binomial(n - 1, k - 1)))
    throw std::invalid_argument("supersaturation_bound: s below (1+eps) C(n-1,k-1)");
  const double x = static_cast<double>(s);
  return supersaturation_density(n, k, eps) * x * (x - 1) / 2;
}

struct ContainerParams {
  double epsilon = 0;
  double R = 0;
  double beta = 0;
  double ell = 0;
  /// eps outside the (0, 1/20] range of the asymptotic argument.
  bool epsilon_outside_proof_range = false;
};

/// R = (1+eps) C(n-1,k-1), beta as in supersaturation, ell = ln(N/R)/beta.
inline ContainerParams container_params(int n, int k, double eps) {
  if (k < 2 || 2 * k > n - 1) throw std::invalid_argument("container_params: need 2 <= k <= (n-1)/2");
  if (!(eps > 0) || eps > 0.5) throw std::invalid_argument("container_params: need 0 < eps <= 1/2");
  ContainerParams p;
  p.epsilon = eps;
  p.epsilon_outside_proof_range = eps > 1.0 / 20;
  const double N = to_double(binomial(n, k));
  p.R = (1 + eps) * to_double(binomial(n - 1, k - 1));
  p.beta = supersaturation_density(n, k, eps);
  p.ell = std::log(N / p.R) / p.beta;
  return p;
}

struct ContainerSet {
  ContainerParams params;
  std::size_t fingerprint_cap = 0;  // ceil(ell)
  std::vector<Bitset> containers;   // over KG vertices, sorted, distinct
  std::size_t largest = 0;
};

/// Container of one independent set by the greedy fingerprint procedure:
/// take the maximum-degree survivor (lowest rank on ties); if it lies in
/// the set it joins the fingerprint and its neighbourhood is deleted,
/// otherwise it alone is deleted. Stops once fewer than R vertices survive
/// or the fingerprint reaches its cap. The result depends only on the
/// fingerprint.
inline Bitset container_of(const ConflictGraph& g, const Bitset& independent, double R, std::size_t cap) {
  Bitset alive = Bitset::full(g.size());
  Bitset fingerprint(g.size());
  std::size_t fp = 0;
  while (static_cast<double>(alive.count()) >= R && fp < cap) {
    std::size_t best = g.size(), best_deg = 0;
    alive.for_each([&](std::size_t v) {
      const auto d = g.conflicts[v].intersection_count(alive);
      if (best == g.size() || d > best_deg) best = v, best_deg = d;
    });
    if (independent.test(best)) {
      fingerprint.set(best);
      ++fp;
      alive.subtract(g.conflicts[best]);
      alive.reset(best);
    } else {
      alive.reset(best);
    }
  }
  return fingerprint | alive;
}

/// Containers for KG(n,k) generated from every maximal independent set, so
/// every independent set lies in one of them.
inline ContainerSet build_containers(int n, int k, double eps, Budget& budget) {
  ContainerSet out;
  out.params = container_params(n, k, eps);
  out.fingerprint_cap = static_cast<std::size_t>(std::ceil(out.params.ell));
  const auto g = kneser_graph(n, k);
  if (g.size() > 200) throw budget_exceeded("build_containers: Kneser graph too large to enumerate");
  std::set<Bitset> distinct;
  for (const auto& mis : maximal_independent_sets(g, budget)) {
    budget.tick("build_containers");
    distinct.insert(container_of(g, mis, out.params.R, out.fingerprint_cap));
  }
  out.containers.assign(distinct.begin(), distinct.end());
  for (const auto& c : out.containers) out.largest = std::max(out.largest, c.count());
  return out;
}

/// Upper bound R + ell log2(2e C(n,k)/ell) on log2 I(n,k).
inline double log_count_upper(int n, int k, double eps) {
  if (n < 2 * k + 1) throw std::invalid_argument("log_count_upper: need n >= 2k+1");
  const auto p = container_params(n, k, eps);
  const double N = to_double(binomial(n, k));
  return p.R + p.ell * std::log2(2 * std::exp(1.0) * N / p.ell);
}

/// The matching lower bound log2 I(n,k) >= C(n-1,k-1).
inline BigCount log_count_lower(int n, int k) { return binomial(n - 1, k - 1); }

}  // namespace ekrlab
