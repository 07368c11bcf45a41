#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "budget.hpp"
#include "combinatorics.hpp"
#include "conflict_graph.hpp"
#include "hypergraph.hpp"
#include "intersection.hpp"

namespace ekrlab {

// ---------------------------------------------------------------------------
// Independence polynomial

/// coefficients[m] = number of intersecting families with m members.
struct IndependencePolynomial {
  std::vector<BigCount> coefficients;

  BigCount total() const {
    BigCount s = 0;
    for (const auto& c : coefficients) s += c;
    return s;
  }
  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  friend bool operator==(const IndependencePolynomial&, const IndependencePolynomial&) = default;
};

inline constexpr std::size_t max_counting_vertices = 64;

namespace detail {

using Poly = std::vector<BigCount>;

inline void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// Branch on a maximum-degree vertex, factor over connected components,
/// memoise per component vertex set. With by_size off, polynomials are
/// evaluated at x = 1 and carry a single coefficient.
class IndependenceCounter {
 public:
  IndependenceCounter(std::vector<std::uint64_t> adj, bool by_size, Budget& budget)
      : adj_(std::move(adj)), by_size_(by_size), budget_(budget) {}

  Poly count(std::uint64_t mask) {
    if (mask == 0) return {1};
    Poly result{1};
    while (mask) {
      const std::uint64_t comp = component(mask);
      mask &= ~comp;
      result = mul(result, count_connected(comp));
    }
    return result;
  }

 private:
  std::uint64_t component(std::uint64_t mask) const {
    std::uint64_t seen = mask & (~mask + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t fresh = adj_[static_cast<std::size_t>(v)] & mask & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen;
  }

  Poly times_x(Poly p) const {
    if (!by_size_) return p;
    p.insert(p.begin(), BigCount(0));
    return p;
  }

  Poly count_connected(std::uint64_t comp) {
    if (std::popcount(comp) == 1) return by_size_ ? Poly{1, 1} : Poly{2};
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    budget_.tick("count_families");

    int best = -1, best_deg = -1;
    for (std::uint64_t m = comp; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(adj_[static_cast<std::size_t>(v)] & comp);
      if (d > best_deg) best_deg = d, best = v;
    }
    const std::uint64_t bit = std::uint64_t{1} << best;
    Poly without = count(comp & ~bit);
    Poly with = times_x(count(comp & ~bit & ~adj_[static_cast<std::size_t>(best)]));
    Poly r = add(without, with);
    memo_.emplace(comp, r);
    return r;
  }

  std::vector<std::uint64_t> adj_;
  bool by_size_;
  Budget& budget_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

}  // namespace detail

/// Exact counts of independent sets of the conflict graph (intersecting
/// families). Graphs above 64 vertices are refused with budget_exceeded.
inline IndependencePolynomial count_families(const ConflictGraph& g, bool by_size, Budget& budget) {
  if (g.size() > max_counting_vertices)
    throw budget_exceeded("count_families: at most 64 objects can be counted exactly");
  std::vector<std::uint64_t> adj(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) adj[v] = g.conflicts[v].size() ? g.conflicts[v].words()[0] : 0;
  detail::IndependenceCounter counter(std::move(adj), by_size, budget);
  const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
  return IndependencePolynomial{counter.count(all)};
}

template <Setting S>
IndependencePolynomial count_families(const S& s, bool by_size, Budget& budget) {
  if (s.size() > max_counting_vertices)
    throw budget_exceeded("count_families: at most 64 objects can be counted exactly");
  return count_families(build_conflict_graph(s), by_size, budget);
}

// ---------------------------------------------------------------------------
// Maximal families

/// Maximal independent sets of the conflict graph (maximal cliques of the
/// compatibility graph) by Bron-Kerbosch with Tomita pivoting.
inline std::vector<Bitset> maximal_independent_sets(const ConflictGraph& g, Budget& budget) {
  const std::size_t n = g.size();
  std::vector<Bitset> out;
  Bitset r(n);
  auto recurse = [&](auto&& self, Bitset& cur, Bitset p, Bitset x) -> void {
    budget.tick("enumerate_maximal");
    if (p.none()) {
      if (x.none()) out.push_back(cur);
      return;
    }
    std::size_t pivot = n, best = 0;
    (p | x).for_each([&](std::size_t u) {
      const auto c = p.intersection_count(g.compatible[u]);
      if (pivot == n || c > best) pivot = u, best = c;
    });
    const Bitset todo = p - g.compatible[pivot];
    todo.for_each([&](std::size_t v) {
      cur.set(v);
      self(self, cur, p & g.compatible[v], x & g.compatible[v]);
      cur.reset(v);
      p.reset(v);
      x.set(v);
    });
  };
  recurse(recurse, r, Bitset::full(n), Bitset(n));
  std::sort(out.begin(), out.end());
  return out;
}

/// All maximal intersecting families of a setting, each checked to be a
/// fixed point of the closure operator.
template <Setting S>
std::vector<Family> enumerate_maximal(const S& s, Budget& budget) {
  const auto g = build_conflict_graph(s);
  std::vector<Family> out;
  for (const auto& v : maximal_independent_sets(g, budget)) {
    Family f = g.to_family(v);
    if (!is_maximal(s, f)) throw std::logic_error("enumerate_maximal: family is not closed");
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximum families

struct ExtremalResult {
  std::size_t size = 0;
  Bitset vertices;  // over graph vertices
};

namespace detail {

/// Branch-and-bound maximum clique in the compatibility graph with greedy
/// colouring bounds. In non-trivial mode, once the current clique is
/// trivial only vertices that cut its core are branched on, since any
/// non-trivial extension must contain one of them.
class CliqueSearch {
 public:
  CliqueSearch(const ConflictGraph& g, bool nontrivial, std::size_t floor, Budget& budget)
      : g_(g), nontrivial_(nontrivial), best_size_(floor), budget_(budget), current_(g.size()) {}

  std::optional<ExtremalResult> run() {
    Bitset core = Bitset::full(g_.signature_bits);
    expand(Bitset::full(g_.size()), core, 0);
    if (!found_) return std::nullopt;
    return ExtremalResult{best_size_, best_};
  }

 private:
  bool core_is_trivial(const Bitset& core) const { return static_cast<int>(core.count()) >= g_.core_threshold; }

  void colour(const Bitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bitset uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bitset q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        uncoloured.reset(v);
        q.subtract(g_.compatible[v]);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void record(std::size_t size) {
    best_size_ = size;
    best_ = current_;
    found_ = true;
  }

  void expand(Bitset p, const Bitset& core, std::size_t size) {
    budget_.tick(nontrivial_ ? "max_nontrivial_size" : "max_family_size");
    const bool trivial = core_is_trivial(core);
    if (size > best_size_ && (!nontrivial_ || !trivial)) record(size);
    if (p.none()) return;

    std::vector<std::size_t> order, bound;
    colour(p, order, bound);
    if (size + bound.back() <= best_size_) return;

    if (nontrivial_ && trivial) {
      // Skipped vertices stay in p, so per-position colour bounds do not apply here.
      for (std::size_t i = order.size(); i-- > 0;) {
        const std::size_t v = order[i];
        if (core.is_subset_of(g_.signatures[v])) continue;
        Bitset next = p & g_.compatible[v];
        if (size + 1 + next.count() > best_size_) {
          current_.set(v);
          expand(std::move(next), core & g_.signatures[v], size + 1);
          current_.reset(v);
        }
        p.reset(v);
      }
      return;
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_size_) return;
      const std::size_t v = order[i];
      current_.set(v);
      expand(p & g_.compatible[v], nontrivial_ ? core & g_.signatures[v] : core, size + 1);
      current_.reset(v);
      p.reset(v);
    }
  }

  const ConflictGraph& g_;
  bool nontrivial_;
  std::size_t best_size_;
  Budget& budget_;
  Bitset current_;
  Bitset best_;
  bool found_ = false;
};

}  // namespace detail

/// Largest independent set of the conflict graph.
inline ExtremalResult max_family(const ConflictGraph& g, Budget& budget) {
  if (g.size() == 0) return {0, Bitset(0)};
  detail::CliqueSearch search(g, false, 0, budget);
  return *search.run();
}

/// Largest non-trivial independent set strictly larger than `floor`, if any.
inline std::optional<ExtremalResult> max_nontrivial_family(const ConflictGraph& g, Budget& budget,
                                                           std::size_t floor = 0) {
  detail::CliqueSearch search(g, true, floor, budget);
  auto r = search.run();
  if (r && (g.is_trivial(r->vertices) || !g.is_independent(r->vertices)))
    throw std::logic_error("max_nontrivial_family: verification of the reported family failed");
  return r;
}

template <Setting S>
std::size_t max_family_size(const S& s, Budget& budget) {
  return max_family(build_conflict_graph(s), budget).size;
}

/// Size of the largest non-trivial intersecting family; 0 when none exists.
template <Setting S>
std::size_t max_nontrivial_size(const S& s, Budget& budget) {
  const auto r = max_nontrivial_family(build_conflict_graph(s), budget);
  return r ? r->size : 0;
}

// ---------------------------------------------------------------------------
// Trivial families

/// Number of trivial hypergraph families, |U_S P(star(S))| over t-sets S,
/// by inclusion-exclusion grouped on the union U of the chosen cores:
///   sum_u C(n,u) g(u) 2^{C(n-u, k-u)},
/// where g(u) is the signed number of core collections covering a u-set.
inline BigCount count_trivial(const HypergraphSetting& s) {
  const int n = s.n(), k = s.k(), t = s.t();
  // h(u) = sum over nonempty collections of t-subsets of [u] of (-1)^{|J|+1}.
  auto h = [&](int u) { return u >= t ? BigCount(1) : BigCount(0); };
  BigCount total = 0;
  for (int u = t; u <= n; ++u) {
    BigCount g = 0;
    for (int w = 0; w <= u; ++w) {
      const BigCount term = binomial(u, w) * h(w);
      if ((u - w) % 2) g -= term;
      else g += term;
    }
    if (g == 0) continue;
    const BigCount inter = binomial(n - u, k - u);
    total += binomial(n, u) * g * pow2(static_cast<std::uint64_t>(inter));
  }
  return total;
}

/// Number of trivial families by direct enumeration: a depth-first walk
/// that extends a family only while its common core stays large enough.
/// Also counts the empty family.
template <Setting S>
BigCount count_trivial_enumerated(const S& s, Budget& budget) {
  std::vector<Bitset> sig;
  sig.reserve(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) sig.push_back(s.signature(r));
  const auto thr = static_cast<std::size_t>(s.core_threshold());
  std::uint64_t count = 1;
  auto walk = [&](auto&& self, std::size_t from, const Bitset& core) -> void {
    budget.tick("count_trivial");
    for (std::size_t j = from; j < sig.size(); ++j) {
      if (core.intersection_count(sig[j]) < thr) continue;
      ++count;
      self(self, j + 1, core & sig[j]);
    }
  };
  walk(walk, 0, Bitset::full(s.signature_bits()));
  return BigCount(count);
}

inline constexpr std::size_t max_star_intersections = 1 << 20;

/// Number of trivial families as |U_i P(T_i)| over the maximal trivial
/// families T_i, by inclusion-exclusion accumulated over the distinct
/// intersections of stars. Falls back to direct enumeration when the
/// intersection lattice grows past max_star_intersections.
template <Setting S>
BigCount count_trivial(const S& s, Budget& budget) {
  if constexpr (std::is_same_v<S, HypergraphSetting>) {
    return count_trivial(s);
  } else {
    std::unordered_map<Bitset, BigCount, BitsetHash> terms;
    bool overflow = false;
    for (const auto& core : s.trivial_cores()) {
      const Family st = star(s, core);
      std::unordered_map<Bitset, BigCount, BitsetHash> fresh;
      fresh[st] += 1;
      for (const auto& [x, c] : terms) fresh[x & st] -= c;
      for (auto& [x, c] : fresh) terms[x] += c;
      std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
      budget.tick("count_trivial");
      if (terms.size() > max_star_intersections) {
        overflow = true;
        break;
      }
    }
    if (overflow) return count_trivial_enumerated(s, budget);
    BigCount total = 0;
    for (const auto& [x, c] : terms) total += c * pow2(x.count());
    return total;
  }
}

}  // namespace ekrlab
