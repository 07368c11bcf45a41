#pragma once

// Brute-force reference implementations. They never touch conflict graphs,
// signatures or the search code: agreement comes from the raw objects
// (vertex masks, permutation images, spans listed vector by vector).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ekrlab/ekrlab.hpp"

namespace oracle {

using Agree = std::function<bool(std::size_t, std::size_t)>;
using TrivialTest = std::function<bool(const std::vector<std::size_t>&)>;

struct Ground {
  std::size_t size = 0;
  Agree agree;
  TrivialTest trivial;  // may be empty when only counts are needed
};

struct Census {
  std::vector<std::uint64_t> by_size;
  std::uint64_t total = 0;
  std::uint64_t trivial = 0;
  std::vector<std::uint32_t> maximal;  // subsets of the ground list, ascending
  std::size_t max_size = 0;
  std::size_t max_nontrivial = 0;
};

inline std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

/// Visits all 2^N subsets of the ground list.
inline Census exhaustive(const Ground& g) {
  if (g.size > 24) throw std::invalid_argument("oracle: ground list too large");
  const std::size_t n = g.size;
  std::vector<std::uint32_t> compat(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j || g.agree(i, j)) compat[i] |= std::uint32_t{1} << j;

  Census c;
  c.by_size.assign(n + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    bool ok = true;
    for (auto v : members(mask)) {
      if ((compat[v] & mask) != mask) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    ++c.total;
    ++c.by_size[size];
    c.max_size = std::max(c.max_size, size);
    bool extendable = false;
    for (std::size_t v = 0; v < n && !extendable; ++v)
      if (!(mask >> v & 1) && (compat[v] & mask) == mask) extendable = true;
    if (!extendable) c.maximal.push_back(mask);
    if (g.trivial) {
      if (g.trivial(members(mask))) ++c.trivial;
      else c.max_nontrivial = std::max(c.max_nontrivial, size);
    }
  }
  while (c.by_size.size() > 1 && c.by_size.back() == 0) c.by_size.pop_back();
  return c;
}

// --- grounds built from raw objects ----------------------------------------

inline Ground hypergraph_ground(const std::vector<std::uint32_t>& edges, int t) {
  Ground g;
  g.size = edges.size();
  g.agree = [edges, t](std::size_t a, std::size_t b) { return std::popcount(edges[a] & edges[b]) >= t; };
  g.trivial = [edges, t](const std::vector<std::size_t>& f) {
    std::uint32_t core = ~std::uint32_t{0};
    for (auto m : f) core &= edges[m];
    return std::popcount(core) >= t;
  };
  return g;
}

inline Ground permutation_ground(const std::vector<ekrlab::Perm>& perms, int t) {
  Ground g;
  g.size = perms.size();
  g.agree = [perms, t](std::size_t a, std::size_t b) {
    int fixed = 0;
    for (int i = 0; i < perms[a].n(); ++i) fixed += perms[a](i) == perms[b](i);
    return fixed >= t;
  };
  g.trivial = [perms, t](const std::vector<std::size_t>& f) {
    if (f.empty()) return true;
    int shared = 0;
    for (int i = 0; i < perms[f[0]].n(); ++i) {
      bool all = true;
      for (auto m : f) all = all && perms[m](i) == perms[f[0]](i);
      shared += all;
    }
    return shared >= t;
  };
  return g;
}

/// All vectors of span(U), each encoded base q.
inline std::set<std::uint64_t> span(const ekrlab::Subspace& u) {
  const auto q = static_cast<std::uint64_t>(u.q());
  const auto n = static_cast<std::size_t>(u.n());
  std::set<std::uint64_t> out;
  std::uint64_t combos = 1;
  for (int i = 0; i < u.dim(); ++i) combos *= q;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::vector<std::uint64_t> v(n, 0);
    std::uint64_t code = c;
    for (const auto& row : u.basis()) {
      const std::uint64_t coef = code % q;
      code /= q;
      for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + coef * row[j]) % q;
    }
    std::uint64_t enc = 0;
    for (auto x : v) enc = enc * q + x;
    out.insert(enc);
  }
  return out;
}

/// dim(U & V) from the number of shared vectors, q^dim.
inline int meet_dim(const std::set<std::uint64_t>& u, const std::set<std::uint64_t>& v, int q) {
  std::size_t shared = 0;
  for (auto x : u) shared += v.count(x);
  int d = 0;
  for (std::size_t s = 1; s < shared; s *= static_cast<std::size_t>(q)) ++d;
  return d;
}

inline Ground subspace_ground(const std::vector<ekrlab::Subspace>& subs) {
  Ground g;
  g.size = subs.size();
  std::vector<std::set<std::uint64_t>> spans;
  for (const auto& s : subs) spans.push_back(span(s));
  const int q = subs.empty() ? 2 : subs[0].q();
  g.agree = [spans, q](std::size_t a, std::size_t b) { return meet_dim(spans[a], spans[b], q) >= 1; };
  g.trivial = [spans](const std::vector<std::size_t>& f) {
    if (f.empty()) return true;
    for (auto x : spans[f[0]]) {
      if (x == 0) continue;
      bool all = true;
      for (auto m : f) all = all && spans[m].count(x);
      if (all) return true;
    }
    return false;
  };
  return g;
}

inline Ground ground_of(const ekrlab::HypergraphSetting& s) {
  std::vector<std::uint32_t> edges;
  for (const auto& e : s.edges()) edges.push_back(e.mask);
  return hypergraph_ground(edges, s.t());
}

inline Ground ground_of(const ekrlab::PermutationSetting& s) { return permutation_ground(s.perms(), s.t()); }

inline Ground ground_of(const ekrlab::SubspaceSetting& s) { return subspace_ground(s.subspaces()); }

/// Restricts a ground to the listed indices, keeping their order.
inline Ground restrict(const Ground& g, const std::vector<std::size_t>& idx) {
  Ground r;
  r.size = idx.size();
  r.agree = [g, idx](std::size_t a, std::size_t b) { return g.agree(idx[a], idx[b]); };
  if (g.trivial)
    r.trivial = [g, idx](const std::vector<std::size_t>& f) {
      std::vector<std::size_t> mapped;
      for (auto m : f) mapped.push_back(idx[m]);
      return g.trivial(mapped);
    };
  return r;
}

/// Oracle maximal families as library Families (ground = whole setting).
template <class S>
std::vector<ekrlab::Family> maximal_families(const S& s, const Census& c) {
  std::vector<ekrlab::Family> out;
  for (auto m : c.maximal) {
    ekrlab::Family f(s.size());
    for (auto v : members(m)) f.set(v);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
