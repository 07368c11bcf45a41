#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "setting.hpp"

namespace ekrlab {

/// Graph on a subset of a setting's objects with u ~ v iff they agree on
/// fewer than t. Independent sets are exactly the t-intersecting families.
/// Signatures travel with the graph so triviality can be decided without
/// the setting.
struct ConflictGraph {
  std::size_t ground_size = 0;     // size of the originating ground set
  std::vector<std::size_t> ranks;  // vertex -> object rank
  std::vector<Bitset> conflicts;   // over vertices, loopless
  std::vector<Bitset> compatible;  // complement of conflicts, loopless
  std::vector<Bitset> signatures;
  std::size_t signature_bits = 0;
  int core_threshold = 1;

  std::size_t size() const { return ranks.size(); }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& row : conflicts) e += row.count();
    return e / 2;
  }

  /// Vertex set -> family over the ground set.
  Family to_family(const Bitset& vertices) const {
    Family f(ground_size);
    vertices.for_each([&](std::size_t v) { f.set(ranks[v]); });
    return f;
  }

  bool is_trivial(const Bitset& vertices) const {
    Bitset core = Bitset::full(signature_bits);
    vertices.for_each([&](std::size_t v) { core &= signatures[v]; });
    return static_cast<int>(core.count()) >= core_threshold;
  }

  bool is_independent(const Bitset& vertices) const {
    bool ok = true;
    vertices.for_each([&](std::size_t v) { ok = ok && !conflicts[v].intersects(vertices); });
    return ok;
  }
};

/// Conflict graph induced on the given object ranks (all objects by default).
template <Setting S>
ConflictGraph build_conflict_graph(const S& s, std::vector<std::size_t> ranks) {
  ConflictGraph g;
  g.ground_size = s.size();
  g.ranks = std::move(ranks);
  const std::size_t n = g.ranks.size();
  g.conflicts.assign(n, Bitset(n));
  g.signatures.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.ranks[i] >= s.size()) throw std::out_of_range("conflict graph: rank outside ground set");
    g.signatures.push_back(s.signature(g.ranks[i]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!agrees(s, g.ranks[i], g.ranks[j])) {
        g.conflicts[i].set(j);
        g.conflicts[j].set(i);
      }
  g.compatible.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bitset c = ~g.conflicts[i];
    c.reset(i);
    g.compatible.push_back(std::move(c));
  }
  g.signature_bits = s.signature_bits();
  g.core_threshold = s.core_threshold();
  return g;
}

template <Setting S>
ConflictGraph build_conflict_graph(const S& s) {
  std::vector<std::size_t> all(s.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return build_conflict_graph(s, std::move(all));
}

template <Setting S>
ConflictGraph build_conflict_graph(const S& s, const Family& subset) {
  return build_conflict_graph(s, subset.to_vector());
}

}  // namespace ekrlab
