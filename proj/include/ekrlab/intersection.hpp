#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "setting.hpp"

namespace ekrlab {

/// I(F): every ground object that agrees with all members of F.
/// The closure of the empty family is the whole ground set.
template <Setting S>
Family closure(const S& s, const Family& f) {
  Family out(s.size());
  const auto members = f.to_vector();
  for (std::size_t g = 0; g < s.size(); ++g) {
    bool ok = true;
    for (auto m : members)
      if (!agrees(s, g, m)) {
        ok = false;
        break;
      }
    if (ok) out.set(g);
  }
  return out;
}

template <Setting S>
bool is_intersecting(const S& s, const Family& f) {
  const auto members = f.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!agrees(s, members[i], members[j])) return false;
  return true;
}

template <Setting S>
bool is_maximal(const S& s, const Family& f) {
  return closure(s, f) == f;
}

struct TrivialityVerdict {
  bool trivial = false;
  /// Signature bits shared by every member (all bits for the empty family).
  Bitset core;
};

template <Setting S>
TrivialityVerdict triviality(const S& s, const Family& f) {
  Bitset core = Bitset::full(s.signature_bits());
  f.for_each([&](std::size_t m) { core &= s.signature(m); });
  const bool trivial = static_cast<int>(core.count()) >= s.core_threshold();
  return {trivial, std::move(core)};
}

template <Setting S>
bool is_trivial(const S& s, const Family& f) {
  return triviality(s, f).trivial;
}

/// The star of a core: all objects whose signature contains it.
template <Setting S>
Family star(const S& s, const Bitset& core) {
  Family f(s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    if (core.is_subset_of(s.signature(r))) f.set(r);
  return f;
}

/// A generating set of a maximal family together with its minimality
/// certificate: witnesses[i] agrees with every generator except the i-th.
struct GeneratingSet {
  Family family;
  Family generators;
  std::vector<std::size_t> generator_list;
  std::vector<std::size_t> witnesses;
};

/// Greedy minimal generating set: scan members in rank order and drop any
/// whose removal leaves the closure unchanged.
template <Setting S>
GeneratingSet minimal_generating_set(const S& s, const Family& f) {
  if (!is_maximal(s, f)) throw std::invalid_argument("minimal_generating_set: family is not maximal");
  Family gens = f;
  f.for_each([&](std::size_t m) {
    gens.reset(m);
    if (closure(s, gens) != f) gens.set(m);
  });

  GeneratingSet out{f, gens, gens.to_vector(), {}};
  for (auto g : out.generator_list) {
    Family rest = gens;
    rest.reset(g);
    const Family extra = closure(s, rest) - f;
    if (extra.none()) throw std::logic_error("minimal_generating_set: generator without witness");
    out.witnesses.push_back(extra.first());
  }
  return out;
}

/// Checks the skew cross-agreement pattern: witness i agrees with
/// generator j iff i != j.
template <Setting S>
bool witnesses_are_skew(const S& s, const GeneratingSet& g) {
  for (std::size_t i = 0; i < g.witnesses.size(); ++i)
    for (std::size_t j = 0; j < g.generator_list.size(); ++j)
      if (agrees(s, g.witnesses[i], g.generator_list[j]) != (i != j)) return false;
  return true;
}

}  // namespace ekrlab
