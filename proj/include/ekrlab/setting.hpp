#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitset.hpp"

namespace ekrlab {

enum class SettingKind { hypergraph, permutation, subspace };

inline std::string to_string(SettingKind k) {
  switch (k) {
    case SettingKind::hypergraph: return "hypergraph";
    case SettingKind::permutation: return "permutation";
    case SettingKind::subspace: return "subspace";
  }
  return "unknown";
}

/// A family is a set of object ranks of one setting.
using Family = Bitset;

/// A ground set of ranked objects with a t-agreement predicate.
///
/// Every object also carries a signature bitset (vertex set, pair
/// encoding, or point set) such that a family is trivial exactly when the
/// AND of its members' signatures has at least core_threshold() bits.
/// trivial_cores() lists the cores of the maximal trivial families.
template <class S>
concept Setting = requires(const S& s, std::size_t a, std::size_t b) {
  { s.kind() } -> std::same_as<SettingKind>;
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.t() } -> std::convertible_to<int>;
  { s.agreement(a, b) } -> std::convertible_to<int>;
  { s.signature(a) } -> std::convertible_to<Bitset>;
  { s.signature_bits() } -> std::convertible_to<std::size_t>;
  { s.core_threshold() } -> std::convertible_to<int>;
  { s.trivial_cores() } -> std::convertible_to<std::vector<Bitset>>;
  { s.generating_set_bound() } -> std::convertible_to<std::uint64_t>;
  { s.label(a) } -> std::convertible_to<std::string>;
};

template <Setting S>
bool agrees(const S& s, std::size_t a, std::size_t b) {
  return s.agreement(a, b) >= s.t();
}

template <Setting S>
Family empty_family(const S& s) {
  return Family(s.size());
}

template <Setting S>
Family full_family(const S& s) {
  return Family::full(s.size());
}

template <Setting S>
Family make_family(const S& s, const std::vector<std::size_t>& ranks) {
  Family f(s.size());
  for (auto r : ranks) {
    if (r >= s.size()) throw std::out_of_range("family member rank outside the ground set");
    f.set(r);
  }
  return f;
}

}  // namespace ekrlab
