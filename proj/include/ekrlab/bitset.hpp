#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ekrlab {

/// Runtime-sized bitset. Families, conflict-graph rows and object
/// signatures are all stored this way so that membership algebra is
/// word-parallel.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}
  Bitset(std::size_t size, std::initializer_list<std::size_t> bits) : Bitset(size) {
    for (auto b : bits) set(b);
  }

  static Bitset full(std::size_t size) {
    Bitset b(size);
    std::fill(b.words_.begin(), b.words_.end(), ~word_type{0});
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  Bitset& set(std::size_t i) {
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
    return *this;
  }
  Bitset& reset(std::size_t i) {
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    return *this;
  }
  Bitset& clear() {
    std::fill(words_.begin(), words_.end(), 0);
    return *this;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  /// Index of the lowest set bit strictly above i, or size().
  std::size_t next(std::size_t i) const noexcept {
    ++i;
    if (i >= size_) return size_;
    std::size_t w = i / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (i % word_bits));
    while (true) {
      if (cur) return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return size_;
      cur = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type cur = words_[w];
      while (cur) {
        f(w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& operator&=(const Bitset& o) {
    check(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    check(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    check(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    check(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  Bitset operator~() const {
    Bitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a.subtract(b); }

  std::size_t intersection_count(const Bitset& o) const {
    check(o);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    return c;
  }
  bool intersects(const Bitset& o) const {
    check(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    check(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  /// Orders by size, then by the highest differing bit (colex on members).
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t w = a.words_.size(); w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }
  void trim() {
    if (size_ % word_bits && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
  }
  void check(const Bitset& o) const {
    if (o.size_ != size_) throw std::invalid_argument("bitset size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace ekrlab
