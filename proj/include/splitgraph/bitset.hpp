#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace splitgraph {

/// Fixed-width bitset over vertex ids [0, 64*Words). Graph code picks the
/// narrowest width whose capacity also covers the doubled order of a
/// splitting graph, so Words=1 handles every graph the exact solvers accept.
template <std::size_t Words>
class SmallBitset {
  static_assert(Words >= 1, "need at least one 64-bit word");

public:
  static constexpr int capacity() { return static_cast<int>(Words) * 64; }

  constexpr SmallBitset() = default;

  static SmallBitset single(int v) {
    SmallBitset s;
    s.set(v);
    return s;
  }

  /// {0, 1, ..., n-1}
  static SmallBitset full(int n) {
    assert(n >= 0 && n <= capacity());
    SmallBitset s;
    for (int i = 0; i < n / 64; ++i) s.w_[std::size_t(i)] = ~0ULL;
    if (n % 64 != 0) s.w_[std::size_t(n / 64)] = (1ULL << (n % 64)) - 1;
    return s;
  }

  /// Low word set from an integer mask; members are the set bits of `bits`.
  static SmallBitset from_word(std::uint64_t bits) {
    SmallBitset s;
    s.w_[0] = bits;
    return s;
  }

  bool test(int v) const {
    assert(in_range(v));
    return (w_[word_of(v)] >> bit_of(v)) & 1u;
  }
  void set(int v) {
    assert(in_range(v));
    w_[word_of(v)] |= mask_of(v);
  }
  void reset(int v) {
    assert(in_range(v));
    w_[word_of(v)] &= ~mask_of(v);
  }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (std::uint64_t x : w_)
      if (x != 0) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Smallest member, or -1 when empty.
  int find_first() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w_[i] != 0) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  /// Smallest member strictly greater than v, or -1. v = -1 is allowed.
  int find_next(int v) const {
    ++v;
    if (v >= capacity()) return -1;
    if (v < 0) v = 0;
    std::size_t i = word_of(v);
    std::uint64_t cur = w_[i] & (~0ULL << bit_of(v));
    if (cur != 0) return int(i * 64) + std::countr_zero(cur);
    for (++i; i < Words; ++i)
      if (w_[i] != 0) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  bool any_above(int v) const { return find_next(v) >= 0; }

  bool intersects(const SmallBitset& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((w_[i] & o.w_[i]) != 0) return true;
    return false;
  }

  bool is_subset_of(const SmallBitset& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((w_[i] & ~o.w_[i]) != 0) return false;
    return true;
  }

  SmallBitset& operator|=(const SmallBitset& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  SmallBitset& operator&=(const SmallBitset& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  SmallBitset& operator^=(const SmallBitset& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend SmallBitset operator|(SmallBitset a, const SmallBitset& b) { return a |= b; }
  friend SmallBitset operator&(SmallBitset a, const SmallBitset& b) { return a &= b; }
  friend SmallBitset operator^(SmallBitset a, const SmallBitset& b) { return a ^= b; }

  /// this \ o
  SmallBitset minus(const SmallBitset& o) const {
    SmallBitset r = *this;
    for (std::size_t i = 0; i < Words; ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }

  /// {0,...,n-1} \ this
  SmallBitset complement(int n) const { return full(n).minus(*this); }

  bool operator==(const SmallBitset&) const = default;

  std::uint64_t word(std::size_t i) const { return w_[i]; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(std::size_t(count()));
    for (int v = find_first(); v >= 0; v = find_next(v)) out.push_back(v);
    return out;
  }

private:
  static bool in_range(int v) { return v >= 0 && v < capacity(); }
  static std::size_t word_of(int v) { return std::size_t(v) >> 6; }
  static int bit_of(int v) { return v & 63; }
  static std::uint64_t mask_of(int v) { return 1ULL << bit_of(v); }

  std::array<std::uint64_t, Words> w_{};
};

/// Three-way compare of the sorted member sequences in dictionary order:
/// {0,3} < {0,5} < {1,2}, and a proper prefix sorts first ({0} < {0,3}).
/// This is the tie-breaking order for all reported witness sets.
template <std::size_t Words>
int compare_sets(const SmallBitset<Words>& a, const SmallBitset<Words>& b) {
  for (std::size_t i = 0; i < Words; ++i) {
    std::uint64_t d = a.word(i) ^ b.word(i);
    if (d == 0) continue;
    const int idx = int(i * 64) + std::countr_zero(d);
    const bool in_a = a.test(idx);
    const SmallBitset<Words>& other = in_a ? b : a;
    if (other.any_above(idx)) return in_a ? -1 : 1;
    return in_a ? 1 : -1;  // `other` is a proper prefix
  }
  return 0;
}

template <std::size_t Words>
bool set_less(const SmallBitset<Words>& a, const SmallBitset<Words>& b) {
  return compare_sets(a, b) < 0;
}

}  // namespace splitgraph
