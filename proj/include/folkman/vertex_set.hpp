#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#ifndef FOLKMAN_BITSET_WORDS
#define FOLKMAN_BITSET_WORDS 1
#endif

namespace folkman {

inline constexpr std::size_t kBitsetWords = FOLKMAN_BITSET_WORDS;
inline constexpr std::size_t kMaxVertices = 64 * kBitsetWords;

static_assert(kBitsetWords >= 1, "bitset needs at least one word");

/// Fixed-width set of vertex indices in [0, kMaxVertices).
class VertexSet {
 public:
  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kBitsetWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  constexpr void insert(int v) { words_[word(v)] |= bit(v); }
  constexpr void erase(int v) { words_[word(v)] &= ~bit(v); }
  constexpr bool contains(int v) const { return (words_[word(v)] & bit(v)) != 0; }

  constexpr std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  constexpr int first() const {
    for (std::size_t w = 0; w < kBitsetWords; ++w)
      if (words_[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  /// Removes and returns the smallest member; the set must be nonempty.
  constexpr int pop_first() {
    for (std::size_t w = 0; w < kBitsetWords; ++w) {
      if (words_[w] != 0) {
        const int v = static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        words_[w] &= words_[w] - 1;
        return v;
      }
    }
    return -1;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < kBitsetWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < kBitsetWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < kBitsetWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < kBitsetWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Every member shifted up by `offset`; members pushed past the width are dropped.
  constexpr VertexSet shifted(std::size_t offset) const {
    VertexSet out;
    for_each([&](int v) {
      if (static_cast<std::size_t>(v) + offset < kMaxVertices)
        out.insert(static_cast<int>(v + offset));
    });
    return out;
  }

 private:
  static constexpr std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63u); }

  std::array<std::uint64_t, kBitsetWords> words_{};
};

}  // namespace folkman
