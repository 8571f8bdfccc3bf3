#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>

namespace crochet {

/// Fixed-capacity set of vertex indices in [0, 128), stored as two machine words.
class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;

  static constexpr VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < 2; ++w) {
      int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static constexpr VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr void insert(int v) { words_[v >> 6] |= bit(v); }
  constexpr void erase(int v) { words_[v >> 6] &= ~bit(v); }
  constexpr bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

  constexpr int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Smallest element, or -1 when empty.
  constexpr int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  constexpr bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr bool is_subset_of(const VertexSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  constexpr VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::array<std::uint64_t, 2> words) : rest_(words) {}
    constexpr int operator*() const {
      return rest_[0] != 0 ? std::countr_zero(rest_[0]) : 64 + std::countr_zero(rest_[1]);
    }
    constexpr iterator& operator++() {
      if (rest_[0] != 0) {
        rest_[0] &= rest_[0] - 1;
      } else {
        rest_[1] &= rest_[1] - 1;
      }
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.rest_ == b.rest_; }

   private:
    std::array<std::uint64_t, 2> rest_{};
  };

  constexpr iterator begin() const { return iterator(words_); }
  constexpr iterator end() const { return iterator(); }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, 2> words_{};
};

}  // namespace crochet
