#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace fanfree {

inline constexpr int kMaxVertices = 512;

/// Fixed-width set of vertices in [0, kMaxVertices), one bit per vertex.
class VertexSet {
public:
  static constexpr int kWords = kMaxVertices / 64;
  using Word = std::uint64_t;

  constexpr VertexSet() = default;

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~Word{0} : ((Word{1} << n) - 1);
    return s;
  }

  constexpr bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  constexpr void set(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
  constexpr void reset(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  constexpr void assign(int v, bool on) { on ? set(v) : reset(v); }

  constexpr int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  constexpr bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  constexpr bool any() const { return !none(); }

  /// Smallest element, or -1 when empty.
  constexpr int first() const { return next(0); }

  /// Smallest element >= from, or -1.
  constexpr int next(int from) const {
    if (from >= kMaxVertices) return -1;
    int w = from >> 6;
    Word cur = words_[w] & (~Word{0} << (from & 63));
    while (true) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  constexpr int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  constexpr bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr VertexSet& operator^=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  const std::array<Word, kWords>& words() const { return words_; }

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

  private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

private:
  std::array<Word, kWords> words_{};
};

}  // namespace fanfree
