#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace egcert {

// Bitset over the vertex universe 0..universe-1. Graphs up to 64 vertices
// keep their sets in a single inline word; larger universes spill to the heap.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    const_iterator(const VertexSet* set, int v) : set_(set), v_(v) {}

    int operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits), 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }
  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1U) != 0;
  }
  void insert(int v) { words_[word(v)] |= Word{1} << bit(v); }
  void erase(int v) { words_[word(v)] &= ~(Word{1} << bit(v)); }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member, or -1.
  int first() const { return scan_from(0); }
  // Smallest member strictly greater than v, or -1.
  int next(int v) const { return scan_from(v + 1); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }

  // Ordering of the sorted member lists (lexicographic), used for tie-breaking.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first();
    int y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  static std::size_t word(int v) { return static_cast<std::size_t>(v / kWordBits); }
  static int bit(int v) { return v % kWordBits; }

  int scan_from(int v) const {
    if (v >= universe_) return -1;
    std::size_t w = word(v);
    Word cur = words_[w] & (~Word{0} << bit(v));
    while (true) {
      if (cur != 0) return static_cast<int>(w) * kWordBits + std::countr_zero(cur);
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

}  // namespace egcert
