#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace errold {

// Fixed-universe bitset over vertex ids 0..universe()-1. All binary
// operations require both operands to share the same universe size.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, const std::vector<int>& members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }

  bool contains(int v) const {
    return (words_[static_cast<unsigned>(v) / kWordBits] >> (static_cast<unsigned>(v) % kWordBits)) & 1U;
  }
  void insert(int v) { words_[static_cast<unsigned>(v) / kWordBits] |= Word{1} << (static_cast<unsigned>(v) % kWordBits); }
  void erase(int v) { words_[static_cast<unsigned>(v) / kWordBits] &= ~(Word{1} << (static_cast<unsigned>(v) % kWordBits)); }
  void clear();

  int count() const;
  bool empty() const;
  bool is_subset_of(const VertexSet& other) const;
  // Smallest member, or -1 when empty.
  int first() const;
  int next(int after) const;

  std::vector<int> to_vector() const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  // Popcounts of combined sets without materialising them.
  static int count_and(const VertexSet& a, const VertexSet& b);
  static int count_and3(const VertexSet& a, const VertexSet& b, const VertexSet& c);
  static int count_xor_and(const VertexSet& a, const VertexSet& b, const VertexSet& mask);
  static int count_andnot_and(const VertexSet& a, const VertexSet& b, const VertexSet& mask);

  const std::vector<Word>& words() const { return words_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}
    int operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace errold
