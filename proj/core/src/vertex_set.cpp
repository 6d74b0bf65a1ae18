#include "errold/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace errold {
namespace {

std::size_t word_count(int universe) {
  return (static_cast<std::size_t>(universe) + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (const int tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::count() const {
  int total = 0;
  for (Word w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
  }
  return -1;
}

int VertexSet::next(int after) const {
  const int start = after + 1;
  if (start >= universe_) return -1;
  std::size_t i = static_cast<std::size_t>(start) / kWordBits;
  Word w = words_[i] & (~Word{0} << (static_cast<unsigned>(start) % kWordBits));
  while (true) {
    if (w != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(w);
    if (++i == words_.size()) return -1;
    w = words_[i];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int v : *this) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

int VertexSet::count_and(const VertexSet& a, const VertexSet& b) {
  int total = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) total += std::popcount(a.words_[i] & b.words_[i]);
  return total;
}

int VertexSet::count_and3(const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  int total = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    total += std::popcount(a.words_[i] & b.words_[i] & c.words_[i]);
  }
  return total;
}

int VertexSet::count_xor_and(const VertexSet& a, const VertexSet& b, const VertexSet& mask) {
  int total = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    total += std::popcount((a.words_[i] ^ b.words_[i]) & mask.words_[i]);
  }
  return total;
}

int VertexSet::count_andnot_and(const VertexSet& a, const VertexSet& b, const VertexSet& mask) {
  int total = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    total += std::popcount(a.words_[i] & ~b.words_[i] & mask.words_[i]);
  }
  return total;
}

}  // namespace errold
