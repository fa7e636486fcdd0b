#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace frcheck {

using Vertex = int;
using EdgeIndex = int;

// Fixed-universe bitset over edge indices [0, universe).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return universe_; }

  bool contains(EdgeIndex e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(EdgeIndex e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(EdgeIndex e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const EdgeSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const EdgeSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  EdgeSet& operator&=(const EdgeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  EdgeSet& operator|=(const EdgeSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }

  // Ascending edge indices.
  std::vector<EdgeIndex> to_vector() const {
    std::vector<EdgeIndex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(static_cast<EdgeIndex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  static EdgeSet from_indices(int universe, const std::vector<EdgeIndex>& edges) {
    EdgeSet s(universe);
    for (auto e : edges) s.insert(e);
    return s;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  // Lexicographic order on the ascending index sequences.
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) {
    return a.to_vector() < b.to_vector();
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace frcheck
