#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "metrize/scalar.hpp"

namespace metrize {

// Subset of point indices over a fixed universe, stored as bit words.
class PointSubset {
public:
  PointSubset() = default;
  explicit PointSubset(size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  size_t universe() const { return universe_; }

  void insert(size_t i) {
    check(i);
    words_[i / 64] |= uint64_t{1} << (i % 64);
  }

  bool contains(size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1;
  }

  bool intersects(const PointSubset& o) const {
    size_t m = words_.size() < o.words_.size() ? words_.size() : o.words_.size();
    for (size_t w = 0; w < m; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  bool contains_all(const PointSubset& o) const {
    for (size_t w = 0; w < o.words_.size(); ++w) {
      uint64_t bits = o.words_[w];
      if (w >= words_.size() ? bits != 0 : (bits & ~words_[w]) != 0) return false;
    }
    return true;
  }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  std::vector<size_t> indices() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < universe_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  static PointSubset of(size_t universe, std::initializer_list<size_t> members) {
    PointSubset s(universe);
    for (size_t i : members) s.insert(i);
    return s;
  }

private:
  void check(size_t i) const {
    if (i >= universe_) throw Error("point index out of range");
  }

  size_t universe_ = 0;
  std::vector<uint64_t> words_;
};

// One level of a graded family of sets. A set on level `number` carries
// weight 2^-number in set-chain sums and level assignments.
struct FamilyLevel {
  int number = 0;
  bool per_point = false;  // sets[i] is the ball around point i
  std::vector<PointSubset> sets;
};

struct BallFamilies {
  size_t universe = 0;
  std::vector<FamilyLevel> levels;  // ascending by level number
};

}  // namespace metrize
