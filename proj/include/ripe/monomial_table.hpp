#pragma once

#include <cassert>
#include <vector>

#include "ripe/core.hpp"

namespace ripe {

// Ragged 3-D coefficient table indexed (b, c, a) with b, c >= 0, b + c <= max_bc
// and a in [a_min, (max_bc - b - c) + a_extra]. Each (b, c) column is contiguous
// in a so the inner recursions stay cache-linear. a_min < 0 holds the ghost
// entries the derivative recursions reach.
template <class T>
class MonomialTable {
 public:
  MonomialTable() = default;
  MonomialTable(int max_bc, int a_min, int a_extra)
      : max_bc_(max_bc), a_min_(a_min), a_extra_(a_extra) {
    offsets_.resize(static_cast<size_t>(monomial_count(max_bc)) + 1);
    int off = 0;
    for (int b = 0; b <= max_bc; ++b)
      for (int c = 0; c <= max_bc - b; ++c) {
        offsets_[static_cast<size_t>(monomial_index(b, c, max_bc))] = off;
        off += a_max(b, c) - a_min_ + 1;
      }
    offsets_.back() = off;
    data_.assign(static_cast<size_t>(off), T{});
  }

  bool empty() const { return max_bc_ < 0; }
  int max_bc() const { return max_bc_; }
  int a_min() const { return a_min_; }
  int a_max(int b, int c) const { return max_bc_ - b - c + a_extra_; }

  bool contains(int b, int c, int a) const {
    return b >= 0 && c >= 0 && b + c <= max_bc_ && a >= a_min_ && a <= a_max(b, c);
  }

  T& at(int b, int c, int a) {
    assert(contains(b, c, a));
    return data_[index(b, c, a)];
  }
  const T& at(int b, int c, int a) const {
    assert(contains(b, c, a));
    return data_[index(b, c, a)];
  }

 private:
  size_t index(int b, int c, int a) const {
    return static_cast<size_t>(offsets_[static_cast<size_t>(monomial_index(b, c, max_bc_))] +
                               (a - a_min_));
  }

  int max_bc_ = -1, a_min_ = 0, a_extra_ = 0;
  std::vector<int> offsets_;
  std::vector<T> data_;
};

}  // namespace ripe
