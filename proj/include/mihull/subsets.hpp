#pragma once

#include <cstddef>
#include <vector>

namespace mihull {

/// Iterates size-r index subsets of [0, n) in lexicographic order.
class SubsetIter {
 public:
  SubsetIter(std::size_t n, std::size_t r) : n_(n), r_(r), idx_(r) {
    for (std::size_t i = 0; i < r; ++i) idx_[i] = i;
    done_ = r > n;
  }
  bool done() const { return done_; }
  const std::vector<std::size_t>& operator*() const { return idx_; }
  void next() {
    if (r_ == 0 || done_) {
      done_ = true;
      return;
    }
    std::size_t i = r_;
    while (i-- > 0) {
      if (idx_[i] < n_ - r_ + i) {
        ++idx_[i];
        for (std::size_t j = i + 1; j < r_; ++j) idx_[j] = idx_[j - 1] + 1;
        return;
      }
    }
    done_ = true;
  }

 private:
  std::size_t n_, r_;
  std::vector<std::size_t> idx_;
  bool done_ = false;
};

}  // namespace mihull
