#pragma once

#include <cstdint>

namespace mihull {

/// splitmix64; deterministic across platforms, unlike <random> distributions.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  long in(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace mihull
