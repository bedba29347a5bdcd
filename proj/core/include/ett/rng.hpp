#pragma once

#include "ett/parallel.hpp"

namespace ett {

// splitmix64: the portable 64-bit generator used everywhere a reproducible
// stream is needed. Instances are cheap; one per generated artifact.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Lemire's multiply-shift with a
  // rejection pass keeps the distribution exact and the stream portable.
  u64 next_below(u64 bound) {
    u64 x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    u64 lo = static_cast<u64>(m);
    if (lo < bound) {
      u64 threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<u64>(m);
      }
    }
    return static_cast<u64>(m >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  i64 next_in(i64 lo, i64 hi) {
    return lo + static_cast<i64>(next_below(static_cast<u64>(hi - lo + 1)));
  }

 private:
  u64 state_;
};

}  // namespace ett
