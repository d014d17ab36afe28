#pragma once

#include <cstdint>

#include "supervar/rational.hpp"

namespace supervar {

/// SplitMix64 (Steele/Lea/Flood 2014). All randomness in the library flows
/// through this generator from a single 64-bit seed, so every sampled
/// artifact is reproducible bit-for-bit across platforms.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Uses rejection to stay unbiased.
  uint64_t below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// Nonzero rational with small numerator and denominator; the test and
  /// sampling code never needs anything fancier.
  Rat nonzero_rat() {
    long num = range(1, 9);
    if (below(2)) num = -num;
    long den = range(1, 3);
    return rat(num, den);
  }

  Rat any_rat() {
    long num = range(-9, 9);
    long den = range(1, 3);
    return rat(num, den);
  }
};

}  // namespace supervar
