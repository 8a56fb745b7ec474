#pragma once

#include <cstdint>

namespace specnet {

// SplitMix64 (Steele, Lea, Flood 2014). This is the project's only source of
// randomness; every randomized routine takes an explicit 64-bit seed and two
// runs with the same seed produce identical streams on every platform.
// Stream version: 1 (documented in the README so traces stay reproducible).
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound), bound >= 1, by rejection.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform on the inclusive range [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + (long long)below((uint64_t)(hi - lo) + 1);
  }

  double unit() { return (next() >> 11) * 0x1.0p-53; }
};

}  // namespace specnet
