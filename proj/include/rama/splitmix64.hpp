#pragma once

#include <cstdint>

namespace rama {

// SplitMix64: the fixed 64-bit generator behind every seeded stream in this
// library (random Cayley sampling, eigensolver start vectors, hashing).
// All consumers advance a plain u64 state, so identical seeds reproduce
// identical results on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // unbiased draw from [0, bound) by rejection
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t u;
    do { u = next(); } while (u >= limit);
    return u % bound;
  }

  // uniform double in [-1, 1)
  double next_symmetric() {
    return static_cast<double>(next() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
  }
};

inline std::uint64_t splitmix64_mix(std::uint64_t x) {
  return SplitMix64{x}.next();
}

}  // namespace rama
