#pragma once

#include <cstdint>

namespace cig {

// splitmix64: the one deterministic PRNG used for every seeded run.
// Identical output on every platform, which the reproducibility contracts rely on.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (b * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull));
  return g.next();
}

}  // namespace cig
