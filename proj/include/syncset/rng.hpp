#pragma once

#include <cstdint>

namespace syncset {

/// SplitMix64 (Steele, Lea & Flood): one mixing round per output over a
/// 64-bit counter. Chosen for the seeded generators because the stream for a
/// given seed is identical on every platform and compiler, which the verify
/// harness relies on when it reports failing seeds.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound); bound must be at least 1. Rejection
  /// sampling keeps the draw exactly uniform without platform-dependent
  /// distribution code.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) built from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

}  // namespace syncset
