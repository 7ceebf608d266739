#pragma once

#include <cstdint>

namespace crgeo {

// SplitMix64: tiny, fast, and fully specified, so streams are reproducible
// across platforms and thread counts. Every sampling task derives one
// substream per attempt index via mix(seed, index); results therefore do not
// depend on how attempts are scheduled over threads.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  static uint64_t mix(uint64_t a, uint64_t b) {
    SplitMix64 s(a ^ (0x9e3779b97f4a7c15ull + (b << 1)));
    s.next();
    return s.next() ^ b;
  }
};

}  // namespace crgeo
