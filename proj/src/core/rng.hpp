#pragma once

#include <cstdint>
#include <random>

namespace df {

// Deterministic RNG used everywhere in the toolkit. All draws go through
// this wrapper instead of <random> distributions, whose output is not
// pinned down by the standard; bit-identical streams across platforms and
// library versions are required for reproducible output trees.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n). Lemire multiply-shift with rejection.
  uint64_t uniform_index(uint64_t n) {
    if (n == 0) return 0;
    while (true) {
      uint64_t x = engine_();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      uint64_t lo = static_cast<uint64_t>(m);
      if (lo >= n || lo >= static_cast<uint64_t>(-static_cast<int64_t>(n)) % n) {
        return static_cast<uint64_t>(m >> 64);
      }
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real01();
  }

  // Derives an independent stream, e.g. one per generated scene.
  static uint64_t derive(uint64_t seed, uint64_t index) {
    // splitmix64 finalizer over seed ^ golden-ratio-spaced index
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace df
