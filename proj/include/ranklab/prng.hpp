#pragma once

// SplitMix64: tiny, splittable, reproducible across platforms.  Used
// wherever a seeded stream must be independent of thread scheduling; the
// per-sample rule is documented in report headers.

#include <cstdint>

namespace ranklab {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform on [lo, hi] by rejection; unbiased and implementation-independent
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = ~0ull - (~0ull % span);
    std::uint64_t u;
    do {
      u = next();
    } while (u >= limit);
    return lo + static_cast<long>(u % span);
  }
};

// stream seed for sample #index under a master seed; the constant is the
// SplitMix64 increment, so distinct indices land in distinct streams
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master + 0x9E3779B97F4A7C15ull * (index + 1));
  return g.next();
}

}  // namespace ranklab
