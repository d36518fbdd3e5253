#pragma once

#include <cstdint>

namespace spectraux {

// SplitMix64 (Steele, Lea & Flood 2014). The state advances by a fixed odd
// constant and each output is a bijective hash of the state, so the stream
// for a given seed is identical on every platform and in every language that
// implements the same three mixing steps. All instance generation flows
// through this class; nothing in the project uses the platform default RNG.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), from the top 53 bits.
  constexpr double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi], both inclusive. Requires lo <= hi and a
  // span that fits in uint64. Reduction is a plain modulus so the mapping
  // stays trivially portable.
  constexpr std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1ULL;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream for sub-entity `index` of a base seed
// (per-operator or per-instance substreams).
constexpr std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 rng(base + 0x632BE59BD9B4E019ULL * (index + 1));
  return rng.next();
}

}  // namespace spectraux
