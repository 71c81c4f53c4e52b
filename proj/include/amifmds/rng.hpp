#pragma once

#include <array>
#include <cstdint>

namespace amifmds {

// SplitMix64; used for seeding and stream derivation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** with portable uniform and normal draws. Outputs are fully
// specified, unlike <random> distributions.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  // Independent generator for (seed, stream); streams never overlap in
  // practice since each one is seeded through SplitMix64 of a mixed key.
  static Xoshiro256 substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();

  // [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the Marsaglia polar method; the second variate of
  // each accepted pair is discarded.
  double normal();

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace amifmds
