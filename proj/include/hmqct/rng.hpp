#pragma once

#include <cstdint>
#include <random>

namespace hmqct {

// Deterministic seeded generator. Wraps std::mt19937_64 but owns the
// value-level sampling (bounded ints, unit doubles) so that output streams
// are reproducible across standard libraries; std::uniform_*_distribution
// is implementation-defined and unsuitable for seeded golden runs.
//
// Sub-generators derive from (seed, stream index), never from evolved
// state, so parallel consumers get independent streams from one seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : identity_(mix(mix(seed ^ 0x9e3779b97f4a7c15ull, stream), stream + 1)),
        engine_(identity_) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform in [0, bound), bound >= 1. Lemire's multiply-shift with
  // rejection; exact uniformity (matters for chi-squared tests).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::uint32_t bit() { return static_cast<std::uint32_t>(next_u64() >> 63); }

  // Independent child stream; derivation depends only on this generator's
  // identity and the index, not on how much has been drawn.
  Rng derive(std::uint64_t stream_index) const {
    return Rng(identity_, stream_index + 1);
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t identity_;
  std::mt19937_64 engine_;
};

}  // namespace hmqct
