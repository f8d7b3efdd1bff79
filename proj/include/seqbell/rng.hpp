#pragma once

#include <cstdint>
#include <random>

namespace seqbell {

// SplitMix64 finalizer over the state master_seed + (index + 1) * golden gamma.
// This is the fixed per-run seed derivation contract: run r of an ensemble is
// seeded with mix_seed(master_seed, r), independent of worker count or
// execution order.
std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t index);

// Deterministic random stream (mt19937_64) with locale-free helpers.
// Distributions are drawn manually from raw engine output so sequences are
// identical on every platform, unlike std::uniform_*_distribution.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace seqbell
