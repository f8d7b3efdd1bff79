#include "seqbell/rng.hpp"

#include <limits>
#include <stdexcept>

namespace seqbell {

std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below requires n > 0");
    }
    // Reject draws beyond the largest multiple of n to stay unbiased.
    const std::uint64_t span = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t draw = engine_();
    while (draw >= span) {
        draw = engine_();
    }
    return draw % n;
}

} // namespace seqbell
