#include "seqbell/ancilla.hpp"

#include <cmath>
#include <stdexcept>

namespace seqbell {

namespace {

double squared_norm(const std::vector<Complex>& amplitudes) {
    double sum = 0.0;
    for (const Complex& c : amplitudes) {
        sum += std::norm(c);
    }
    return sum;
}

// sqrt(C(n, j) / 2^n). Exact 64-bit binomials cover n <= 62; larger n go
// through lgamma, whose absolute error is negligible against the binomial
// spread there.
double bec_amplitude(int n, int j) {
    if (n <= 62) {
        std::uint64_t binom = 1;
        for (int i = 0; i < std::min(j, n - j); ++i) {
            binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
        }
        return std::sqrt(static_cast<double>(binom)) * std::exp2(-0.5 * n);
    }
    const double log_p = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) -
                         n * std::log(2.0);
    return std::exp(0.5 * log_p);
}

} // namespace

AncillaState::AncillaState(std::vector<Complex> amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.empty()) {
        throw std::invalid_argument("zero state");
    }
    const double n2 = squared_norm(amp_);
    if (n2 <= 0.0) {
        throw std::invalid_argument("zero state");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& c : amp_) {
        c *= inv;
    }
}

double AncillaState::norm() const {
    return std::sqrt(squared_norm(amp_));
}

AncillaState AncillaState::truncated(double eps) const {
    if (eps <= 0.0) {
        return *this;
    }
    std::vector<Complex> kept = amp_;
    for (Complex& c : kept) {
        if (std::abs(c) < eps) {
            c = Complex(0.0, 0.0);
        }
    }
    return AncillaState(std::move(kept)); // throws "zero state" if eps wiped everything
}

AncillaState make_bec_ancilla(int n_particles, std::span<const double> phases) {
    if (n_particles < 0) {
        throw std::invalid_argument("particle number must be non-negative");
    }
    if (!phases.empty() && phases.size() != static_cast<std::size_t>(n_particles) + 1) {
        throw std::invalid_argument("phase sequence must have length n_particles + 1");
    }
    std::vector<Complex> amp(static_cast<std::size_t>(n_particles) + 1);
    for (int j = 0; j <= n_particles; ++j) {
        const double magnitude = bec_amplitude(n_particles, j);
        if (phases.empty()) {
            amp[static_cast<std::size_t>(j)] = Complex(magnitude, 0.0);
        } else {
            amp[static_cast<std::size_t>(j)] =
                std::polar(magnitude, phases[static_cast<std::size_t>(j)]);
        }
    }
    return AncillaState(std::move(amp));
}

AncillaState make_custom_ancilla(std::vector<Complex> amplitudes) {
    return AncillaState(std::move(amplitudes));
}

Complex next_pair_coherence(const AncillaState& ancilla) {
    const auto amp = ancilla.amp();
    Complex sum(0.0, 0.0);
    for (std::size_t k = 0; k + 1 < amp.size(); ++k) {
        sum += amp[k] * std::conj(amp[k + 1]);
    }
    return sum;
}

} // namespace seqbell
