#include "seqbell/correlator.hpp"

#include <cmath>
#include <stdexcept>

namespace seqbell {

double correlator_exact(Complex gamma, double theta_a, double theta_b) {
    if (std::abs(gamma) > 1.0 + 1e-12) {
        throw std::invalid_argument("unphysical coherence");
    }
    return -std::cos(2.0 * theta_a) * std::cos(2.0 * theta_b) +
           gamma.real() * std::sin(2.0 * theta_a) * std::sin(2.0 * theta_b);
}

double chsh_s(const CorrelatorSet& c) {
    return std::abs(-c.ab + c.ab_prime + c.a_prime_b + c.a_prime_b_prime);
}

} // namespace seqbell
