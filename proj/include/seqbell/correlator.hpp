#pragma once

#include "seqbell/ancilla.hpp"

namespace seqbell {

// Exact correlator E = <sigma_A sigma_B> for a pair in the
// pair_density_matrix(gamma) family measured at basis angles theta_a, theta_b:
//   E = -cos(2 theta_a) cos(2 theta_b) + Re(gamma) sin(2 theta_a) sin(2 theta_b).
// Throws std::invalid_argument("unphysical coherence") if |gamma| > 1.
double correlator_exact(Complex gamma, double theta_a, double theta_b);

struct CorrelatorSet {
    double ab = 0.0;
    double ab_prime = 0.0;
    double a_prime_b = 0.0;
    double a_prime_b_prime = 0.0;
};

// CHSH statistic S = | -C_ab + C_ab' + C_a'b + C_a'b' |.
double chsh_s(const CorrelatorSet& c);

} // namespace seqbell
