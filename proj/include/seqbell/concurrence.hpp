#pragma once

#include "seqbell/density.hpp"

namespace seqbell {

// Wootters concurrence C(rho) = max(0, l1 - l2 - l3 - l4), where the l_i are
// the decreasingly ordered square roots of the eigenvalues of
// rho (sigma_y ⊗ sigma_y) rho* (sigma_y ⊗ sigma_y).
// Equals |gamma| on the pair_density_matrix family.
double wootters_concurrence(const TwoQubitDensity& rho);

} // namespace seqbell
