#include "seqbell/concurrence.hpp"

#include <algorithm>
#include <cmath>

namespace seqbell {

double wootters_concurrence(const TwoQubitDensity& rho) {
    // sigma_y ⊗ sigma_y in the {gg, ge, eg, ee} basis (real form).
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;

    const Eigen::Matrix4cd& m = rho.matrix();
    const Eigen::Matrix4cd product = m * flip * m.conjugate() * flip;

    // product is similar to a PSD matrix, so its spectrum is real and
    // non-negative up to roundoff.
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, false);
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) {
        lambda[static_cast<std::size_t>(i)] =
            std::sqrt(std::max(0.0, solver.eigenvalues()(i).real()));
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

} // namespace seqbell
