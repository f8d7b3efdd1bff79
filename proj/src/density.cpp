#include "seqbell/density.hpp"

#include <cmath>
#include <stdexcept>

namespace seqbell {

TwoQubitDensity::TwoQubitDensity(const Eigen::Matrix4cd& matrix) : matrix_(matrix) {
    const double hermiticity_gap = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (hermiticity_gap > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(matrix_,
                                                           Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

Eigen::Vector4d TwoQubitDensity::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

TwoQubitDensity pair_density_matrix(Complex gamma) {
    if (std::abs(gamma) > 1.0 + 1e-12) {
        throw std::invalid_argument("unphysical coherence");
    }
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(kGE, kGE) = 0.5;
    rho(kEG, kEG) = 0.5;
    rho(kEG, kGE) = 0.5 * gamma;
    rho(kGE, kEG) = 0.5 * std::conj(gamma);
    return TwoQubitDensity(rho);
}

TwoQubitDensity reduced_pair_density(const JointPairState& joint) {
    const auto eg = joint.amp_eg();
    const auto ge = joint.amp_ge();
    double p_eg = 0.0;
    double p_ge = 0.0;
    Complex cross(0.0, 0.0); // <eg| rho |ge>
    for (std::size_t m = 0; m < eg.size(); ++m) {
        p_eg += std::norm(eg[m]);
        p_ge += std::norm(ge[m]);
        cross += eg[m] * std::conj(ge[m]);
    }
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(kEG, kEG) = p_eg;
    rho(kGE, kGE) = p_ge;
    rho(kEG, kGE) = cross;
    rho(kGE, kEG) = std::conj(cross);
    return TwoQubitDensity(rho);
}

} // namespace seqbell
