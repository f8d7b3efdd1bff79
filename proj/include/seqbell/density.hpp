#pragma once

#include <Eigen/Dense>

#include "seqbell/ancilla.hpp"
#include "seqbell/joint.hpp"

namespace seqbell {

// Row/column order of every 4x4 pair matrix in this library.
inline constexpr int kGG = 0;
inline constexpr int kGE = 1;
inline constexpr int kEG = 2;
inline constexpr int kEE = 3;

// Validated 4x4 density matrix of one target pair in basis {gg, ge, eg, ee}.
// Construction enforces hermiticity (1e-12), unit trace (1e-12) and
// positive semidefiniteness (eigenvalues >= -1e-10).
class TwoQubitDensity {
  public:
    explicit TwoQubitDensity(const Eigen::Matrix4cd& matrix);

    const Eigen::Matrix4cd& matrix() const { return matrix_; }
    Complex entry(int row, int col) const { return matrix_(row, col); }

    // Real spectrum in ascending order.
    Eigen::Vector4d eigenvalues() const;

  private:
    Eigen::Matrix4cd matrix_;
};

// The one-parameter family produced by injection,
//   rho = 1/2 [[0,0,0,0], [0,1,g*,0], [0,g,1,0], [0,0,0,0]],
// i.e. an equal ge/eg mixture with coherence gamma between the branches.
// Throws std::invalid_argument("unphysical coherence") if |gamma| > 1.
TwoQubitDensity pair_density_matrix(Complex gamma);

// Partial trace of a joint state over the ancilla index. For any injected
// state this equals pair_density_matrix(next_pair_coherence(ancilla)).
TwoQubitDensity reduced_pair_density(const JointPairState& joint);

} // namespace seqbell
