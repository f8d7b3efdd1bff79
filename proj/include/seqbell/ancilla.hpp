#pragma once

#include <complex>
#include <span>
#include <vector>

namespace seqbell {

using Complex = std::complex<double>;

// Pure state of the shared two-mode ancilla holding a fixed particle total T.
// amp()[k] is the amplitude for k particles in the left mode (the right mode
// holds T - k), so the vector has length T + 1. States are immutable values;
// every operation returns a new, normalized state.
class AncillaState {
  public:
    // Stores the amplitudes normalized to unit norm.
    // Throws std::invalid_argument("zero state") if the input has zero norm.
    explicit AncillaState(std::vector<Complex> amplitudes);

    int total() const { return static_cast<int>(amp_.size()) - 1; }
    std::span<const Complex> amp() const { return amp_; }
    Complex amp(int left_count) const { return amp_[static_cast<std::size_t>(left_count)]; }
    double norm() const;

    // Copy with every |amplitude| < eps zeroed out, renormalized.
    // eps == 0 returns the state unchanged; bounds vector support growth in
    // long reused-ancilla runs at the cost of exactness.
    AncillaState truncated(double eps) const;

  private:
    std::vector<Complex> amp_;
};

// Two-mode condensate of n particles split evenly: amp[j] = sqrt(P_j) e^{i phi_j}
// with the binomial weights P_j = C(n, j) / 2^n. phases, when given, must have
// length n + 1; the default is all zero.
AncillaState make_bec_ancilla(int n_particles, std::span<const double> phases = {});

// Arbitrary ancilla from raw amplitudes (normalized on construction).
AncillaState make_custom_ancilla(std::vector<Complex> amplitudes);

// Number-state coherence gamma_c = sum_k amp[k] * conj(amp[k+1]). The next
// injected pair's reduced density matrix carries gamma_c / 2 on its
// (eg, ge) off-diagonal, so this is the pair coherence the ancilla will
// imprint; |gamma_c| <= 1 by Cauchy-Schwarz.
Complex next_pair_coherence(const AncillaState& ancilla);

} // namespace seqbell
