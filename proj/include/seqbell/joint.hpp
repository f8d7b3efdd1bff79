#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "seqbell/ancilla.hpp"
#include "seqbell/basis.hpp"
#include "seqbell/rng.hpp"

namespace seqbell {

class Rng;

// Entangled state of (ancilla ⊗ one freshly injected target pair):
//   sum_m ( amp_eg[m] |m>|eg> + amp_ge[m] |m>|ge> )
// where m is the ancilla left-mode count after injection. The eg branch means
// the left target is excited, so the flying particle joined the left ancilla
// mode: amp_eg[0] = 0 and amp_ge[total] = 0 always hold.
class JointPairState {
  public:
    JointPairState(std::vector<Complex> amp_eg, std::vector<Complex> amp_ge);

    int total() const { return static_cast<int>(amp_eg_.size()) - 1; }
    std::span<const Complex> amp_eg() const { return amp_eg_; }
    std::span<const Complex> amp_ge() const { return amp_ge_; }
    double norm() const;

  private:
    std::vector<Complex> amp_eg_;
    std::vector<Complex> amp_ge_;
};

// Coherent injection of the flying particle into the same-side ancilla mode:
// |j, T-j> ⊗ (flying pair) -> (|j+1, T-j>|eg> + |j, T-j+1>|ge>) / sqrt(2).
// The result has ancilla total T + 1 and exactly preserves the norm.
JointPairState inject(const AncillaState& ancilla);

struct OutcomeBranch {
    int outcome_a = 0; // ±1
    int outcome_b = 0; // ±1
    double probability = 0.0;
    std::optional<AncillaState> post; // engaged iff probability > 0
};

// Born-rule table for a projective joint measurement, entries in the fixed
// order (+,+), (+,-), (-,+), (-,-). Probabilities sum to 1.
class OutcomeTable {
  public:
    explicit OutcomeTable(std::array<OutcomeBranch, 4> branches) : branches_(std::move(branches)) {}

    static int index(int outcome_a, int outcome_b) {
        return (outcome_a > 0 ? 0 : 2) + (outcome_b > 0 ? 0 : 1);
    }

    const OutcomeBranch& branch(int outcome_a, int outcome_b) const {
        return branches_[static_cast<std::size_t>(index(outcome_a, outcome_b))];
    }
    const std::array<OutcomeBranch, 4>& branches() const { return branches_; }
    double total_probability() const;

  private:
    std::array<OutcomeBranch, 4> branches_;
};

// Projects the pair of the joint state onto u_i ⊗ v_j for all four outcome
// combinations. The projected ancilla amplitude is
//   A_m(i,j) = <u_i|e><v_j|g> amp_eg[m] + <u_i|g><v_j|e> amp_ge[m],
// p(i,j) = sum_m |A_m|^2 and the post ancilla is A normalized.
OutcomeTable outcome_distribution(const JointPairState& joint, const MeasurementBasis& site_a,
                                  const MeasurementBasis& site_b);

struct PairMeasurement {
    int outcome_a;
    int outcome_b;
    AncillaState post;
};

// Samples one outcome from outcome_distribution(joint, ...) and returns it
// together with the projected ancilla. Zero-probability branches are never
// selected.
PairMeasurement measure_pair(const JointPairState& joint, const MeasurementBasis& site_a,
                             const MeasurementBasis& site_b, Rng& rng);

} // namespace seqbell
