#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "seqbell/ancilla.hpp"
#include "seqbell/basis.hpp"
#include "seqbell/schedule.hpp"

namespace seqbell {

// Brute-force state of (ancilla ⊗ all M pairs) before or during measurement,
// kept for small M only.
//
// Basis labels are (L, n-bits) where L is the total ancilla left-mode count
// and bit t of n-bits is pair t's excited-left flag (the first unmeasured
// pair occupies the most significant bit). Distinct (j, n) configurations
// with equal L land on the SAME basis state, so their coefficients are summed
// into a single amplitude: this merging is what encodes inter-pair
// entanglement. Storage is amp[L * 2^pairs_remaining + bits] with
// L in 0..n_ancilla+pairs_total.
class MultipartiteState {
  public:
    MultipartiteState(int n_ancilla, int pairs_total, int pairs_remaining,
                      std::vector<Complex> amp);

    int n_ancilla() const { return n_ancilla_; }
    int pairs_total() const { return pairs_total_; }
    int pairs_remaining() const { return pairs_remaining_; }
    int left_levels() const { return n_ancilla_ + pairs_total_ + 1; }

    Complex amp(int left_count, std::uint64_t bits) const;
    const std::vector<Complex>& raw() const { return amp_; }
    double norm() const;

  private:
    int n_ancilla_;
    int pairs_total_;
    int pairs_remaining_;
    std::vector<Complex> amp_; // unit norm
};

// Full pre-measurement state for an n-particle condensate and `pairs` injected
// pairs: the merged amplitude for (L, n) is sqrt(P_{L - popcount(n)} / 2^M)
// wherever 0 <= L - popcount(n) <= n_ancilla, else zero.
// Guard: (n_ancilla + 1) * 2^pairs must not exceed 1e6.
MultipartiteState build_full_state(int n_ancilla, int pairs);

// Projects the first remaining pair onto u_i ⊗ v_j. Returns the branch
// probability and, when it is nonzero, the normalized post state.
struct ProjectedBranch {
    double probability = 0.0;
    std::vector<Complex> amp; // empty when probability == 0
};
ProjectedBranch project_next_pair(const MultipartiteState& state, const MeasurementBasis& site_a,
                                  const MeasurementBasis& site_b, int outcome_a, int outcome_b);

// Distribution over complete outcome sequences. The key packs the outcome of
// pair t into bits [2t, 2t+1] using the OutcomeTable order
// (0: ++, 1: +-, 2: -+, 3: --), so schedules up to 32 pairs fit in the key.
struct OutcomeDistribution {
    std::map<std::uint64_t, double> p;

    double total() const;
};

double total_variation(const OutcomeDistribution& lhs, const OutcomeDistribution& rhs);

// Exact enumeration of all outcome sequences by depth-first sequential
// projection of the full multipartite state. Branches of exactly zero
// probability are pruned; no epsilon pruning.
OutcomeDistribution exact_outcome_distribution(const MultipartiteState& state,
                                               const BasisSchedule& schedule);

// The same distribution computed by the sequential inject/project recursion
// over ancilla-only states, i.e. the simulator's own kernel run exactly.
OutcomeDistribution sequential_outcome_distribution(const AncillaState& initial,
                                                    const BasisSchedule& schedule);

// Probability that a run with this schedule ends with C_{a'b'} > 0, computed
// from an exact outcome distribution. The schedule must contain at least one
// (a',b') entry.
double exact_violation_probability(const OutcomeDistribution& dist, const BasisSchedule& schedule);

} // namespace seqbell
