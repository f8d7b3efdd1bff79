#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqbell/ancilla.hpp"
#include "seqbell/correlator.hpp"
#include "seqbell/rng.hpp"
#include "seqbell/schedule.hpp"

namespace seqbell {

struct OutcomeCounts {
    std::int64_t n_pp = 0;
    std::int64_t n_pm = 0;
    std::int64_t n_mp = 0;
    std::int64_t n_mm = 0;

    std::int64_t same() const { return n_pp + n_mm; }
    std::int64_t diff() const { return n_pm + n_mp; }
    std::int64_t total() const { return same() + diff(); }
};

using ComboCounts = std::array<OutcomeCounts, 4>; // indexed by BasisCombo

// C = (n_same - n_diff) / (n_same + n_diff) per combination; disengaged for
// combinations with zero samples.
std::array<std::optional<double>, 4> compute_correlators(const ComboCounts& counts);

// Outcome record of one full experimental run of M pairs. Correlators exist
// only for sampled combinations; accessing an unsampled one (possible only
// with uniform schedules) throws std::runtime_error("unsampled correlator").
class RunRecord {
  public:
    static RunRecord from_counts(const ComboCounts& counts);

    const OutcomeCounts& counts(BasisCombo combo) const {
        return counts_[static_cast<std::size_t>(combo)];
    }
    std::int64_t total_count() const;

    bool has_correlator(BasisCombo combo) const {
        return correlators_[static_cast<std::size_t>(combo)].has_value();
    }
    bool complete() const; // all four combinations sampled

    double correlator(BasisCombo combo) const;
    CorrelatorSet correlators() const;
    double s_value() const;
    bool violated_chsh() const;    // S > 2
    bool violated_reduced() const; // C_{a'b'} > 0

  private:
    ComboCounts counts_{};
    std::array<std::optional<double>, 4> correlators_{};
    std::optional<double> s_value_;
};

// Optional per-pair trace of a run, for inspecting conditional evolution.
struct PairStep {
    BasisCombo combo;
    int outcome_a;
    int outcome_b;
    Complex gamma_after; // next_pair_coherence of the post-measurement ancilla
};

// One sequential run: for each schedule entry, inject the flying particle
// into the current ancilla, measure the pair, and carry the projected
// ancilla into the next pair. The ancilla total grows by exactly
// schedule.pairs() over the run. trunc_eps > 0 drops small amplitudes after
// each measurement (exact physics requires the default 0).
RunRecord run_experiment(const AncillaState& initial, const BasisSchedule& schedule, Rng& rng,
                         double trunc_eps = 0.0, std::vector<PairStep>* trace = nullptr);

// Independent-pairs reference: every pair is drawn i.i.d. from the single-pair
// Born distribution p(i,j) = (1 + i j E)/4 with E fixed by the initial
// condensate's coherence; no ancilla state is carried between pairs.
RunRecord run_experiment_fresh(int n_ancilla, const BasisSchedule& schedule, Rng& rng);

} // namespace seqbell
