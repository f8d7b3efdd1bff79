#include "seqbell/run.hpp"

#include <stdexcept>
#include <string>

#include "seqbell/joint.hpp"

namespace seqbell {

namespace {

void tally(OutcomeCounts& counts, int outcome_a, int outcome_b) {
    if (outcome_a > 0) {
        (outcome_b > 0 ? counts.n_pp : counts.n_pm) += 1;
    } else {
        (outcome_b > 0 ? counts.n_mp : counts.n_mm) += 1;
    }
}

[[noreturn]] void throw_unsampled(BasisCombo combo) {
    throw std::runtime_error(std::string("unsampled correlator: ") + combo_name(combo));
}

} // namespace

std::array<std::optional<double>, 4> compute_correlators(const ComboCounts& counts) {
    std::array<std::optional<double>, 4> correlators;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const OutcomeCounts& c = counts[idx];
        if (c.total() > 0) {
            correlators[idx] = static_cast<double>(c.same() - c.diff()) /
                               static_cast<double>(c.total());
        }
    }
    return correlators;
}

RunRecord RunRecord::from_counts(const ComboCounts& counts) {
    RunRecord record;
    record.counts_ = counts;
    record.correlators_ = compute_correlators(counts);
    if (record.complete()) {
        record.s_value_ = chsh_s(record.correlators());
    }
    return record;
}

std::int64_t RunRecord::total_count() const {
    std::int64_t sum = 0;
    for (const OutcomeCounts& c : counts_) {
        sum += c.total();
    }
    return sum;
}

bool RunRecord::complete() const {
    for (const auto& c : correlators_) {
        if (!c.has_value()) {
            return false;
        }
    }
    return true;
}

double RunRecord::correlator(BasisCombo combo) const {
    const auto& value = correlators_[static_cast<std::size_t>(combo)];
    if (!value.has_value()) {
        throw_unsampled(combo);
    }
    return *value;
}

CorrelatorSet RunRecord::correlators() const {
    return {correlator(BasisCombo::AB), correlator(BasisCombo::ABPrime),
            correlator(BasisCombo::APrimeB), correlator(BasisCombo::APrimeBPrime)};
}

double RunRecord::s_value() const {
    if (!s_value_.has_value()) {
        for (BasisCombo combo : kAllCombos) {
            if (!has_correlator(combo)) {
                throw_unsampled(combo);
            }
        }
    }
    return *s_value_;
}

bool RunRecord::violated_chsh() const {
    return s_value() > 2.0;
}

bool RunRecord::violated_reduced() const {
    return correlator(BasisCombo::APrimeBPrime) > 0.0;
}

RunRecord run_experiment(const AncillaState& initial, const BasisSchedule& schedule, Rng& rng,
                         double trunc_eps, std::vector<PairStep>* trace) {
    ComboCounts counts{};
    AncillaState ancilla = initial;
    for (BasisCombo combo : schedule.entries) {
        const auto [site_a, site_b] = combo_bases(combo);
        PairMeasurement result = measure_pair(inject(ancilla), site_a, site_b, rng);
        tally(counts[static_cast<std::size_t>(combo)], result.outcome_a, result.outcome_b);
        ancilla = trunc_eps > 0.0 ? result.post.truncated(trunc_eps) : std::move(result.post);
        if (trace != nullptr) {
            trace->push_back(
                {combo, result.outcome_a, result.outcome_b, next_pair_coherence(ancilla)});
        }
    }
    return RunRecord::from_counts(counts);
}

RunRecord run_experiment_fresh(int n_ancilla, const BasisSchedule& schedule, Rng& rng) {
    const Complex gamma = next_pair_coherence(make_bec_ancilla(n_ancilla));

    // Per-combination Born weights p(i,j) = (1 + i*j*E) / 4, fixed for the
    // whole run because every pair sees an identical fresh condensate.
    std::array<std::array<double, 4>, 4> weights{};
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const auto [site_a, site_b] = combo_bases(kAllCombos[idx]);
        const double e = correlator_exact(gamma, site_a.theta, site_b.theta);
        weights[idx] = {0.25 * (1.0 + e), 0.25 * (1.0 - e), 0.25 * (1.0 - e), 0.25 * (1.0 + e)};
    }

    ComboCounts counts{};
    for (BasisCombo combo : schedule.entries) {
        const auto& w = weights[static_cast<std::size_t>(combo)];
        const double u = rng.uniform();
        double remaining = u;
        std::size_t pick = 0;
        bool found = false;
        for (std::size_t idx = 0; idx < 4; ++idx) {
            if (w[idx] <= 0.0) {
                continue;
            }
            pick = idx;
            found = true;
            if (remaining < w[idx]) {
                break;
            }
            remaining -= w[idx];
        }
        if (!found) {
            throw std::logic_error("degenerate outcome weights");
        }
        OutcomeCounts& c = counts[static_cast<std::size_t>(combo)];
        tally(c, pick < 2 ? +1 : -1, pick % 2 == 0 ? +1 : -1);
    }
    return RunRecord::from_counts(counts);
}

} // namespace seqbell
