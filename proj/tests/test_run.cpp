#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "seqbell/run.hpp"

using namespace seqbell;

namespace {

BasisSchedule repeat(BasisCombo combo, int times) {
    BasisSchedule schedule;
    schedule.entries.assign(static_cast<std::size_t>(times), combo);
    return schedule;
}

} // namespace

TEST_CASE("correlators are same-minus-diff fractions of the counts") {
    ComboCounts counts{};
    counts[0] = {0, 3, 1, 0};  // all opposite -> C = -1
    counts[1] = {3, 1, 0, 0};  // C = (3 - 1) / 4
    counts[2] = {2, 1, 1, 2};  // C = (4 - 2) / 6
    // counts[3] left empty
    const auto correlators = compute_correlators(counts);
    CHECK(correlators[0].value() == -1.0);
    CHECK(correlators[1].value() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(correlators[2].value() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_FALSE(correlators[3].has_value());

    const RunRecord record = RunRecord::from_counts(counts);
    CHECK(record.correlator(BasisCombo::AB) == -1.0);
    CHECK_FALSE(record.complete());
}

TEST_CASE("occupation-basis runs anticorrelate exactly") {
    // Large condensate standing in for the macroscopic limit.
    const AncillaState condensate = make_bec_ancilla(10000);
    Rng rng(67);
    const RunRecord record = run_experiment(condensate, repeat(BasisCombo::AB, 8), rng);
    CHECK(record.correlator(BasisCombo::AB) == -1.0);
    CHECK(record.counts(BasisCombo::AB).total() == 8);
    CHECK(record.total_count() == 8);
    CHECK_FALSE(record.complete());
    CHECK_THROWS_WITH_AS(record.correlator(BasisCombo::APrimeBPrime),
                         "unsampled correlator: a'b'", std::runtime_error);
    CHECK_THROWS_AS(record.s_value(), std::runtime_error);
}

TEST_CASE("fresh runs anticorrelate exactly in the occupation bases") {
    Rng rng(71);
    const RunRecord record = run_experiment_fresh(1, repeat(BasisCombo::AB, 100), rng);
    CHECK(record.correlator(BasisCombo::AB) == -1.0);
}

TEST_CASE("balanced runs fill every correlator and conserve counts") {
    Rng rng(73);
    const BasisSchedule schedule = make_schedule(80, ScheduleMode::Balanced, rng);
    const RunRecord record = run_experiment(make_bec_ancilla(1), schedule, rng);
    CHECK(record.complete());
    CHECK(record.total_count() == 80);
    for (BasisCombo combo : kAllCombos) {
        CHECK(record.counts(combo).total() == 20);
        CHECK(record.correlator(combo) >= -1.0);
        CHECK(record.correlator(combo) <= 1.0);
    }
    const CorrelatorSet c = record.correlators();
    CHECK(record.s_value() ==
          doctest::Approx(chsh_s(c)).epsilon(1e-15));
    CHECK(record.violated_chsh() == (record.s_value() > 2.0));
    CHECK(record.violated_reduced() == (c.a_prime_b_prime > 0.0));
}

TEST_CASE("runs are deterministic in the seed") {
    Rng schedule_rng(79);
    const BasisSchedule schedule = make_schedule(40, ScheduleMode::Balanced, schedule_rng);
    Rng rng1(83);
    Rng rng2(83);
    const RunRecord r1 = run_experiment(make_bec_ancilla(1), schedule, rng1);
    const RunRecord r2 = run_experiment(make_bec_ancilla(1), schedule, rng2);
    for (BasisCombo combo : kAllCombos) {
        CHECK(r1.counts(combo).n_pp == r2.counts(combo).n_pp);
        CHECK(r1.counts(combo).n_pm == r2.counts(combo).n_pm);
        CHECK(r1.counts(combo).n_mp == r2.counts(combo).n_mp);
        CHECK(r1.counts(combo).n_mm == r2.counts(combo).n_mm);
    }
    CHECK(r1.s_value() == r2.s_value());
}

TEST_CASE("uniform schedules can leave a correlator unsampled") {
    // Find a small uniform schedule that misses at least one combination.
    BasisSchedule missing_one;
    BasisCombo missing = BasisCombo::AB;
    bool found = false;
    for (std::uint64_t seed = 0; seed < 32 && !found; ++seed) {
        Rng rng(seed);
        const BasisSchedule candidate = make_schedule(4, ScheduleMode::Uniform, rng);
        std::array<int, 4> counts{};
        for (BasisCombo combo : candidate.entries) {
            counts[static_cast<std::size_t>(combo)] += 1;
        }
        for (std::size_t idx = 0; idx < 4; ++idx) {
            if (counts[idx] == 0) {
                missing_one = candidate;
                missing = kAllCombos[idx];
                found = true;
                break;
            }
        }
    }
    REQUIRE(found);

    Rng rng(89);
    const RunRecord record = run_experiment(make_bec_ancilla(1), missing_one, rng);
    CHECK_FALSE(record.complete());
    CHECK_THROWS_AS(record.correlator(missing), std::runtime_error);
    CHECK_THROWS_AS(record.s_value(), std::runtime_error);
    CHECK(record.total_count() == 4);
}

TEST_CASE("three-correlator sum stays near 2 across a small ensemble") {
    const int runs = 200;
    const int pairs = 400;
    double sum = 0.0;
    for (int r = 0; r < runs; ++r) {
        Rng rng(mix_seed(4242, static_cast<std::uint64_t>(r)));
        const BasisSchedule schedule = make_schedule(pairs, ScheduleMode::Balanced, rng);
        const RunRecord record = run_experiment(make_bec_ancilla(1), schedule, rng);
        const CorrelatorSet c = record.correlators();
        sum += -c.ab + c.ab_prime + c.a_prime_b;

        // Finite-sample agreement between the two violation flags.
        if (record.violated_chsh()) {
            CHECK(c.a_prime_b_prime > 2.0 - (-c.ab + c.ab_prime + c.a_prime_b));
        }
    }
    const double tolerance = 4.0 / std::sqrt(static_cast<double>(pairs) * runs / 4.0);
    CHECK(std::abs(sum / runs - 2.0) < tolerance);
}

TEST_CASE("a same-outcome rotated first pair leaves the empty source coherent") {
    // Schedule: two occupation-involving pairs, then the first rotated pair.
    BasisSchedule schedule;
    schedule.entries = {BasisCombo::AB, BasisCombo::ABPrime, BasisCombo::APrimeBPrime,
                        BasisCombo::APrimeB};
    int enhanced_runs = 0;
    int dead_runs = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        std::vector<PairStep> trace;
        run_experiment(make_bec_ancilla(0), schedule, rng, 0.0, &trace);
        REQUIRE(trace.size() == 4);
        const PairStep& rotated = trace[2];
        CHECK(rotated.combo == BasisCombo::APrimeBPrime);
        if (rotated.outcome_a * rotated.outcome_b == +1) {
            // Source evolved into (|10> + |01>)/sqrt(2) up to known shifts.
            CHECK(std::abs(rotated.gamma_after - 0.5) < 1e-12);
            ++enhanced_runs;
        } else {
            ++dead_runs;
        }
        // Occupation-involving measurements never change the coherence.
        CHECK(std::abs(trace[0].gamma_after) < 1e-12);
        CHECK(std::abs(trace[1].gamma_after) < 1e-12);
    }
    CHECK(enhanced_runs > 0);
    CHECK(dead_runs > 0);
}

TEST_CASE("the first rotated +1 pair restores gamma = 1/2 in any empty-source run") {
    int positive_runs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(mix_seed(2025, seed));
        const BasisSchedule schedule = make_schedule(40, ScheduleMode::Balanced, rng);
        std::vector<PairStep> trace;
        run_experiment(make_bec_ancilla(0), schedule, rng, 0.0, &trace);
        for (const PairStep& step : trace) {
            if (step.combo != BasisCombo::APrimeBPrime) {
                // Everything before the first rotated pair keeps gamma = 0.
                CHECK(std::abs(step.gamma_after) < 1e-12);
                continue;
            }
            if (step.outcome_a * step.outcome_b == +1) {
                CHECK(std::abs(step.gamma_after - 0.5) < 1e-12);
                ++positive_runs;
            }
            break;
        }
    }
    CHECK(positive_runs > 10);
}
