#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seqbell/histogram.hpp"
#include "seqbell/run.hpp"
#include "seqbell/schedule.hpp"

namespace seqbell {

enum class AncillaMode { Reused, Fresh };

struct SimulationConfig {
    int n_ancilla = 1;
    int pairs = 400;
    int runs = 10000;
    AncillaMode mode = AncillaMode::Reused;
    ScheduleMode schedule_mode = ScheduleMode::Balanced;
    std::uint64_t master_seed = 0;
    double bin_width = 0.02;
    double trunc_eps = 0.0;

    // Throws std::invalid_argument describing the offending field.
    void validate() const;
};

struct SummaryStats {
    double mean_c = 0.0;                // sample mean of C_{a'b'}
    double std_c = 0.0;                 // population standard deviation
    double violation_probability = 0.0; // fraction of runs with C_{a'b'} > 0
    double mean_s = 0.0;                // mean CHSH S
};

SummaryStats summary_stats(std::span<const RunRecord> records); // throws on empty

struct EnsembleResult {
    SimulationConfig config;
    std::vector<RunRecord> records; // by run index
    Histogram histogram;            // of C_{a'b'}
    SummaryStats stats;
};

// Executes config.runs independent runs and aggregates them in run-index
// order. Run r draws its schedule and outcomes from Rng(mix_seed(master_seed,
// r)), so the result is byte-identical for any worker count; parallelism is
// across runs only. Workers default to the hardware concurrency, capped by the
// SEQBELL_THREADS environment variable when set.
EnsembleResult run_ensemble(const SimulationConfig& config);

// Worker count run_ensemble will use right now.
unsigned ensemble_worker_count();

} // namespace seqbell
