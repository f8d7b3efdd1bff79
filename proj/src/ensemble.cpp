#include "seqbell/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace seqbell {

void SimulationConfig::validate() const {
    if (n_ancilla < 0) {
        throw std::invalid_argument("n_ancilla must be non-negative");
    }
    if (pairs <= 0) {
        throw std::invalid_argument("pairs must be positive");
    }
    if (schedule_mode == ScheduleMode::Balanced && pairs % 4 != 0) {
        throw std::invalid_argument("pairs must be divisible by 4 with a balanced schedule");
    }
    if (runs < 1) {
        throw std::invalid_argument("runs must be at least 1");
    }
    if (!(bin_width > 0.0) || bin_width > 2.0) {
        throw std::invalid_argument("bin_width must lie in (0, 2]");
    }
    if (trunc_eps < 0.0) {
        throw std::invalid_argument("trunc_eps must be non-negative");
    }
}

SummaryStats summary_stats(std::span<const RunRecord> records) {
    if (records.empty()) {
        throw std::invalid_argument("summary of an empty record set");
    }
    double sum_c = 0.0;
    double sum_s = 0.0;
    std::size_t violations = 0;
    for (const RunRecord& record : records) {
        sum_c += record.correlator(BasisCombo::APrimeBPrime);
        sum_s += record.s_value();
        if (record.violated_reduced()) {
            ++violations;
        }
    }
    const double n = static_cast<double>(records.size());
    const double mean_c = sum_c / n;
    double sq = 0.0;
    for (const RunRecord& record : records) {
        const double d = record.correlator(BasisCombo::APrimeBPrime) - mean_c;
        sq += d * d;
    }
    return {mean_c, std::sqrt(sq / n), static_cast<double>(violations) / n, sum_s / n};
}

unsigned ensemble_worker_count() {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) {
        workers = 1;
    }
    if (const char* cap = std::getenv("SEQBELL_THREADS")) {
        const long requested = std::strtol(cap, nullptr, 10);
        if (requested >= 1 && static_cast<unsigned>(requested) < workers) {
            workers = static_cast<unsigned>(requested);
        }
    }
    return workers;
}

EnsembleResult run_ensemble(const SimulationConfig& config) {
    config.validate();

    const std::size_t runs = static_cast<std::size_t>(config.runs);
    std::vector<std::optional<RunRecord>> slots(runs);

    const auto simulate_one = [&config](std::uint64_t run_index) {
        Rng rng(mix_seed(config.master_seed, run_index));
        const BasisSchedule schedule = make_schedule(config.pairs, config.schedule_mode, rng);
        if (config.mode == AncillaMode::Fresh) {
            return run_experiment_fresh(config.n_ancilla, schedule, rng);
        }
        return run_experiment(make_bec_ancilla(config.n_ancilla), schedule, rng,
                              config.trunc_eps);
    };

    const unsigned workers =
        std::min<unsigned>(ensemble_worker_count(), static_cast<unsigned>(runs));
    if (workers <= 1) {
        for (std::size_t r = 0; r < runs; ++r) {
            slots[r] = simulate_one(r);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                try {
                    while (!failed.load(std::memory_order_relaxed)) {
                        const std::size_t r = next.fetch_add(1);
                        if (r >= runs) {
                            break;
                        }
                        slots[r] = simulate_one(r);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    failed.store(true);
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
        if (error) {
            std::rethrow_exception(error);
        }
    }

    // Aggregation happens in run-index order on one thread, so the result is
    // independent of the worker count.
    EnsembleResult result{config, {}, Histogram(config.bin_width, {0}, 1), {}};
    result.records.reserve(runs);
    std::vector<double> c_values;
    c_values.reserve(runs);
    for (std::size_t r = 0; r < runs; ++r) {
        result.records.push_back(std::move(*slots[r]));
        c_values.push_back(result.records.back().correlator(BasisCombo::APrimeBPrime));
    }
    result.histogram = make_histogram(c_values, config.bin_width);
    result.stats = summary_stats(result.records);
    return result;
}

} // namespace seqbell
