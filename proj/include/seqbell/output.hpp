#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "seqbell/ensemble.hpp"

namespace seqbell {

enum class OutputFormat { Csv, Json, Both };

// Locale-free "%.17g" rendering: round-trippable, '.' decimal separator,
// identical on every run.
std::string format_double(double value);

// CSV with header bin_left,bin_right,density and one row per bin.
std::string histogram_csv(const Histogram& histogram);

// CSV with header
// run_index,c_ab,c_abp,c_apb,c_apbp,s,violated_reduced,violated_chsh
// and one row per run. Requires complete records (balanced schedules).
std::string runs_csv(std::span<const RunRecord> records);

// Summary document: config echo, mean_c, std_c, violation_probability,
// mean_s, wall_time_seconds. All numbers rendered with format_double;
// wall_time_seconds is the only field not reproducible across executions.
std::string summary_json(const EnsembleResult& result, double wall_time_seconds);

// Writes histogram.csv + runs.csv (Csv), summary.json (Json), or all three
// (Both) into out_dir, creating it if needed. Returns the paths written.
// I/O failures are reported with the offending path.
std::vector<std::filesystem::path> emit(const EnsembleResult& result,
                                        const std::filesystem::path& out_dir, OutputFormat format,
                                        double wall_time_seconds);

} // namespace seqbell
