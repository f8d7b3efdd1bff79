#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqbell/ensemble.hpp"
#include "seqbell/output.hpp"

namespace seqbell {

// Invalid flags or values; the CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct CliOptions {
    SimulationConfig config;
    std::filesystem::path out_dir = ".";
    OutputFormat format = OutputFormat::Both;
    bool help_requested = false;
    std::string help_text;
};

// Parses command-line arguments (excluding argv[0]). Defaults reproduce the
// reused-ancilla N=1, M=400, R=10000 configuration. Throws UsageError on
// unknown flags, malformed values, or configurations that fail validation.
CliOptions parse_config(const std::vector<std::string>& args);

// Complete CLI entry point: parse, run, emit, report. Returns the process
// exit code (0 success, 2 usage error, 1 runtime error).
int run_cli(int argc, const char* const* argv);

} // namespace seqbell
