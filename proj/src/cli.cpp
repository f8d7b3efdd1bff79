#include "seqbell/cli.hpp"

#include <chrono>
#include <cstdio>
#include <map>

#include <CLI11.hpp>

namespace seqbell {

CliOptions parse_config(const std::vector<std::string>& args) {
    CliOptions options;
    std::string out_dir = ".";

    CLI::App app{"Sequential CHSH Bell-test simulator with a shared bosonic ancilla"};
    app.name("seqbell");

    app.add_option("--n-ancilla", options.config.n_ancilla,
                   "Ancilla particle number N of the shared condensate")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--pairs", options.config.pairs, "Entangled pairs M per run")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--runs", options.config.runs, "Independent runs R in the ensemble")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--mode", options.config.mode, "Ancilla handling across pairs")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, AncillaMode>{{"reused", AncillaMode::Reused},
                                               {"fresh", AncillaMode::Fresh}},
            CLI::ignore_case))
        ->default_str("reused");
    app.add_option("--schedule", options.config.schedule_mode, "Basis schedule drawing mode")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ScheduleMode>{{"balanced", ScheduleMode::Balanced},
                                                {"uniform", ScheduleMode::Uniform}},
            CLI::ignore_case))
        ->default_str("balanced");
    app.add_option("--seed", options.config.master_seed, "Master seed of the ensemble")
        ->capture_default_str();
    app.add_option("--bin-width", options.config.bin_width, "Histogram bin width over [-1, 1]")
        ->capture_default_str();
    app.add_option("--trunc-eps", options.config.trunc_eps,
                   "Drop ancilla amplitudes below this magnitude (0 = exact)")
        ->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--format", options.format, "Which output files to write")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                                {"json", OutputFormat::Json},
                                                {"both", OutputFormat::Both}},
            CLI::ignore_case))
        ->default_str("both");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        options.help_requested = true;
        options.help_text = app.help();
        return options;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    try {
        options.config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    options.out_dir = out_dir;
    return options;
}

int run_cli(int argc, const char* const* argv) {
    CliOptions options;
    try {
        options = parse_config(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const UsageError& e) {
        std::fprintf(stderr, "seqbell: %s\nRun with --help for usage.\n", e.what());
        return 2;
    }
    if (options.help_requested) {
        std::fputs(options.help_text.c_str(), stdout);
        return 0;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const EnsembleResult result = run_ensemble(options.config);
        const double wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const auto written = emit(result, options.out_dir, options.format, wall_time);

        std::printf("runs=%d pairs=%d N=%d mode=%s  mean_c=%.6f std_c=%.6f "
                    "violation_probability=%.4f mean_s=%.6f  (%.2fs, %u workers)\n",
                    options.config.runs, options.config.pairs, options.config.n_ancilla,
                    options.config.mode == AncillaMode::Reused ? "reused" : "fresh",
                    result.stats.mean_c, result.stats.std_c,
                    result.stats.violation_probability, result.stats.mean_s, wall_time,
                    ensemble_worker_count());
        for (const auto& path : written) {
            std::printf("wrote %s\n", path.c_str());
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "seqbell: %s\n", e.what());
        return 1;
    }
}

} // namespace seqbell
