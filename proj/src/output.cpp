#include "seqbell/output.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace seqbell {

namespace {

const char* mode_name(AncillaMode mode) {
    return mode == AncillaMode::Reused ? "reused" : "fresh";
}

const char* schedule_name(ScheduleMode mode) {
    return mode == ScheduleMode::Balanced ? "balanced" : "uniform";
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

} // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
    if (result.ec != std::errc()) {
        throw std::runtime_error("float formatting failed");
    }
    return std::string(buffer, result.ptr);
}

std::string histogram_csv(const Histogram& histogram) {
    std::string out = "bin_left,bin_right,density\n";
    for (int bin = 0; bin < histogram.bins(); ++bin) {
        out += format_double(histogram.bin_left(bin));
        out += ',';
        out += format_double(histogram.bin_right(bin));
        out += ',';
        out += format_double(histogram.density(bin));
        out += '\n';
    }
    return out;
}

std::string runs_csv(std::span<const RunRecord> records) {
    std::string out = "run_index,c_ab,c_abp,c_apb,c_apbp,s,violated_reduced,violated_chsh\n";
    for (std::size_t r = 0; r < records.size(); ++r) {
        const RunRecord& record = records[r];
        const CorrelatorSet c = record.correlators();
        out += std::to_string(r);
        out += ',';
        out += format_double(c.ab);
        out += ',';
        out += format_double(c.ab_prime);
        out += ',';
        out += format_double(c.a_prime_b);
        out += ',';
        out += format_double(c.a_prime_b_prime);
        out += ',';
        out += format_double(record.s_value());
        out += ',';
        out += record.violated_reduced() ? '1' : '0';
        out += ',';
        out += record.violated_chsh() ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string summary_json(const EnsembleResult& result, double wall_time_seconds) {
    const SimulationConfig& cfg = result.config;
    std::string out = "{\n";
    out += "  \"config\": {\n";
    out += "    \"n_ancilla\": " + std::to_string(cfg.n_ancilla) + ",\n";
    out += "    \"pairs\": " + std::to_string(cfg.pairs) + ",\n";
    out += "    \"runs\": " + std::to_string(cfg.runs) + ",\n";
    out += "    \"mode\": \"" + std::string(mode_name(cfg.mode)) + "\",\n";
    out += "    \"schedule\": \"" + std::string(schedule_name(cfg.schedule_mode)) + "\",\n";
    out += "    \"seed\": " + std::to_string(cfg.master_seed) + ",\n";
    out += "    \"bin_width\": " + format_double(cfg.bin_width) + ",\n";
    out += "    \"trunc_eps\": " + format_double(cfg.trunc_eps) + "\n";
    out += "  },\n";
    out += "  \"mean_c\": " + format_double(result.stats.mean_c) + ",\n";
    out += "  \"std_c\": " + format_double(result.stats.std_c) + ",\n";
    out += "  \"violation_probability\": " + format_double(result.stats.violation_probability) +
           ",\n";
    out += "  \"mean_s\": " + format_double(result.stats.mean_s) + ",\n";
    out += "  \"wall_time_seconds\": " + format_double(wall_time_seconds) + "\n";
    out += "}\n";
    return out;
}

std::vector<std::filesystem::path> emit(const EnsembleResult& result,
                                        const std::filesystem::path& out_dir, OutputFormat format,
                                        double wall_time_seconds) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + out_dir.string() + ": " +
                                 ec.message());
    }

    std::vector<std::filesystem::path> written;
    if (format == OutputFormat::Csv || format == OutputFormat::Both) {
        const auto histogram_path = out_dir / "histogram.csv";
        write_file(histogram_path, histogram_csv(result.histogram));
        written.push_back(histogram_path);

        const auto runs_path = out_dir / "runs.csv";
        write_file(runs_path, runs_csv(result.records));
        written.push_back(runs_path);
    }
    if (format == OutputFormat::Json || format == OutputFormat::Both) {
        const auto summary_path = out_dir / "summary.json";
        write_file(summary_path, summary_json(result, wall_time_seconds));
        written.push_back(summary_path);
    }
    return written;
}

} // namespace seqbell
