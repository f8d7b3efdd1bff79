#include "seqbell/histogram.hpp"

#include <cmath>
#include <stdexcept>

namespace seqbell {

Histogram::Histogram(double bin_width, std::vector<std::int64_t> counts, std::size_t samples)
    : bin_width_(bin_width), counts_(std::move(counts)), samples_(samples) {}

double Histogram::density(int bin) const {
    return static_cast<double>(counts_[static_cast<std::size_t>(bin)]) /
           (static_cast<double>(samples_) * bin_width_);
}

Histogram make_histogram(std::span<const double> values, double bin_width) {
    if (values.empty()) {
        throw std::invalid_argument("cannot histogram an empty sample");
    }
    if (!(bin_width > 0.0) || bin_width > 2.0) {
        throw std::invalid_argument("bin width must lie in (0, 2]");
    }
    const int bins = std::max(1, static_cast<int>(std::ceil(2.0 / bin_width - 1e-9)));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
    for (double v : values) {
        if (v < -1.0 || v > 1.0) {
            throw std::invalid_argument("histogram values must lie in [-1, 1]");
        }
        int idx = static_cast<int>(std::floor((v + 1.0) / bin_width));
        if (idx >= bins) {
            idx = bins - 1; // +1 belongs to the final bin
        }
        counts[static_cast<std::size_t>(idx)] += 1;
    }
    return Histogram(bin_width, std::move(counts), values.size());
}

} // namespace seqbell
