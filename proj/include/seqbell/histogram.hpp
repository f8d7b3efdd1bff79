#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace seqbell {

// Equal-width, left-closed bins anchored at -1 covering [-1, 1]; the last bin
// also accepts its right edge so +1 is kept. Densities are normalized so that
// sum(density * width) = 1.
class Histogram {
  public:
    Histogram(double bin_width, std::vector<std::int64_t> counts, std::size_t samples);

    int bins() const { return static_cast<int>(counts_.size()); }
    double bin_width() const { return bin_width_; }
    double bin_left(int bin) const { return -1.0 + bin * bin_width_; }
    double bin_right(int bin) const { return -1.0 + (bin + 1) * bin_width_; }
    std::int64_t count(int bin) const { return counts_[static_cast<std::size_t>(bin)]; }
    double density(int bin) const;
    std::size_t samples() const { return samples_; }

  private:
    double bin_width_;
    std::vector<std::int64_t> counts_;
    std::size_t samples_;
};

// Bins values from [-1, 1]. Throws std::invalid_argument on empty input or
// non-positive width.
Histogram make_histogram(std::span<const double> values, double bin_width);

} // namespace seqbell
