#include "seqbell/schedule.hpp"

#include <stdexcept>

namespace seqbell {

BasisSchedule make_schedule(int pairs, ScheduleMode mode, Rng& rng) {
    if (pairs <= 0) {
        throw std::invalid_argument("M must be positive");
    }
    BasisSchedule schedule;
    schedule.entries.reserve(static_cast<std::size_t>(pairs));

    if (mode == ScheduleMode::Uniform) {
        for (int i = 0; i < pairs; ++i) {
            schedule.entries.push_back(kAllCombos[rng.below(4)]);
        }
        return schedule;
    }

    if (pairs % 4 != 0) {
        throw std::invalid_argument("M must be divisible by 4");
    }
    const int per_combo = pairs / 4;
    for (BasisCombo combo : kAllCombos) {
        schedule.entries.insert(schedule.entries.end(), static_cast<std::size_t>(per_combo),
                                combo);
    }
    // Fisher-Yates with our own unbiased index draw, for portable sequences.
    for (std::size_t i = schedule.entries.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(schedule.entries[i], schedule.entries[j]);
    }
    return schedule;
}

} // namespace seqbell
