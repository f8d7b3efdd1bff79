#pragma once

#include <vector>

#include "seqbell/basis.hpp"
#include "seqbell/rng.hpp"

namespace seqbell {

enum class ScheduleMode { Balanced, Uniform };

// Sequence of basis combinations, drawn before the run and independent of
// measurement outcomes.
struct BasisSchedule {
    std::vector<BasisCombo> entries;

    int pairs() const { return static_cast<int>(entries.size()); }
};

// Balanced: a uniformly random permutation of the multiset holding each
// combination exactly pairs/4 times (pairs must be divisible by 4).
// Uniform: each entry i.i.d. uniform over the four combinations.
BasisSchedule make_schedule(int pairs, ScheduleMode mode, Rng& rng);

} // namespace seqbell
