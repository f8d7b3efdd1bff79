#include "seqbell/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "seqbell/joint.hpp"

namespace seqbell {

namespace {

constexpr std::uint64_t kSizeGuard = 1'000'000;

std::uint64_t pack_outcome(std::uint64_t key, int pair_index, int outcome_a, int outcome_b) {
    const auto code = static_cast<std::uint64_t>(OutcomeTable::index(outcome_a, outcome_b));
    return key | (code << (2 * pair_index));
}

double squared_norm(const std::vector<Complex>& amp) {
    double sum = 0.0;
    for (const Complex& c : amp) {
        sum += std::norm(c);
    }
    return sum;
}

} // namespace

MultipartiteState::MultipartiteState(int n_ancilla, int pairs_total, int pairs_remaining,
                                     std::vector<Complex> amp)
    : n_ancilla_(n_ancilla), pairs_total_(pairs_total), pairs_remaining_(pairs_remaining),
      amp_(std::move(amp)) {
    const std::size_t expected = static_cast<std::size_t>(left_levels())
                                 << static_cast<std::size_t>(pairs_remaining_);
    if (amp_.size() != expected) {
        throw std::invalid_argument("multipartite amplitude block has the wrong size");
    }
}

Complex MultipartiteState::amp(int left_count, std::uint64_t bits) const {
    const std::size_t idx =
        (static_cast<std::size_t>(left_count) << static_cast<std::size_t>(pairs_remaining_)) +
        static_cast<std::size_t>(bits);
    return amp_[idx];
}

double MultipartiteState::norm() const {
    return std::sqrt(squared_norm(amp_));
}

MultipartiteState build_full_state(int n_ancilla, int pairs) {
    if (n_ancilla < 0 || pairs < 0) {
        throw std::invalid_argument("particle and pair counts must be non-negative");
    }
    if (pairs > 31 || (static_cast<std::uint64_t>(n_ancilla) + 1) << pairs > kSizeGuard) {
        throw std::invalid_argument("full multipartite state too large");
    }

    const AncillaState condensate = make_bec_ancilla(n_ancilla);
    const int levels = n_ancilla + pairs + 1;
    const std::uint64_t configs = std::uint64_t{1} << pairs;
    std::vector<Complex> amp(static_cast<std::size_t>(levels) * configs, Complex(0.0, 0.0));

    // Merged amplitude at (L, bits): the condensate level j = L - popcount(bits)
    // contributed sqrt(P_j) / sqrt(2^M). Each (j, bits) lands on a distinct
    // (L, bits) here, but later projections sum amplitudes across the bit that
    // is measured away while L stays fixed.
    const double pair_scale = std::exp2(-0.5 * pairs);
    for (std::uint64_t bits = 0; bits < configs; ++bits) {
        const int excited = std::popcount(bits);
        for (int j = 0; j <= n_ancilla; ++j) {
            const std::size_t idx =
                (static_cast<std::size_t>(j + excited) << pairs) + static_cast<std::size_t>(bits);
            amp[idx] = condensate.amp(j) * pair_scale;
        }
    }
    return MultipartiteState(n_ancilla, pairs, pairs, std::move(amp));
}

ProjectedBranch project_next_pair(const MultipartiteState& state, const MeasurementBasis& site_a,
                                  const MeasurementBasis& site_b, int outcome_a, int outcome_b) {
    if (state.pairs_remaining() == 0) {
        throw std::invalid_argument("no pairs left to measure");
    }
    const int rem = state.pairs_remaining();
    const std::size_t half = std::size_t{1} << (rem - 1);
    const std::size_t full = half << 1;
    const int levels = state.left_levels();

    // Pair state |eg> corresponds to the measured pair's bit set (left target
    // excited); <u_i|e><v_j|g> weights that branch, <u_i|g><v_j|e> the other.
    const double coeff_eg = site_a.comp_e(outcome_a) * site_b.comp_g(outcome_b);
    const double coeff_ge = site_a.comp_g(outcome_a) * site_b.comp_e(outcome_b);

    const std::vector<Complex>& amp = state.raw();
    std::vector<Complex> projected(static_cast<std::size_t>(levels) * half);
    for (int level = 0; level < levels; ++level) {
        const std::size_t src = static_cast<std::size_t>(level) * full;
        const std::size_t dst = static_cast<std::size_t>(level) * half;
        for (std::size_t rest = 0; rest < half; ++rest) {
            projected[dst + rest] =
                coeff_eg * amp[src + half + rest] + coeff_ge * amp[src + rest];
        }
    }

    ProjectedBranch branch;
    branch.probability = squared_norm(projected);
    if (branch.probability > 0.0) {
        const double inv = 1.0 / std::sqrt(branch.probability);
        for (Complex& c : projected) {
            c *= inv;
        }
        branch.amp = std::move(projected);
    }
    return branch;
}

double OutcomeDistribution::total() const {
    double sum = 0.0;
    for (const auto& [key, probability] : p) {
        sum += probability;
    }
    return sum;
}

double total_variation(const OutcomeDistribution& lhs, const OutcomeDistribution& rhs) {
    double sum = 0.0;
    for (const auto& [key, probability] : lhs.p) {
        auto it = rhs.p.find(key);
        sum += std::abs(probability - (it == rhs.p.end() ? 0.0 : it->second));
    }
    for (const auto& [key, probability] : rhs.p) {
        if (!lhs.p.contains(key)) {
            sum += probability;
        }
    }
    return 0.5 * sum;
}

namespace {

void enumerate_full(const MultipartiteState& state, const BasisSchedule& schedule, int depth,
                    double probability, std::uint64_t key, OutcomeDistribution& dist) {
    if (depth == schedule.pairs()) {
        dist.p[key] = probability;
        return;
    }
    const auto [site_a, site_b] =
        combo_bases(schedule.entries[static_cast<std::size_t>(depth)]);
    for (int outcome_a : {+1, -1}) {
        for (int outcome_b : {+1, -1}) {
            ProjectedBranch branch =
                project_next_pair(state, site_a, site_b, outcome_a, outcome_b);
            if (branch.probability == 0.0) {
                continue;
            }
            MultipartiteState next(state.n_ancilla(), state.pairs_total(),
                                   state.pairs_remaining() - 1, std::move(branch.amp));
            enumerate_full(next, schedule, depth + 1, probability * branch.probability,
                           pack_outcome(key, depth, outcome_a, outcome_b), dist);
        }
    }
}

void enumerate_sequential(const AncillaState& ancilla, const BasisSchedule& schedule, int depth,
                          double probability, std::uint64_t key, OutcomeDistribution& dist) {
    if (depth == schedule.pairs()) {
        dist.p[key] = probability;
        return;
    }
    const auto [site_a, site_b] =
        combo_bases(schedule.entries[static_cast<std::size_t>(depth)]);
    const OutcomeTable table = outcome_distribution(inject(ancilla), site_a, site_b);
    for (const OutcomeBranch& branch : table.branches()) {
        if (!branch.post.has_value()) { // exactly zero probability
            continue;
        }
        enumerate_sequential(*branch.post, schedule, depth + 1,
                             probability * branch.probability,
                             pack_outcome(key, depth, branch.outcome_a, branch.outcome_b), dist);
    }
}

} // namespace

OutcomeDistribution exact_outcome_distribution(const MultipartiteState& state,
                                               const BasisSchedule& schedule) {
    if (schedule.pairs() != state.pairs_remaining()) {
        throw std::invalid_argument("schedule length must match the remaining pair count");
    }
    if (schedule.pairs() > 31) {
        throw std::invalid_argument("schedule too long for exact enumeration");
    }
    OutcomeDistribution dist;
    enumerate_full(state, schedule, 0, 1.0, 0, dist);
    return dist;
}

OutcomeDistribution sequential_outcome_distribution(const AncillaState& initial,
                                                    const BasisSchedule& schedule) {
    if (schedule.pairs() > 31) {
        throw std::invalid_argument("schedule too long for exact enumeration");
    }
    OutcomeDistribution dist;
    enumerate_sequential(initial, schedule, 0, 1.0, 0, dist);
    return dist;
}

double exact_violation_probability(const OutcomeDistribution& dist,
                                   const BasisSchedule& schedule) {
    std::vector<int> rotated_pairs;
    for (int t = 0; t < schedule.pairs(); ++t) {
        if (schedule.entries[static_cast<std::size_t>(t)] == BasisCombo::APrimeBPrime) {
            rotated_pairs.push_back(t);
        }
    }
    if (rotated_pairs.empty()) {
        throw std::invalid_argument("schedule has no (a',b') entries");
    }
    double violation = 0.0;
    for (const auto& [key, probability] : dist.p) {
        std::int64_t same_minus_diff = 0;
        for (int t : rotated_pairs) {
            const auto code = (key >> (2 * t)) & 0x3u;
            same_minus_diff += (code == 0 || code == 3) ? 1 : -1;
        }
        if (same_minus_diff > 0) {
            violation += probability;
        }
    }
    return violation;
}

} // namespace seqbell
