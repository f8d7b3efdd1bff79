#include "seqbell/joint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seqbell {

namespace {

struct BranchWeights {
    // Projected amplitude is coeff_eg * amp_eg + coeff_ge * amp_ge.
    double coeff_eg = 0.0;
    double coeff_ge = 0.0;
    double probability = 0.0;
    int outcome_a = 0;
    int outcome_b = 0;
};

// All four branches in OutcomeTable order. The probabilities need only three
// scalars of the joint state:
//   S_ee = sum |amp_eg|^2, S_gg = sum |amp_ge|^2, S_x = sum amp_eg conj(amp_ge)
// since p = a^2 S_ee + b^2 S_gg + 2 a b Re(S_x) for real basis coefficients.
std::array<BranchWeights, 4> branch_weights(const JointPairState& joint,
                                            const MeasurementBasis& site_a,
                                            const MeasurementBasis& site_b) {
    double sum_ee = 0.0;
    double sum_gg = 0.0;
    Complex cross(0.0, 0.0);
    const auto eg = joint.amp_eg();
    const auto ge = joint.amp_ge();
    for (std::size_t m = 0; m < eg.size(); ++m) {
        sum_ee += std::norm(eg[m]);
        sum_gg += std::norm(ge[m]);
        cross += eg[m] * std::conj(ge[m]);
    }

    std::array<BranchWeights, 4> branches;
    for (int outcome_a : {+1, -1}) {
        for (int outcome_b : {+1, -1}) {
            const double a = site_a.comp_e(outcome_a) * site_b.comp_g(outcome_b);
            const double b = site_a.comp_g(outcome_a) * site_b.comp_e(outcome_b);
            // Non-negative by Cauchy-Schwarz; clamp the roundoff of the cross term.
            const double p =
                std::max(0.0, a * a * sum_ee + b * b * sum_gg + 2.0 * a * b * cross.real());
            branches[static_cast<std::size_t>(OutcomeTable::index(outcome_a, outcome_b))] = {
                a, b, p, outcome_a, outcome_b};
        }
    }
    return branches;
}

std::vector<Complex> projected_amplitudes(const JointPairState& joint, const BranchWeights& w) {
    const auto eg = joint.amp_eg();
    const auto ge = joint.amp_ge();
    std::vector<Complex> amp(eg.size());
    for (std::size_t m = 0; m < eg.size(); ++m) {
        amp[m] = w.coeff_eg * eg[m] + w.coeff_ge * ge[m];
    }
    return amp;
}

} // namespace

JointPairState::JointPairState(std::vector<Complex> amp_eg, std::vector<Complex> amp_ge)
    : amp_eg_(std::move(amp_eg)), amp_ge_(std::move(amp_ge)) {
    if (amp_eg_.size() != amp_ge_.size() || amp_eg_.empty()) {
        throw std::invalid_argument("joint state branches must have equal, nonzero length");
    }
}

double JointPairState::norm() const {
    double sum = 0.0;
    for (const Complex& c : amp_eg_) {
        sum += std::norm(c);
    }
    for (const Complex& c : amp_ge_) {
        sum += std::norm(c);
    }
    return std::sqrt(sum);
}

JointPairState inject(const AncillaState& ancilla) {
    const auto c = ancilla.amp();
    const std::size_t size = c.size() + 1; // total grows by one
    std::vector<Complex> amp_eg(size, Complex(0.0, 0.0));
    std::vector<Complex> amp_ge(size, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Complex half = c[k] / std::numbers::sqrt2;
        amp_eg[k + 1] = half; // flying particle joined the left mode
        amp_ge[k] = half;     // ... or the right mode
    }
    return JointPairState(std::move(amp_eg), std::move(amp_ge));
}

double OutcomeTable::total_probability() const {
    double sum = 0.0;
    for (const OutcomeBranch& b : branches_) {
        sum += b.probability;
    }
    return sum;
}

OutcomeTable outcome_distribution(const JointPairState& joint, const MeasurementBasis& site_a,
                                  const MeasurementBasis& site_b) {
    const auto weights = branch_weights(joint, site_a, site_b);
    std::array<OutcomeBranch, 4> branches;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const BranchWeights& w = weights[idx];
        OutcomeBranch& out = branches[idx];
        out.outcome_a = w.outcome_a;
        out.outcome_b = w.outcome_b;
        out.probability = w.probability;
        if (w.probability > 0.0) {
            out.post = AncillaState(projected_amplitudes(joint, w));
        }
    }
    return OutcomeTable(std::move(branches));
}

PairMeasurement measure_pair(const JointPairState& joint, const MeasurementBasis& site_a,
                             const MeasurementBasis& site_b, Rng& rng) {
    const auto weights = branch_weights(joint, site_a, site_b);

    // Inversion sampling over the positive-probability branches; the last one
    // absorbs any floating-point shortfall of the cumulative sum.
    const double u = rng.uniform();
    double remaining = u;
    const BranchWeights* chosen = nullptr;
    for (const BranchWeights& w : weights) {
        if (w.probability <= 0.0) {
            continue;
        }
        chosen = &w;
        if (remaining < w.probability) {
            break;
        }
        remaining -= w.probability;
    }
    if (chosen == nullptr) {
        throw std::logic_error("measurement with no positive-probability outcome");
    }
    return {chosen->outcome_a, chosen->outcome_b,
            AncillaState(projected_amplitudes(joint, *chosen))};
}

} // namespace seqbell
