#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "seqbell/correlator.hpp"
#include "seqbell/density.hpp"
#include "test_util.hpp"

using namespace seqbell;

namespace {
constexpr double kTheta = std::numbers::pi / 3.0;
}

TEST_CASE("closed-form correlators at the reference points") {
    CHECK(std::abs(correlator_exact(1.0, 0.0, 0.0) - (-1.0)) < 1e-12);
    CHECK(std::abs(correlator_exact(1.0, kTheta, kTheta) - 0.5) < 1e-12);
    CHECK(std::abs(correlator_exact(0.5, kTheta, kTheta) - 0.125) < 1e-12);
    CHECK(std::abs(correlator_exact(0.0, kTheta, kTheta) - (-0.25)) < 1e-12);
    CHECK_THROWS_WITH_AS(correlator_exact(1.2, 0.0, 0.0), "unphysical coherence",
                         std::invalid_argument);
}

TEST_CASE("closed form agrees with the density-matrix trace route") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const double radius = rng.uniform();
        const double arg = 2.0 * std::numbers::pi * rng.uniform();
        const Complex gamma = std::polar(radius, arg);
        const double theta_a = std::numbers::pi * (rng.uniform() - 0.5);
        const double theta_b = std::numbers::pi * (rng.uniform() - 0.5);

        const double closed = correlator_exact(gamma, theta_a, theta_b);
        const double traced = testutil::brute_force_correlator(
            pair_density_matrix(gamma).matrix(), theta_a, theta_b);
        CHECK(std::abs(closed - traced) < 1e-12);
        CHECK(closed >= -1.0 - 1e-12);
        CHECK(closed <= 1.0 + 1e-12);
    }
}

TEST_CASE("CHSH statistic from the four correlators") {
    CHECK(std::abs(chsh_s({-1.0, 0.5, 0.5, 0.5}) - 2.5) < 1e-12);
    CHECK(std::abs(chsh_s({-1.0, 0.5, 0.5, 0.0}) - 2.0) < 1e-12);
    CHECK(chsh_s({0.0, 0.0, 0.0, 0.0}) == 0.0);

    // The ideal pair violates through the closed form end to end.
    const CorrelatorSet ideal{correlator_exact(1.0, 0.0, 0.0),
                              correlator_exact(1.0, 0.0, kTheta),
                              correlator_exact(1.0, kTheta, 0.0),
                              correlator_exact(1.0, kTheta, kTheta)};
    CHECK(std::abs(chsh_s(ideal) - 2.5) < 1e-12);
}

TEST_CASE("three of the four correlators are coherence-free and sum to 2") {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex gamma = std::polar(rng.uniform(), 2.0 * std::numbers::pi * rng.uniform());
        const double three_term = -correlator_exact(gamma, 0.0, 0.0) +
                                  correlator_exact(gamma, 0.0, kTheta) +
                                  correlator_exact(gamma, kTheta, 0.0);
        CHECK(std::abs(three_term - 2.0) < 1e-12);
    }
}

TEST_CASE("violation criterion reduces to coherence above one third") {
    CHECK(std::abs(correlator_exact(1.0 / 3.0, kTheta, kTheta)) < 1e-12);
    for (double gamma = 0.0; gamma <= 1.0; gamma += 0.05) {
        const double c = correlator_exact(gamma, kTheta, kTheta);
        if (gamma > 1.0 / 3.0 + 1e-9) {
            CHECK(c > 0.0);
        } else if (gamma < 1.0 / 3.0 - 1e-9) {
            CHECK(c < 0.0);
        }
    }
}
