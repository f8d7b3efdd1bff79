#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "seqbell/density.hpp"
#include "test_util.hpp"

using namespace seqbell;

TEST_CASE("pair density matrix carries the coherence on the ge/eg block") {
    SUBCASE("zero coherence is the bare mixture") {
        const TwoQubitDensity rho = pair_density_matrix(0.0);
        CHECK(rho.entry(kGE, kGE) == Complex(0.5, 0.0));
        CHECK(rho.entry(kEG, kEG) == Complex(0.5, 0.0));
        CHECK(rho.entry(kEG, kGE) == Complex(0.0, 0.0));
        CHECK(rho.entry(kGG, kGG) == Complex(0.0, 0.0));
        CHECK(rho.entry(kEE, kEE) == Complex(0.0, 0.0));
    }
    SUBCASE("unit coherence is the pure shared-excitation projector") {
        const TwoQubitDensity rho = pair_density_matrix(1.0);
        Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
        bell(kGE) = 1.0 / std::sqrt(2.0);
        bell(kEG) = 1.0 / std::sqrt(2.0);
        const Eigen::Matrix4cd projector = bell * bell.adjoint();
        CHECK((rho.matrix() - projector).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("complex coherence is placed with its conjugate transposed") {
        const Complex gamma(0.3, 0.4);
        const TwoQubitDensity rho = pair_density_matrix(gamma);
        CHECK(std::abs(rho.entry(kEG, kGE) - 0.5 * gamma) < 1e-15);
        CHECK(std::abs(rho.entry(kGE, kEG) - 0.5 * std::conj(gamma)) < 1e-15);
    }
    SUBCASE("eigenvalues of the half-coherent state") {
        const Eigen::Vector4d ev = pair_density_matrix(0.5).eigenvalues();
        CHECK(std::abs(ev(0)) < 1e-12);
        CHECK(std::abs(ev(1)) < 1e-12);
        CHECK(std::abs(ev(2) - 0.25) < 1e-12);
        CHECK(std::abs(ev(3) - 0.75) < 1e-12);
    }
    SUBCASE("super-unit coherence is rejected") {
        CHECK_THROWS_WITH_AS(pair_density_matrix(1.5), "unphysical coherence",
                             std::invalid_argument);
        CHECK_THROWS_AS(pair_density_matrix(Complex(0.8, 0.8)), std::invalid_argument);
    }
}

TEST_CASE("density validation rejects malformed matrices") {
    Eigen::Matrix4cd bad = Eigen::Matrix4cd::Zero();
    bad(0, 1) = Complex(0.3, 0.0); // not Hermitian
    bad(0, 0) = 1.0;
    CHECK_THROWS_AS(TwoQubitDensity{bad}, std::invalid_argument);

    Eigen::Matrix4cd off_trace = Eigen::Matrix4cd::Identity() * 0.5;
    CHECK_THROWS_AS(TwoQubitDensity{off_trace}, std::invalid_argument);

    Eigen::Matrix4cd indefinite = Eigen::Matrix4cd::Zero();
    indefinite(0, 0) = 1.2;
    indefinite(1, 1) = -0.2;
    CHECK_THROWS_AS(TwoQubitDensity{indefinite}, std::invalid_argument);
}

TEST_CASE("partial trace of an injected state matches the closed form") {
    Rng rng(29);
    for (int trial = 0; trial < 1000; ++trial) {
        const AncillaState anc = testutil::random_ancilla(rng);
        const TwoQubitDensity traced = reduced_pair_density(inject(anc));
        const TwoQubitDensity predicted = pair_density_matrix(next_pair_coherence(anc));
        CHECK((traced.matrix() - predicted.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    }
}
