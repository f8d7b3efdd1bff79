#include "seqbell/basis.hpp"

#include <numbers>
#include <stdexcept>

namespace seqbell {

namespace {
constexpr double kRotatedTheta = std::numbers::pi / 3.0;
}

MeasurementBasis basis_a() {
    return {BasisLabel::A, 0.0};
}

MeasurementBasis basis_a_prime() {
    return {BasisLabel::APrime, kRotatedTheta};
}

MeasurementBasis basis_b() {
    return {BasisLabel::B, 0.0};
}

MeasurementBasis basis_b_prime() {
    return {BasisLabel::BPrime, kRotatedTheta};
}

std::pair<MeasurementBasis, MeasurementBasis> combo_bases(BasisCombo combo) {
    switch (combo) {
    case BasisCombo::AB:
        return {basis_a(), basis_b()};
    case BasisCombo::ABPrime:
        return {basis_a(), basis_b_prime()};
    case BasisCombo::APrimeB:
        return {basis_a_prime(), basis_b()};
    case BasisCombo::APrimeBPrime:
        return {basis_a_prime(), basis_b_prime()};
    }
    throw std::invalid_argument("unknown basis combination");
}

const char* combo_name(BasisCombo combo) {
    switch (combo) {
    case BasisCombo::AB:
        return "ab";
    case BasisCombo::ABPrime:
        return "ab'";
    case BasisCombo::APrimeB:
        return "a'b";
    case BasisCombo::APrimeBPrime:
        return "a'b'";
    }
    throw std::invalid_argument("unknown basis combination");
}

} // namespace seqbell
