#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace seqbell {

enum class BasisLabel { A, APrime, B, BPrime };

// Orthonormal single-site measurement basis in the real {|g>, |e>} plane:
//   u+ = cos(theta)|g> + sin(theta)|e>    assigned outcome +1
//   u- = sin(theta)|g> - cos(theta)|e>    assigned outcome -1
struct MeasurementBasis {
    BasisLabel label;
    double theta;

    double plus_g() const { return std::cos(theta); }
    double plus_e() const { return std::sin(theta); }
    double minus_g() const { return std::sin(theta); }
    double minus_e() const { return -std::cos(theta); }

    // <u_outcome|g> and <u_outcome|e> for outcome = +1 / -1.
    double comp_g(int outcome) const { return outcome > 0 ? plus_g() : minus_g(); }
    double comp_e(int outcome) const { return outcome > 0 ? plus_e() : minus_e(); }
};

// a, b measure site occupation (theta = 0); a', b' are rotated by pi/3.
MeasurementBasis basis_a();
MeasurementBasis basis_a_prime();
MeasurementBasis basis_b();
MeasurementBasis basis_b_prime();

// The four settings combinations of a CHSH run, in canonical order.
enum class BasisCombo : int { AB = 0, ABPrime = 1, APrimeB = 2, APrimeBPrime = 3 };

inline constexpr std::array<BasisCombo, 4> kAllCombos = {
    BasisCombo::AB, BasisCombo::ABPrime, BasisCombo::APrimeB, BasisCombo::APrimeBPrime};

std::pair<MeasurementBasis, MeasurementBasis> combo_bases(BasisCombo combo);

const char* combo_name(BasisCombo combo); // "ab", "ab'", "a'b", "a'b'"

} // namespace seqbell
