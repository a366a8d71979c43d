#pragma once

#include <vector>

#include "kochanski/constants.hpp"

namespace kochanski {

/// Integer coefficients of the expression (a + b*alpha) / (c + d*alpha).
/// Both the genitor formula and the partial-quotient recurrence are floors
/// of forms of this shape. Requires (c, d) != (0, 0).
struct MoebiusForm {
    Integer a;
    Integer b;
    Integer c;
    Integer d;
};

/// Default cap on enclosure precision, in decimal digits.
inline constexpr unsigned kDefaultMaxDigits = 10000;

/// Enclosure precisions to try: 32 digits, doubling, capped at max_digits.
std::vector<unsigned> refinement_schedule(unsigned max_digits);

/// Exact floor of (a + b*alpha)/(c + d*alpha).
///
/// Rational constants are evaluated in exact rational arithmetic (so an
/// exact integer value floors to itself). Irrational constants are refined
/// through the schedule until both quotient endpoints share a floor.
/// Throws DenominatorVanishes if c + d*alpha is zero or cannot be separated
/// from zero within the cap, PrecisionExhausted if the floor stays ambiguous.
Integer moebius_floor(const MoebiusForm& m, const RealConstant& alpha,
                      unsigned max_digits = kDefaultMaxDigits);

enum class Ordering { Less, Greater };

/// Certified strict ordering of r against the constant's value.
/// Throws EqualsConstant when alpha is rational and exactly equal to r.
Ordering compare_to_constant(const Rational& r, const RealConstant& alpha,
                             unsigned max_digits = kDefaultMaxDigits);

}  // namespace kochanski
