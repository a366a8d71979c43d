#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kochanski/approximants.hpp"
#include "kochanski/convergents.hpp"

namespace kochanski {

/// One row of the historical approximant table. Fractions are kept exactly
/// as printed (unreduced); where reduction changes the representation, the
/// reduced form is attached as an annotation. The two rows the original
/// table carries without computing them (the 3 < alpha < 4 bounds and the
/// arbitrary lower companion 25/8) are flagged as literals.
struct TableRow {
    std::string label;
    Rational lower;
    Rational upper;
    bool lower_is_literal = false;
    bool upper_is_literal = false;
    std::optional<Rational> lower_reduced;
    std::optional<Rational> upper_reduced;
};

/// The pi table seeded at 22/7: bounds row, the n = 0 row, then five
/// computed pairs. Everything except the flagged literals is recomputed.
std::vector<TableRow> reproduce_table();

/// Decimal-digit convention for the precision ledger.
enum class DigitConvention {
    Truncate,  // enclosure [t, t + 10^-d], t = alpha truncated to d decimals
    Round,     // enclosure [r - 10^-d/2, r + 10^-d/2], r = alpha rounded
};

struct PrecisionLedgerRow {
    std::size_t n = 0;
    unsigned digits_required = 0;  // least d certifying the genitor's floor
    Integer genitor;
};

/// Whether knowing pi to `digits` decimals (under the given convention)
/// certifies the floor of the genitor expression for row n of the 22/7 run.
bool ledger_floor_certified(std::size_t n, unsigned digits,
                            DigitConvention convention = DigitConvention::Truncate);

/// Least certifying digit count for each genitor x_0..x_{count-1} of the
/// pi/(22,7) run, by upward scan over d.
std::vector<PrecisionLedgerRow> precision_ledger(std::size_t count,
                                                 DigitConvention convention = DigitConvention::Truncate);

/// Certified enclosure of (1/3)*sqrt(120 - 18*sqrt(3)), the length produced
/// by the classical ruler-and-compass rectification, width <= 10^-digits.
Interval construction_value(unsigned digits);

/// 96/32 + 4/32 + (1/2)(1/32) + 1/(32*32) = 3217/1024 exactly.
Rational binary_sum_value();

/// Genitor sequence for alpha = pi seeded at 22/7 (OEIS A191642).
std::vector<Integer> kochanski_oeis_sequence(std::size_t count);

/// The step the historical computation overlooked: one more unit multiple
/// of the Metius pair reproduces 355/113, i.e. the approximant recursion was
/// one observation away from continued fractions. Lists both sequences side
/// by side to show they are distinct.
struct MissedConvergentReport {
    Rational combined;  // (333*1 + 22)/(106*1 + 7)
    Rational target;    // R_1/S_1 of the pi run, recomputed
    bool identity_holds = false;
    std::vector<Integer> genitores;
    std::vector<Integer> partial_quotients;
    bool sequences_differ = false;
};

MissedConvergentReport missed_convergent_demo();

}  // namespace kochanski
