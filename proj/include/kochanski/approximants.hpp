#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kochanski/moebius.hpp"

namespace kochanski {

/// One row of the approximant recursion. The lower pair P/Q is absent at
/// n = 0 (the recursion starts from an upper bound only); x is the genitor
/// used to produce row n+1 and is filled once the row has been stepped.
struct ApproximantState {
    std::size_t n = 0;
    Integer R;
    Integer S;
    std::optional<Integer> P;
    std::optional<Integer> Q;
    std::optional<Integer> x;

    Rational upper() const { return Rational(R, S); }
    Rational lower() const { return Rational(*P, *Q); }
};

/// Genitor value together with the positivity that decides whether the
/// recursion can continue (positive iff value >= 1).
struct GenitorResult {
    Integer value;
    bool positive;
};

/// A seed accepted by search_seeds, with its genitor.
struct Seed {
    Integer R0;
    Integer S0;
    Integer genitor;
};

/// Per-row verification record. Every flag is true on a valid run; a false
/// one is reported through PropertyViolation instead of being returned.
struct StepCheck {
    std::size_t n = 0;
    std::optional<Integer> x;
    Rational gap;  // R_n/S_n - P_n/Q_n, defined for n >= 1
    bool x_positive = true;
    bool x_nondecreasing = true;
    bool bounds_ok = true;
    bool upper_decreased = true;
    bool lower_increased = true;
    bool gap_positive = true;
    bool gap_decreased = true;
    bool gap_bound_ok = true;
    bool identities_ok = true;
};

struct PropertyReport {
    std::vector<StepCheck> steps;
};

/// g_alpha(R, S) = floor((alpha - floor(alpha)) / (R - alpha*S)).
/// Requires S > 0 and, certified, R/S > alpha (else SeedNotAbove). When the
/// result is positive it is the largest integer x with
/// (R*x + floor(alpha)) / (S*x + 1) < alpha.
GenitorResult genitor(const Integer& R, const Integer& S, const RealConstant& alpha,
                      unsigned max_digits = kDefaultMaxDigits);

/// Independent oracle for genitor: scans x = 1..cap testing the strict
/// inequality with certified comparisons and returns the largest qualifying
/// x (0 if none). Throws CapTooSmall if x = cap still qualifies.
Integer brute_force_genitor(const Integer& R, const Integer& S, const RealConstant& alpha,
                            const Integer& cap, unsigned max_digits = kDefaultMaxDigits);

/// Applies the recurrences once: records the genitor on `state` and returns
/// row n+1. Throws GenitorNotPositive when the sequence cannot be extended.
ApproximantState step(ApproximantState& state, const RealConstant& alpha,
                      unsigned max_digits = kDefaultMaxDigits);

/// Rows n = 0..count with genitores recorded on rows 0..count-1.
std::vector<ApproximantState> generate_sequence(const Integer& R0, const Integer& S0,
                                                const RealConstant& alpha, std::size_t count,
                                                unsigned max_digits = kDefaultMaxDigits);

/// All seeds (R0, S0) with 1 <= S0 <= max_S, R0/S0 > alpha and positive
/// genitor. For each S0 only R0 in (alpha*S0, alpha*(S0+1) - floor(alpha)]
/// can qualify, which makes the scan finite and certified.
std::vector<Seed> search_seeds(const RealConstant& alpha, const Integer& max_S,
                               unsigned max_digits = kDefaultMaxDigits);

/// Checks, with certified comparisons, monotone genitores, the sandwich
/// bounds, strict one-sided monotonicity of both approximant sequences, the
/// difference identities, and the shrinking gap with its explicit bound.
/// Throws PropertyViolation naming the row and property on any failure.
PropertyReport verify_properties(const std::vector<ApproximantState>& states,
                                 const RealConstant& alpha,
                                 unsigned max_digits = kDefaultMaxDigits);

}  // namespace kochanski
