#include "kochanski/approximants.hpp"

#include <stdexcept>

#include "kochanski/errors.hpp"

namespace kochanski {

namespace {

void require_seed_above(const Integer& R, const Integer& S, const RealConstant& alpha,
                        unsigned max_digits) {
    if (S <= 0) {
        throw std::invalid_argument("seed denominator must be positive");
    }
    if (R <= 0) {
        throw std::invalid_argument("seed numerator must be positive");
    }
    try {
        if (compare_to_constant(Rational(R, S), alpha, max_digits) != Ordering::Greater) {
            throw SeedNotAbove(R.str() + "/" + S.str() + " does not exceed " + alpha.spec_string());
        }
    } catch (const EqualsConstant&) {
        throw SeedNotAbove(R.str() + "/" + S.str() + " equals " + alpha.spec_string());
    }
}

}  // namespace

GenitorResult genitor(const Integer& R, const Integer& S, const RealConstant& alpha,
                      unsigned max_digits) {
    require_seed_above(R, S, alpha, max_digits);
    // floor((alpha - floor(alpha)) / (R - alpha*S)) as a Moebius form
    const MoebiusForm form{-alpha.floor_part(), 1, R, -S};
    Integer value = moebius_floor(form, alpha, max_digits);
    if (value >= 1 && alpha.is_rational()) {
        // At an exact boundary the floor value only satisfies the non-strict
        // inequality; the genitor is the largest x with a strict one. This is
        // what lets runs over rational constants terminate instead of cycling
        // on fractions equal to alpha.
        const Rational candidate(R * value + alpha.floor_part(), S * value + 1);
        if (candidate == alpha.exact_value()) {
            --value;
        }
    }
    const bool positive = value >= 1;
    return GenitorResult{std::move(value), positive};
}

Integer brute_force_genitor(const Integer& R, const Integer& S, const RealConstant& alpha,
                            const Integer& cap, unsigned max_digits) {
    if (cap < 1) {
        throw std::invalid_argument("brute_force_genitor: cap must be >= 1");
    }
    require_seed_above(R, S, alpha, max_digits);
    const Integer& f = alpha.floor_part();
    Integer best = 0;
    Integer num = R + f;  // R*x + floor(alpha) at x = 1
    Integer den = S + 1;  // S*x + 1
    for (Integer x = 1; x <= cap; ++x, num += R, den += S) {
        bool qualifies = false;
        try {
            qualifies = compare_to_constant(Rational(num, den), alpha, max_digits) == Ordering::Less;
        } catch (const EqualsConstant&) {
            qualifies = false;  // not strictly below
        }
        if (qualifies) {
            best = x;
        }
    }
    if (best == cap) {
        throw CapTooSmall("x = cap = " + cap.str() + " still qualifies; result would be censored");
    }
    return best;
}

ApproximantState step(ApproximantState& state, const RealConstant& alpha, unsigned max_digits) {
    const GenitorResult g = genitor(state.R, state.S, alpha, max_digits);
    if (!g.positive) {
        throw GenitorNotPositive("genitor of " + state.R.str() + "/" + state.S.str() + " is " +
                                 g.value.str());
    }
    state.x = g.value;
    const Integer& f = alpha.floor_part();
    ApproximantState next;
    next.n = state.n + 1;
    next.P = state.R * g.value + f;
    next.Q = state.S * g.value + 1;
    next.R = state.R * (g.value + 1) + f;
    next.S = state.S * (g.value + 1) + 1;
    return next;
}

std::vector<ApproximantState> generate_sequence(const Integer& R0, const Integer& S0,
                                                const RealConstant& alpha, std::size_t count,
                                                unsigned max_digits) {
    if (count < 1) {
        throw std::invalid_argument("generate_sequence: count must be >= 1");
    }
    std::vector<ApproximantState> states;
    states.reserve(count + 1);
    ApproximantState seed;
    seed.n = 0;
    seed.R = R0;
    seed.S = S0;
    states.push_back(std::move(seed));
    for (std::size_t i = 0; i < count; ++i) {
        states.push_back(step(states.back(), alpha, max_digits));
    }
    return states;
}

std::vector<Seed> search_seeds(const RealConstant& alpha, const Integer& max_S,
                               unsigned max_digits) {
    if (max_S < 1) {
        throw std::invalid_argument("search_seeds: max_S must be >= 1");
    }
    const Integer& f = alpha.floor_part();
    std::vector<Seed> found;
    for (Integer S0 = 1; S0 <= max_S; ++S0) {
        // Positive genitor needs R0 > alpha*S0 and R0 <= alpha*(S0+1) - floor(alpha).
        const Integer r_min = moebius_floor(MoebiusForm{0, S0, 1, 0}, alpha, max_digits) + 1;
        const Integer r_max = moebius_floor(MoebiusForm{-f, S0 + 1, 1, 0}, alpha, max_digits);
        for (Integer R0 = r_min; R0 <= r_max; ++R0) {
            const GenitorResult g = genitor(R0, S0, alpha, max_digits);
            if (g.positive) {
                found.push_back(Seed{R0, S0, g.value});
            }
        }
    }
    return found;
}

PropertyReport verify_properties(const std::vector<ApproximantState>& states,
                                 const RealConstant& alpha, unsigned max_digits) {
    if (states.empty()) {
        throw std::invalid_argument("verify_properties: empty state list");
    }
    const Integer& f = alpha.floor_part();
    const Rational seed_ratio = states.front().upper();

    PropertyReport report;
    report.steps.reserve(states.size());

    auto fail = [](std::size_t n, const char* what) { throw PropertyViolation(n, what); };
    auto certified_less = [&](const Rational& r) {
        return compare_to_constant(r, alpha, max_digits) == Ordering::Less;
    };

    for (std::size_t n = 0; n < states.size(); ++n) {
        const ApproximantState& st = states[n];
        StepCheck check;
        check.n = n;
        check.x = st.x;

        if (st.x) {
            check.x_positive = *st.x >= 1;
            if (!check.x_positive) fail(n, "genitor not positive");
            if (n > 0 && states[n - 1].x) {
                check.x_nondecreasing = *states[n - 1].x <= *st.x;
                if (!check.x_nondecreasing) fail(n, "genitor sequence decreased");
            }
        }

        if (n == 0) {
            report.steps.push_back(std::move(check));
            continue;
        }

        const ApproximantState& prev = states[n - 1];
        if (!st.P || !st.Q) fail(n, "lower pair missing");
        check.identities_ok = (*st.P == st.R - prev.R) && (*st.Q == st.S - prev.S);
        if (!check.identities_ok) fail(n, "difference identities");

        const Rational lower = st.lower();
        const Rational upper = st.upper();

        // floor(alpha) < P/Q < alpha < R/S < R0/S0
        check.bounds_ok = Rational(f) < lower && certified_less(lower) && !certified_less(upper) &&
                          upper < seed_ratio;
        if (!check.bounds_ok) fail(n, "sandwich bounds");

        check.upper_decreased = upper < prev.upper();
        if (!check.upper_decreased) fail(n, "upper approximant did not decrease");
        if (n >= 2) {
            // When x_{n-1} = x_{n-2}, the recurrences give P_n = (x+1)P_{n-1}
            // and Q_n = (x+1)Q_{n-1}: the lower approximant repeats exactly.
            // Otherwise it must increase strictly.
            const Rational prev_lower = prev.lower();
            const bool repeated_genitor = states[n - 1].x && states[n - 2].x &&
                                          *states[n - 1].x == *states[n - 2].x;
            check.lower_increased = repeated_genitor ? lower == prev_lower : prev_lower < lower;
            if (!check.lower_increased) fail(n, "lower approximant did not increase");
        }

        check.gap = upper - lower;
        check.gap_positive = !check.gap.is_zero() && !check.gap.is_negative();
        if (!check.gap_positive) fail(n, "gap not positive");
        if (n >= 2) {
            check.gap_decreased = check.gap < report.steps.back().gap;
            if (!check.gap_decreased) fail(n, "gap did not decrease");
        }

        // gap_n bound (R0/S0 - floor(alpha)) / (S_n (x_{n-1} + 1/S_{n-1}));
        // the n = 1 case attains it with equality.
        const Rational bound =
            (seed_ratio - Rational(f)) * Rational(prev.S, st.S * *st.Q);
        check.gap_bound_ok = n == 1 ? check.gap <= bound : check.gap < bound;
        if (!check.gap_bound_ok) fail(n, "gap bound");

        report.steps.push_back(std::move(check));
    }
    return report;
}

}  // namespace kochanski
