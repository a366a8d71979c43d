#include "kochanski/convergents.hpp"

#include <stdexcept>

#include "kochanski/errors.hpp"

namespace kochanski {

namespace {

// |k1*alpha - k0| enclosed over the given alpha-enclosure.
Interval abs_linear(const Integer& k1, const Integer& k0, const Interval& enc) {
    Interval raw = affine(-k0, k1, enc);
    if (raw.lo.is_negative() && !raw.hi.is_negative()) {
        Rational mag = -raw.lo;
        if (mag < raw.hi) mag = raw.hi;
        return Interval(Rational(0), std::move(mag));
    }
    if (raw.hi.is_negative() || (raw.hi.is_zero() && raw.lo.is_negative())) {
        return Interval(-raw.hi, -raw.lo);
    }
    return raw;
}

}  // namespace

ConvergentRun convergents(const RealConstant& alpha, std::size_t count, unsigned max_digits) {
    if (count < 1) {
        throw std::invalid_argument("convergents: count must be >= 1");
    }
    ConvergentRun run;
    run.states.reserve(count);

    ConvergentState first;
    first.n = 0;
    first.a = alpha.floor_part();
    first.p = first.a;
    first.q = 1;
    first.p_prev = 1;
    first.q_prev = 0;
    run.states.push_back(std::move(first));

    while (run.states.size() < count) {
        const ConvergentState& cur = run.states.back();
        if (alpha.is_rational() && cur.value() == alpha.exact_value()) {
            run.terminated = true;
            return run;
        }
        Integer a;
        try {
            a = moebius_floor(MoebiusForm{-cur.p_prev, cur.q_prev, cur.p, -cur.q}, alpha,
                              max_digits);
        } catch (const DenominatorVanishes&) {
            // only reachable for rational alpha whose remainder vanished
            run.terminated = true;
            return run;
        }
        ConvergentState next;
        next.n = cur.n + 1;
        next.a = a;
        next.p = cur.p * a + cur.p_prev;
        next.q = cur.q * a + cur.q_prev;
        next.p_prev = cur.p;
        next.q_prev = cur.q;
        run.states.push_back(std::move(next));
    }
    return run;
}

bool check_best_approximation(const ConvergentState& state, const Integer& next_q,
                              const RealConstant& alpha, bool allow_large, unsigned max_digits) {
    if (next_q <= 1) {
        return true;
    }
    if (next_q > kBestApproximationScanCap && !allow_large) {
        throw CapTooSmall("best-approximation scan of " + next_q.str() +
                          " denominators needs allow_large");
    }

    if (alpha.is_rational()) {
        // Exact residuals; equality counts as a counterexample.
        const Rational& v = alpha.exact_value();
        auto residual = [&](const Integer& q, const Integer& p) {
            Rational r(q * v.num - p * v.den, v.den);
            return r.is_negative() ? -r : r;
        };
        const Rational mine = residual(state.q, state.p);
        for (Integer q = 1; q < next_q; ++q) {
            const Integer m = floor_div(q * v.num, v.den);
            for (const Integer& p : {m, Integer(m + 1)}) {
                if (p == state.p && q == state.q) continue;
                if (!(mine < residual(q, p))) return false;
            }
        }
        return true;
    }

    const auto schedule = refinement_schedule(max_digits);
    std::size_t level = 0;
    Interval enc = alpha.enclosure(schedule[level]);
    Interval mine = abs_linear(state.q, state.p, enc);

    for (Integer q = 1; q < next_q; ++q) {
        for (;;) {
            // nearest integers to q*alpha need a certified floor first
            const Integer f_lo = floor_div(q * enc.lo.num, enc.lo.den);
            const Integer f_hi = floor_div(q * enc.hi.num, enc.hi.den);
            if (f_lo != f_hi) {
                if (++level >= schedule.size()) {
                    throw PrecisionExhausted("best-approximation floor at q=" + q.str());
                }
                enc = alpha.enclosure(schedule[level]);
                mine = abs_linear(state.q, state.p, enc);
                continue;
            }
            bool resolved = true;
            bool ok = true;
            for (const Integer& p : {f_lo, Integer(f_lo + 1)}) {
                if (p == state.p && q == state.q) continue;
                const Interval other = abs_linear(q, p, enc);
                if (mine.hi < other.lo) continue;   // certified better
                if (other.hi < mine.lo) {           // certified counterexample
                    ok = false;
                    continue;
                }
                resolved = false;
                break;
            }
            if (resolved) {
                if (!ok) return false;
                break;
            }
            if (++level >= schedule.size()) {
                throw PrecisionExhausted("best-approximation residual at q=" + q.str());
            }
            enc = alpha.enclosure(schedule[level]);
            mine = abs_linear(state.q, state.p, enc);
        }
    }
    return true;
}

std::pair<Integer, Integer> odd_convergent_seed(const RealConstant& alpha, std::size_t k,
                                                unsigned max_digits) {
    const std::size_t index = 2 * k + 1;
    const ConvergentRun run = convergents(alpha, index + 1, max_digits);
    if (run.states.size() <= index) {
        throw ExpansionTerminates("expansion of " + alpha.spec_string() + " ends before index " +
                                  std::to_string(index));
    }
    const ConvergentState& st = run.states[index];
    return {st.p, st.q};
}

}  // namespace kochanski
