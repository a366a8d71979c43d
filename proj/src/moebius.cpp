#include "kochanski/moebius.hpp"

#include "kochanski/errors.hpp"

namespace kochanski {

std::vector<unsigned> refinement_schedule(unsigned max_digits) {
    if (max_digits < 1) {
        throw std::invalid_argument("refinement_schedule: max_digits must be >= 1");
    }
    std::vector<unsigned> out;
    if (max_digits <= 32) {
        out.push_back(max_digits);
        return out;
    }
    unsigned d = 32;
    while (d < max_digits) {
        out.push_back(d);
        if (d > max_digits / 2) {
            break;
        }
        d *= 2;
    }
    out.push_back(max_digits);
    return out;
}

Integer moebius_floor(const MoebiusForm& m, const RealConstant& alpha, unsigned max_digits) {
    if (m.c == 0 && m.d == 0) {
        throw DenominatorVanishes("moebius form has identically zero denominator");
    }
    if (alpha.is_rational()) {
        const Rational& v = alpha.exact_value();
        const Rational den(m.c * v.den + m.d * v.num, v.den);
        if (den.is_zero()) {
            throw DenominatorVanishes("c + d*alpha = 0 for rational alpha");
        }
        const Rational num(m.a * v.den + m.b * v.num, v.den);
        return floor(num / den);
    }
    if (m.a * m.d == m.b * m.c) {
        // a*d = b*c collapses the form to a constant, which no amount of
        // refinement can certify when it is an exact integer
        return m.d != 0 ? floor(Rational(m.b, m.d)) : floor(Rational(m.a, m.c));
    }
    bool separated = false;
    for (unsigned digits : refinement_schedule(max_digits)) {
        const Interval enc = alpha.enclosure(digits);
        const Interval den = affine(m.c, m.d, enc);
        if (den.contains_zero()) {
            continue;
        }
        separated = true;
        const Interval num = affine(m.a, m.b, enc);
        const Interval q = quotient(num, den);
        const Integer f_lo = floor(q.lo);
        if (f_lo == floor(q.hi)) {
            return f_lo;
        }
    }
    if (!separated) {
        throw DenominatorVanishes("denominator enclosure not separated from zero at " +
                                  std::to_string(max_digits) + " digits");
    }
    throw PrecisionExhausted("floor ambiguous at " + std::to_string(max_digits) + " digits");
}

Ordering compare_to_constant(const Rational& r, const RealConstant& alpha, unsigned max_digits) {
    if (alpha.is_rational()) {
        const auto cmp = r <=> alpha.exact_value();
        if (cmp == std::strong_ordering::equal) {
            throw EqualsConstant(r.str() + " equals " + alpha.spec_string() + " exactly");
        }
        return cmp == std::strong_ordering::less ? Ordering::Less : Ordering::Greater;
    }
    // alpha irrational: r can never equal it, so refinement terminates for
    // any finite r. The endpoints are rational, hence r <= lo implies r < alpha.
    for (unsigned digits : refinement_schedule(max_digits)) {
        const Interval enc = alpha.enclosure(digits);
        if (r <= enc.lo) {
            return Ordering::Less;
        }
        if (enc.hi <= r) {
            return Ordering::Greater;
        }
    }
    throw PrecisionExhausted("ordering ambiguous at " + std::to_string(max_digits) + " digits");
}

}  // namespace kochanski
