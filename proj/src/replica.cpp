#include "kochanski/replica.hpp"

#include <stdexcept>

#include "kochanski/errors.hpp"

namespace kochanski {

namespace {

const RealConstant& pi_constant() {
    static const RealConstant pi = RealConstant::pi();
    return pi;
}

std::optional<Rational> reduction_annotation(const Rational& r) {
    Rational red = reduce(r);
    if (identical(red, r)) {
        return std::nullopt;
    }
    return red;
}

// alpha known to d decimals, as an exact rational enclosure.
Interval digit_enclosure(const RealConstant& alpha, unsigned d, DigitConvention convention) {
    const Integer scale = pow10(d);
    if (convention == DigitConvention::Truncate) {
        const Integer t = moebius_floor(MoebiusForm{0, scale, 1, 0}, alpha);
        return Interval(Rational(t, scale), Rational(t + 1, scale));
    }
    // floor(alpha*10^d + 1/2) = floor((1 + 2*10^d*alpha)/2)
    const Integer r = moebius_floor(MoebiusForm{1, 2 * scale, 2, 0}, alpha);
    return Interval(Rational(2 * r - 1, 2 * scale), Rational(2 * r + 1, 2 * scale));
}

// (e - f)/(R - e*S) is increasing in e wherever R - e*S > 0, so endpoint
// floors certify the whole interval.
std::optional<Integer> certified_genitor_floor(const Integer& R, const Integer& S,
                                               const Integer& f, const Interval& enc) {
    const Rational den_at_hi = Rational(R) - Rational(S) * enc.hi;
    if (den_at_hi.is_zero() || den_at_hi.is_negative()) {
        return std::nullopt;
    }
    const Rational den_at_lo = Rational(R) - Rational(S) * enc.lo;
    if (den_at_lo.is_zero() || den_at_lo.is_negative()) {
        return std::nullopt;
    }
    const Integer f_lo = floor((enc.lo - Rational(f)) / den_at_lo);
    const Integer f_hi = floor((enc.hi - Rational(f)) / den_at_hi);
    if (f_lo != f_hi) {
        return std::nullopt;
    }
    return f_lo;
}

std::vector<ApproximantState> pi_run(std::size_t count) {
    return generate_sequence(22, 7, pi_constant(), count);
}

}  // namespace

std::vector<TableRow> reproduce_table() {
    const auto states = generate_sequence(22, 7, pi_constant(), 5);
    std::vector<TableRow> rows;
    rows.reserve(7);

    TableRow bounds;
    bounds.label = "bounds";
    bounds.lower = Rational(3, 1);
    bounds.upper = Rational(4, 1);
    bounds.lower_is_literal = true;
    bounds.upper_is_literal = true;
    rows.push_back(std::move(bounds));

    TableRow seed;
    seed.label = "n=0";
    seed.lower = Rational(25, 8);  // companion fraction the table shows but never uses
    seed.upper = states[0].upper();
    seed.lower_is_literal = true;
    rows.push_back(std::move(seed));

    for (std::size_t n = 1; n < states.size(); ++n) {
        TableRow row;
        row.label = "n=" + std::to_string(n);
        row.lower = states[n].lower();
        row.upper = states[n].upper();
        row.lower_reduced = reduction_annotation(row.lower);
        row.upper_reduced = reduction_annotation(row.upper);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool ledger_floor_certified(std::size_t n, unsigned digits, DigitConvention convention) {
    if (digits < 1) {
        throw std::invalid_argument("ledger_floor_certified: digits must be >= 1");
    }
    const auto& states = pi_run(n + 1);
    const Interval enc = digit_enclosure(pi_constant(), digits, convention);
    return certified_genitor_floor(states[n].R, states[n].S, pi_constant().floor_part(), enc)
        .has_value();
}

std::vector<PrecisionLedgerRow> precision_ledger(std::size_t count, DigitConvention convention) {
    if (count < 1) {
        throw std::invalid_argument("precision_ledger: count must be >= 1");
    }
    constexpr unsigned kScanLimit = 256;
    const auto& states = pi_run(count);
    const Integer& f = pi_constant().floor_part();

    std::vector<PrecisionLedgerRow> rows;
    rows.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        PrecisionLedgerRow row;
        row.n = n;
        for (unsigned d = 1;; ++d) {
            if (d > kScanLimit) {
                throw PrecisionExhausted("ledger scan exceeded " + std::to_string(kScanLimit) +
                                         " digits");
            }
            const Interval enc = digit_enclosure(pi_constant(), d, convention);
            const auto floor_value = certified_genitor_floor(states[n].R, states[n].S, f, enc);
            if (floor_value) {
                row.digits_required = d;
                row.genitor = *floor_value;
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Interval construction_value(unsigned digits) {
    if (digits < 1) {
        throw std::invalid_argument("construction_value: digits must be >= 1");
    }
    const Rational target_width(1, pow10(digits));
    for (unsigned p = digits + 4;; p += 16) {
        const Integer scale = pow10(p);

        // sqrt(3) at p digits
        const Integer s3 = isqrt(3 * scale * scale);
        // 120 - 18*sqrt(3), outward-rounded
        const Rational inner_lo(120 * scale - 18 * (s3 + 1), scale);
        const Rational inner_hi(120 * scale - 18 * s3, scale);

        // sqrt of a rational: isqrt(num*den*scale^2) / (den*scale) bounds below
        const Integer root_lo = isqrt(inner_lo.num * inner_lo.den * scale * scale);
        const Integer root_hi = isqrt(inner_hi.num * inner_hi.den * scale * scale) + 1;

        Interval value(Rational(root_lo, inner_lo.den * scale * 3),
                       Rational(root_hi, inner_hi.den * scale * 3));
        if (!(target_width < value.width())) {
            return value;
        }
    }
}

Rational binary_sum_value() {
    const Rational sum = Rational(96, 32) + Rational(4, 32) +
                         Rational(1, 2) * Rational(1, 32) + Rational(1, Integer(32) * 32);
    return reduce(sum);
}

std::vector<Integer> kochanski_oeis_sequence(std::size_t count) {
    if (count < 1) {
        throw std::invalid_argument("kochanski_oeis_sequence: count must be >= 1");
    }
    const auto states = generate_sequence(22, 7, pi_constant(), count);
    std::vector<Integer> genitores;
    genitores.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        genitores.push_back(*states[n].x);
    }
    return genitores;
}

MissedConvergentReport missed_convergent_demo() {
    MissedConvergentReport report;
    report.combined = Rational(333 * 1 + 22, 106 * 1 + 7);
    const auto states = generate_sequence(22, 7, pi_constant(), 1);
    report.target = states[1].upper();
    report.identity_holds = identical(reduce(report.combined), reduce(report.target)) &&
                            report.combined == report.target;
    report.genitores = kochanski_oeis_sequence(11);
    const ConvergentRun run = convergents(pi_constant(), 11);
    report.partial_quotients.reserve(run.states.size());
    for (const auto& st : run.states) {
        report.partial_quotients.push_back(st.a);
    }
    report.sequences_differ = report.genitores != report.partial_quotients;
    return report;
}

}  // namespace kochanski
