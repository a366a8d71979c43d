#include "kochanski/constants.hpp"

#include <cctype>
#include <utility>

#include "kochanski/errors.hpp"

namespace kochanski {

namespace {

struct ScaledSeries {
    Integer sum;    // accumulated alternating sum, floored termwise
    Integer error;  // bound on |sum - true_value*scale|, in units of 1/scale
};

// Gregory series for arctan(1/x), x >= 2, accumulated as integers at the
// given scale. Terms decrease strictly, so the alternating-series remainder
// after the first zero term is below one unit; each floored term contributes
// less than one unit of error.
ScaledSeries arctan_inv_scaled(unsigned x, const Integer& scale) {
    const Integer xsq = Integer(x) * x;
    Integer power = x;  // x^(2k+1)
    Integer sum = 0;
    Integer k = 0;
    bool add = true;
    for (;;) {
        const Integer term = scale / (power * (2 * k + 1));
        if (term == 0) {
            break;
        }
        if (add) {
            sum += term;
        } else {
            sum -= term;
        }
        add = !add;
        ++k;
        power *= xsq;
    }
    return {std::move(sum), k + 2};
}

// Machin's decomposition: pi = 16*arctan(1/5) - 4*arctan(1/239).
Interval pi_enclosure(unsigned digits) {
    unsigned guard = 12;
    for (;;) {
        const unsigned p = digits + guard;
        const Integer scale = pow10(p);
        const ScaledSeries a5 = arctan_inv_scaled(5, scale);
        const ScaledSeries a239 = arctan_inv_scaled(239, scale);
        const Integer sum = 16 * a5.sum - 4 * a239.sum;
        const Integer err = 16 * a5.error + 4 * a239.error;
        if (2 * err <= pow10(guard)) {
            return Interval(Rational(sum - err, scale), Rational(sum + err, scale));
        }
        guard *= 2;
    }
}

// s = isqrt(k * 10^(2p)) brackets sqrt(k): s <= sqrt(k)*10^p < s+1.
Interval sqrt_enclosure(const Integer& k, unsigned digits) {
    const Integer scale = pow10(digits);
    const Integer s = isqrt(k * scale * scale);
    return Interval(Rational(s, scale), Rational(s + 1, scale));
}

Integer parse_unsigned(std::string_view text, const char* what) {
    if (text.empty()) {
        throw ParseError(std::string("empty ") + what);
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
        }
    }
    return Integer(std::string(text));
}

}  // namespace

RealConstant::RealConstant(ConstantKind kind, Integer sqrt_k, Rational exact, std::string spec)
    : kind_(kind),
      sqrt_k_(std::move(sqrt_k)),
      exact_(std::move(exact)),
      spec_(std::move(spec)),
      memo_(std::make_shared<Memo>()) {
    switch (kind_) {
        case ConstantKind::Pi:
            floor_part_ = 3;
            break;
        case ConstantKind::Sqrt:
            floor_part_ = isqrt(sqrt_k_);
            break;
        case ConstantKind::Phi:
            floor_part_ = 1;
            break;
        case ConstantKind::Decimal:
        case ConstantKind::Ratio:
            floor_part_ = floor(exact_);
            break;
    }
}

RealConstant RealConstant::pi() {
    return RealConstant(ConstantKind::Pi, 0, Rational(), "pi");
}

RealConstant RealConstant::phi() {
    return RealConstant(ConstantKind::Phi, 5, Rational(), "phi");
}

RealConstant RealConstant::sqrt(const Integer& k) {
    if (k < 2) {
        if (is_perfect_square(k)) {
            throw PerfectSquareError("sqrt:" + k.str() + " is a perfect square");
        }
        throw ParseError("sqrt radicand must be >= 2");
    }
    if (is_perfect_square(k)) {
        throw PerfectSquareError("sqrt:" + k.str() + " is a perfect square");
    }
    return RealConstant(ConstantKind::Sqrt, k, Rational(), "sqrt:" + k.str());
}

RealConstant RealConstant::decimal(const std::string& literal) {
    const auto dot = literal.find('.');
    Integer num;
    Integer den = 1;
    if (dot == std::string::npos) {
        num = parse_unsigned(literal, "decimal literal");
    } else {
        const std::string whole = literal.substr(0, dot);
        const std::string frac = literal.substr(dot + 1);
        if (whole.empty() || frac.empty()) {
            throw ParseError("invalid decimal literal: '" + literal + "'");
        }
        parse_unsigned(whole, "decimal literal");
        parse_unsigned(frac, "decimal literal");
        den = pow10(static_cast<unsigned>(frac.size()));
        num = Integer(whole) * den + Integer(frac);
    }
    if (num == 0) {
        throw ParseError("constant must be positive");
    }
    return RealConstant(ConstantKind::Decimal, 0, Rational(num, den), "dec:" + literal);
}

RealConstant RealConstant::ratio(const Integer& p, const Integer& q) {
    if (q <= 0) {
        throw ParseError("rat denominator must be positive");
    }
    if (p <= 0) {
        throw ParseError("constant must be positive");
    }
    return RealConstant(ConstantKind::Ratio, 0, Rational(p, q), "rat:" + p.str() + "/" + q.str());
}

const Rational& RealConstant::exact_value() const {
    if (!is_rational()) {
        throw Error("exact_value: constant is not a rational kind");
    }
    return exact_;
}

const Integer& RealConstant::radicand() const {
    if (kind_ != ConstantKind::Sqrt) {
        throw Error("radicand: constant is not a square root");
    }
    return sqrt_k_;
}

Interval RealConstant::compute(unsigned digits) const {
    switch (kind_) {
        case ConstantKind::Pi:
            return pi_enclosure(digits);
        case ConstantKind::Sqrt:
            return sqrt_enclosure(sqrt_k_, digits);
        case ConstantKind::Phi: {
            // (1 + sqrt 5) / 2, halving also halves the enclosure width
            const Interval r5 = sqrt_enclosure(5, digits);
            return Interval(Rational(r5.lo.den + r5.lo.num, 2 * r5.lo.den),
                            Rational(r5.hi.den + r5.hi.num, 2 * r5.hi.den));
        }
        case ConstantKind::Decimal:
        case ConstantKind::Ratio:
            return Interval(exact_, exact_);
    }
    throw Error("unreachable constant kind");
}

Interval RealConstant::enclosure(unsigned digits) const {
    if (digits < 1) {
        throw std::invalid_argument("enclosure: digits must be >= 1");
    }
    if (is_rational()) {
        return Interval(exact_, exact_);
    }
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->cache.find(digits);
    if (it != memo_->cache.end()) {
        return it->second;
    }
    Interval result = compute(digits);
    memo_->cache.emplace(digits, result);
    return result;
}

RealConstant parse_constant(std::string_view spec) {
    if (spec == "pi") {
        return RealConstant::pi();
    }
    if (spec == "phi") {
        return RealConstant::phi();
    }
    constexpr std::string_view kSqrt = "sqrt:";
    constexpr std::string_view kDec = "dec:";
    constexpr std::string_view kRat = "rat:";
    if (spec.substr(0, kSqrt.size()) == kSqrt) {
        return RealConstant::sqrt(parse_unsigned(spec.substr(kSqrt.size()), "sqrt radicand"));
    }
    if (spec.substr(0, kDec.size()) == kDec) {
        return RealConstant::decimal(std::string(spec.substr(kDec.size())));
    }
    if (spec.substr(0, kRat.size()) == kRat) {
        const std::string_view body = spec.substr(kRat.size());
        const auto slash = body.find('/');
        if (slash == std::string_view::npos) {
            throw ParseError("rat constant must look like rat:<p>/<q>");
        }
        return RealConstant::ratio(parse_unsigned(body.substr(0, slash), "rat numerator"),
                                   parse_unsigned(body.substr(slash + 1), "rat denominator"));
    }
    throw ParseError("unknown constant spec: '" + std::string(spec) + "'");
}

Interval eval_interval(const RealConstant& c, unsigned digits) {
    return c.enclosure(digits);
}

Integer floor_of(const RealConstant& c) {
    return c.floor_part();
}

}  // namespace kochanski
