#include "kochanski/rational.hpp"

#include <stdexcept>
#include <utility>

namespace kochanski {

Rational::Rational(Integer n, Integer d, bool is_reduced)
    : num(std::move(n)), den(std::move(d)), reduced(is_reduced) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
}

std::string Rational::str() const {
    return num.str() + "/" + den.str();
}

Rational reduce(const Rational& r) {
    if (r.num == 0) {
        return Rational(0, 1, true);
    }
    const Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(r.num), r.den);
    return Rational(r.num / g, r.den / g, true);
}

bool identical(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) {
        throw std::invalid_argument("Rational: division by zero");
    }
    return Rational(a.num * b.den, a.den * b.num);
}

Rational operator-(const Rational& a) {
    return Rational(-a.num, a.den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Integer lhs = a.num * b.den;
    const Integer rhs = b.num * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const Rational& a, const Rational& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

Integer floor(const Rational& r) {
    return floor_div(r.num, r.den);
}

std::string exact_decimal_string(const Rational& r) {
    const Rational c = reduce(r);
    if (c.num < 0) {
        Rational pos = c;
        pos.num = -pos.num;
        return "-" + exact_decimal_string(pos);
    }
    // Strip factors of 2 and 5; anything left means a non-terminating expansion.
    Integer d = c.den;
    unsigned twos = 0;
    unsigned fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        throw std::invalid_argument("exact_decimal_string: expansion does not terminate");
    }
    const unsigned digits = twos > fives ? twos : fives;
    const Integer scaled = c.num * pow10(digits) / c.den;
    const Integer whole = scaled / pow10(digits);
    if (digits == 0) {
        return whole.str();
    }
    std::string frac = (scaled % pow10(digits)).str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return whole.str() + "." + frac;
}

std::string truncated_decimal_string(const Rational& r, unsigned digits) {
    const Integer scaled = floor_div(r.num * pow10(digits), r.den);
    Integer w = scaled;
    bool negative = false;
    if (w < 0) {
        negative = true;
        w = -w;  // scaled = floor, so the digits below belong to the floor value
    }
    std::string all = w.str();
    if (all.size() <= digits) {
        all.insert(all.begin(), digits + 1 - all.size(), '0');
    }
    std::string out = negative && scaled < 0 ? "-" : "";
    out += all.substr(0, all.size() - digits);
    if (digits > 0) {
        out += "." + all.substr(all.size() - digits);
    }
    return out;
}

}  // namespace kochanski
