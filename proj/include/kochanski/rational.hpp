#pragma once

#include <compare>
#include <string>

#include "kochanski/integer.hpp"

namespace kochanski {

/// Exact fraction num/den with den > 0.
///
/// Storage is deliberately not auto-reduced: historical tables print some
/// fractions unreduced, and replicating them bit-for-bit requires keeping
/// the representation the caller built. The `reduced` flag records whether
/// gcd(num, den) == 1 has been enforced via reduce().
struct Rational {
    Integer num{0};
    Integer den{1};
    bool reduced{false};

    Rational() : reduced(true) {}

    Rational(Integer n, Integer d, bool is_reduced = false);

    /// Whole number n/1.
    Rational(const Integer& n) : num(n), den(1), reduced(true) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : num(n), den(1), reduced(true) {}             // NOLINT(google-explicit-constructor)

    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }

    /// "num/den" (always with the denominator, even when it is 1).
    std::string str() const;
};

/// Equal value with gcd(num, den) = 1, den > 0 and the reduced flag set.
Rational reduce(const Rational& r);

/// True iff both fractions have the same representation (not just value).
bool identical(const Rational& a, const Rational& b);

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);
Rational operator-(const Rational& a);

/// Value comparisons via cross-multiplication (dens are positive).
std::strong_ordering operator<=>(const Rational& a, const Rational& b);
bool operator==(const Rational& a, const Rational& b);

/// Largest integer <= num/den.
Integer floor(const Rational& r);

/// Exact decimal expansion, e.g. 3217/1024 -> "3.1416015625". Only defined
/// for fractions whose reduced denominator is of the form 2^a * 5^b.
std::string exact_decimal_string(const Rational& r);

/// Decimal string of r truncated toward -inf after `digits` fractional
/// digits. Exact integer arithmetic, so deterministic.
std::string truncated_decimal_string(const Rational& r, unsigned digits);

}  // namespace kochanski
