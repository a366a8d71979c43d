#pragma once

#include "kochanski/rational.hpp"

namespace kochanski {

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
/// Used as a certified enclosure: the true real value is proven to lie inside.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains_zero() const { return lo.num <= 0 && 0 <= hi.num; }
};

/// Enclosure of k0 + k1*x for x ranging over i.
Interval affine(const Integer& k0, const Integer& k1, const Interval& i);

/// Enclosure of n/d for n, d ranging over their intervals; d must not
/// contain zero.
Interval quotient(const Interval& n, const Interval& d);

}  // namespace kochanski
