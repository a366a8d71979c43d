#include "kochanski/interval.hpp"

#include <stdexcept>
#include <utility>

namespace kochanski {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) {
        throw std::invalid_argument("Interval: lo > hi");
    }
}

Interval affine(const Integer& k0, const Integer& k1, const Interval& i) {
    // k0 + k1*x is monotone in x; direction depends on the sign of k1.
    Rational at_lo(k0 * i.lo.den + k1 * i.lo.num, i.lo.den);
    Rational at_hi(k0 * i.hi.den + k1 * i.hi.num, i.hi.den);
    if (k1 >= 0) {
        return Interval(std::move(at_lo), std::move(at_hi));
    }
    return Interval(std::move(at_hi), std::move(at_lo));
}

Interval quotient(const Interval& n, const Interval& d) {
    if (d.contains_zero()) {
        throw std::invalid_argument("quotient: denominator interval contains zero");
    }
    const Rational c1 = n.lo / d.lo;
    const Rational c2 = n.lo / d.hi;
    const Rational c3 = n.hi / d.lo;
    const Rational c4 = n.hi / d.hi;
    Rational lo = c1;
    Rational hi = c1;
    for (const Rational* c : {&c2, &c3, &c4}) {
        if (*c < lo) lo = *c;
        if (hi < *c) hi = *c;
    }
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace kochanski
