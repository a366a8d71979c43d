#include "kochanski/integer.hpp"

#include <stdexcept>

namespace kochanski {

Integer pow10(unsigned n) {
    return boost::multiprecision::pow(Integer(10), n);
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) {
        throw std::invalid_argument("floor_div: zero divisor");
    }
    Integer q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

Integer isqrt(const Integer& n) {
    if (n < 0) {
        throw std::invalid_argument("isqrt: negative argument");
    }
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) {
        return false;
    }
    const Integer s = isqrt(n);
    return s * s == n;
}

}  // namespace kochanski
