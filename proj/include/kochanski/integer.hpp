#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kochanski {

/// Arbitrary-precision signed integer. Backed by boost's cpp_int, which is
/// sign + unbounded magnitude, so no operation can overflow.
using Integer = boost::multiprecision::cpp_int;

/// 10^n.
Integer pow10(unsigned n);

/// Floor division: largest q with q*b <= a. Requires b != 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Integer square root: largest s with s*s <= n. Requires n >= 0.
Integer isqrt(const Integer& n);

/// True iff n is a perfect square (0 and 1 included).
bool is_perfect_square(const Integer& n);

}  // namespace kochanski
