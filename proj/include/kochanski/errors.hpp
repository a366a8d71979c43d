#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kochanski {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed constant spec, seed, or decimal literal.
struct ParseError : Error {
    using Error::Error;
};

/// sqrt:<k> requested for a perfect square (the value would be rational).
struct PerfectSquareError : Error {
    using Error::Error;
};

/// The denominator c + d*alpha of a Moebius form is zero, or its enclosure
/// could not be separated from zero within the precision cap.
struct DenominatorVanishes : Error {
    using Error::Error;
};

/// A certified floor or ordering stayed ambiguous at the precision cap.
struct PrecisionExhausted : Error {
    using Error::Error;
};

/// A rational constant compared exactly equal to the queried rational;
/// reported instead of silently ordering it.
struct EqualsConstant : Error {
    using Error::Error;
};

/// Seed violates R/S > alpha.
struct SeedNotAbove : Error {
    using Error::Error;
};

/// The genitor of the current state is not positive, so the recursion
/// cannot be extended.
struct GenitorNotPositive : Error {
    using Error::Error;
};

/// A brute-force scan reached its cap while candidates still qualified,
/// so the result would be censored.
struct CapTooSmall : Error {
    using Error::Error;
};

/// A continued-fraction expansion of a rational constant ran out of terms.
struct ExpansionTerminates : Error {
    using Error::Error;
};

/// A verified property failed; names the step index and the property.
struct PropertyViolation : Error {
    std::size_t index;
    std::string property;

    PropertyViolation(std::size_t n, std::string prop)
        : Error("property violation at n=" + std::to_string(n) + ": " + prop),
          index(n),
          property(std::move(prop)) {}
};

}  // namespace kochanski
