#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kochanski/moebius.hpp"

namespace kochanski {

/// Continued-fraction convergent p_n/q_n with its partial quotient a_n and
/// the retained previous convergent. Convergents are automatically in lowest
/// terms; consecutive ones satisfy p_n*q_{n-1} - p_{n-1}*q_n = (-1)^(n-1).
/// At n = 0 the formal previous pair (1, 0) is stored, which makes the
/// recurrence uniform from the start.
struct ConvergentState {
    std::size_t n = 0;
    Integer a;
    Integer p;
    Integer q;
    Integer p_prev;
    Integer q_prev;

    Rational value() const { return Rational(p, q); }
};

/// Expansion result. `terminated` is set when a rational constant's
/// expansion ran out before `count` convergents were produced.
struct ConvergentRun {
    std::vector<ConvergentState> states;
    bool terminated = false;
};

/// First `count` convergents of alpha. Partial quotients are certified
/// floors of the Moebius form (-p_{n-1} + q_{n-1}*alpha)/(p_n - q_n*alpha).
ConvergentRun convergents(const RealConstant& alpha, std::size_t count,
                          unsigned max_digits = kDefaultMaxDigits);

/// Default bound on brute-force scans; larger next_q needs allow_large.
inline constexpr long long kBestApproximationScanCap = 1000000;

/// Brute-force check of the best-approximation property: for every q in
/// 1..next_q-1 and the nearest integers p to q*alpha (excluding p_n/q_n
/// itself), certifies |q_n*alpha - p_n| < |q*alpha - p|. A false return is
/// the counterexample signal, not an error.
bool check_best_approximation(const ConvergentState& state, const Integer& next_q,
                              const RealConstant& alpha, bool allow_large = false,
                              unsigned max_digits = kDefaultMaxDigits);

/// (p_{2k+1}, q_{2k+1}): odd convergents exceed alpha and always have a
/// positive genitor, so they are valid seeds for the approximant recursion.
std::pair<Integer, Integer> odd_convergent_seed(const RealConstant& alpha, std::size_t k,
                                                unsigned max_digits = kDefaultMaxDigits);

}  // namespace kochanski
