#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "kochanski/interval.hpp"

namespace kochanski {

enum class ConstantKind { Pi, Sqrt, Phi, Decimal, Ratio };

/// A computable positive real constant with certified interval evaluation.
///
/// Instances are immutable; evaluation is a pure function of (constant,
/// digits). Enclosures are memoized internally behind a mutex, which is
/// transparent: the cached interval is exactly the one a fresh evaluation
/// would produce.
class RealConstant {
  public:
    static RealConstant pi();
    static RealConstant phi();
    /// Throws PerfectSquareError if k is a square, ParseError if k < 2.
    static RealConstant sqrt(const Integer& k);
    /// Exact positive decimal literal, e.g. "3.14" meaning exactly 314/100.
    static RealConstant decimal(const std::string& literal);
    /// Exact positive fraction p/q, q > 0.
    static RealConstant ratio(const Integer& p, const Integer& q);

    ConstantKind kind() const { return kind_; }

    /// True for Decimal and Ratio kinds (the value is exactly rational).
    bool is_rational() const {
        return kind_ == ConstantKind::Decimal || kind_ == ConstantKind::Ratio;
    }

    /// Exact value; only valid for rational kinds.
    const Rational& exact_value() const;

    /// Cached exact floor of the value.
    const Integer& floor_part() const { return floor_part_; }

    /// The radicand k of a Sqrt constant.
    const Integer& radicand() const;

    /// Certified enclosure of width <= 10^-digits. digits >= 1.
    Interval enclosure(unsigned digits) const;

    /// Canonical spec-grammar text ("pi", "sqrt:2", "dec:3.14", "rat:22/7").
    const std::string& spec_string() const { return spec_; }

  private:
    struct Memo {
        std::mutex mu;
        std::map<unsigned, Interval> cache;
    };

    RealConstant(ConstantKind kind, Integer sqrt_k, Rational exact, std::string spec);

    Interval compute(unsigned digits) const;

    ConstantKind kind_;
    Integer sqrt_k_;      // Sqrt only
    Rational exact_;      // Decimal/Ratio only
    Integer floor_part_;
    std::string spec_;
    std::shared_ptr<Memo> memo_;
};

/// Parses `pi | phi | sqrt:<k> | dec:<decimal literal> | rat:<p>/<q>`.
/// Throws ParseError for malformed text and PerfectSquareError for sqrt of
/// a square. Rational kinds parse fine; callers that assume irrationality
/// should check is_rational().
RealConstant parse_constant(std::string_view spec);

/// Certified enclosure of width <= 10^-digits (free-function spelling).
Interval eval_interval(const RealConstant& c, unsigned digits);

/// Exact floor of the constant's value.
Integer floor_of(const RealConstant& c);

}  // namespace kochanski
