#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kochanski/errors.hpp"
#include "kochanski/moebius.hpp"

using namespace kochanski;

TEST_CASE("refinement schedule doubles from 32 up to the cap") {
    CHECK(refinement_schedule(10000) ==
          std::vector<unsigned>{32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 10000});
    CHECK(refinement_schedule(32) == std::vector<unsigned>{32});
    CHECK(refinement_schedule(1) == std::vector<unsigned>{1});
    CHECK(refinement_schedule(100) == std::vector<unsigned>{32, 64, 100});
    CHECK(refinement_schedule(64) == std::vector<unsigned>{32, 64});
}

TEST_CASE("genitor-shaped floors for pi") {
    const RealConstant pi = RealConstant::pi();
    CHECK(moebius_floor(MoebiusForm{-3, 1, 22, -7}, pi) == 15);
    CHECK(moebius_floor(MoebiusForm{-3, 1, 355, -113}, pi) == 4697);
    CHECK(moebius_floor(MoebiusForm{5, 0, 1, 0}, pi) == 5);
}

TEST_CASE("constant forms floor exactly even over irrationals") {
    const RealConstant pi = RealConstant::pi();
    // a*d = b*c makes the form collapse to b/d regardless of alpha
    CHECK(moebius_floor(MoebiusForm{2, 2, 1, 1}, pi) == 2);
    CHECK(moebius_floor(MoebiusForm{3, 6, 1, 2}, pi) == 3);
    CHECK(moebius_floor(MoebiusForm{-7, 7, 2, -2}, pi) == -4);
    CHECK(moebius_floor(MoebiusForm{5, 0, 2, 0}, pi) == 2);
}

TEST_CASE("rational constants use the exact path") {
    const RealConstant r = RealConstant::ratio(22, 7);
    // (1 + 2*(22/7)) / (3 - (22/7)) = (51/7) / (-1/7) = -51
    CHECK(moebius_floor(MoebiusForm{1, 2, 3, -1}, r) == -51);
    // exact integer boundary floors to itself
    CHECK(moebius_floor(MoebiusForm{0, 7, 22, 0}, r) == 1);
    CHECK(moebius_floor(MoebiusForm{0, 7, 11, 0}, r) == 2);
}

TEST_CASE("moebius_floor agrees with exact rational evaluation") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coeff(-30, 30);
    std::uniform_int_distribution<int> pq(1, 40);
    int tested = 0;
    while (tested < 300) {
        const Integer a = coeff(rng), b = coeff(rng), c = coeff(rng), d = coeff(rng);
        const Integer p = pq(rng), q = pq(rng);
        const Rational v(p, q);
        const Rational den = Rational(c) + Rational(d) * v;
        if (den.is_zero()) continue;
        ++tested;
        const RealConstant alpha = RealConstant::ratio(p, q);
        const Rational num = Rational(a) + Rational(b) * v;
        CHECK(moebius_floor(MoebiusForm{a, b, c, d}, alpha) == floor(num / den));
    }
}

TEST_CASE("certified interval lies within the floor's unit window") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (const char* spec : {"pi", "sqrt:2"}) {
        const RealConstant alpha = parse_constant(spec);
        int tested = 0;
        while (tested < 150) {
            const MoebiusForm m{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
            if (m.c == 0 && m.d == 0) continue;
            if (m.a * m.d == m.b * m.c) continue;  // constant form, no unit window
            ++tested;
            const Integer f = moebius_floor(m, alpha);
            // recompute the enclosure tightly and check it sits in [f, f+1)
            const Interval enc = alpha.enclosure(64);
            const Interval den = affine(m.c, m.d, enc);
            if (den.contains_zero()) continue;  // certified at deeper precision than we re-derive
            const Interval q = quotient(affine(m.a, m.b, enc), den);
            CHECK(Rational(f) <= q.lo);
            CHECK(q.hi < Rational(f + 1));
        }
    }
}

TEST_CASE("denominator failures") {
    CHECK_THROWS_AS(moebius_floor(MoebiusForm{1, 1, 0, 0}, RealConstant::pi()),
                    DenominatorVanishes);
    // 355 - 113*alpha vanishes exactly for alpha = 355/113
    CHECK_THROWS_AS(moebius_floor(MoebiusForm{1, 0, 355, -113}, RealConstant::ratio(355, 113)),
                    DenominatorVanishes);
    // 470832*sqrt(2) - 665857 is about -7.5e-7; a 1-digit enclosure of
    // sqrt(2) has width exactly 0.1, so the denominator straddles zero at
    // that cap and separates fine at the default one
    const MoebiusForm near_pole{1, 0, -665857, 470832};
    CHECK_THROWS_AS(moebius_floor(near_pole, RealConstant::sqrt(2), 1), DenominatorVanishes);
    CHECK(moebius_floor(near_pole, RealConstant::sqrt(2)) < 0);
}

TEST_CASE("precision cap exhausts on coarse enclosures") {
    // floor(10^8 * sqrt(2)) needs ~9 fractional digits; sqrt enclosures have
    // width exactly 10^-d, so a 4-digit cap leaves the floor ambiguous
    const MoebiusForm scaled{0, 100000000, 1, 0};
    CHECK_THROWS_AS(moebius_floor(scaled, RealConstant::sqrt(2), 4), PrecisionExhausted);
    CHECK(moebius_floor(scaled, RealConstant::sqrt(2)) == 141421356);
    // the historical genitor certifies comfortably within the default cap
    CHECK(moebius_floor(MoebiusForm{-3, 1, 22, -7}, RealConstant::pi(), 32) == 15);
}

TEST_CASE("compare_to_constant orders fractions around pi") {
    const RealConstant pi = RealConstant::pi();
    CHECK(compare_to_constant(Rational(22, 7), pi) == Ordering::Greater);
    CHECK(compare_to_constant(Rational(3, 1), pi) == Ordering::Less);
    CHECK(compare_to_constant(Rational(355, 113), pi) == Ordering::Greater);
    CHECK(compare_to_constant(Rational(333, 106), pi) == Ordering::Less);
}

TEST_CASE("compare_to_constant reports exact equality for rational kinds") {
    const RealConstant r = RealConstant::ratio(22, 7);
    CHECK_THROWS_AS(compare_to_constant(Rational(22, 7), r), EqualsConstant);
    CHECK_THROWS_AS(compare_to_constant(Rational(44, 14), r), EqualsConstant);
    CHECK(compare_to_constant(Rational(21, 7), r) == Ordering::Less);
    CHECK(compare_to_constant(Rational(23, 7), r) == Ordering::Greater);
}

TEST_CASE("comparing against enclosure endpoints stays consistent") {
    const RealConstant pi = RealConstant::pi();
    for (unsigned d : {1u, 3u, 9u, 20u}) {
        const Interval enc = pi.enclosure(d);
        CHECK(compare_to_constant(enc.lo, pi) == Ordering::Less);
        CHECK(compare_to_constant(enc.hi, pi) == Ordering::Greater);
    }
}
