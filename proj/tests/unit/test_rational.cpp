#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "countdown/errors.hpp"
#include "countdown/rational.hpp"

using countdown::BigInt;
using countdown::DivisionByZero;
using countdown::NegativeResult;
using countdown::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction normalizes to lowest terms") {
    CHECK(Rational(BigInt(6), BigInt(4)).str() == "3/2");
    CHECK(Rational(BigInt(0), BigInt(5)).str() == "0");
    CHECK(Rational(BigInt(0), BigInt(5)).den() == 1);
    CHECK(Rational(BigInt(12), BigInt(3)).str() == "4");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(BigInt(6), BigInt(4)) == Rational(BigInt(3), BigInt(2)));
}

TEST_CASE("construction rejects bad values") {
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
    CHECK_THROWS_AS(Rational(BigInt(-1), BigInt(2)), NegativeResult);
    CHECK_THROWS_AS(Rational(-3), NegativeResult);
}

TEST_CASE("parse accepts the solution grammar only") {
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("3/6") == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));

    // anything outside "<digits>" or "<digits>/<digits>" is rejected
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("-1").has_value());
    CHECK_FALSE(Rational::parse("007").has_value());
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("1/").has_value());
    CHECK_FALSE(Rational::parse("/2").has_value());
    CHECK_FALSE(Rational::parse("1/2/3").has_value());
    CHECK_FALSE(Rational::parse(" 2").has_value());
    CHECK_FALSE(Rational::parse("2 ").has_value());
    CHECK_FALSE(Rational::parse("1.5").has_value());
    CHECK(Rational::parse("0/3") == Rational(0));  // zero numerator is fine
}

TEST_CASE("arithmetic over non-negative rationals") {
    const Rational half(BigInt(1), BigInt(2));
    const Rational third(BigInt(1), BigInt(3));

    CHECK(half + third == Rational(BigInt(5), BigInt(6)));
    CHECK(Rational(5) - Rational(2) == Rational(3));
    CHECK(half * Rational(BigInt(2), BigInt(3)) == third);
    CHECK(Rational(BigInt(2), BigInt(3)) / Rational(BigInt(2), BigInt(3)) == Rational(1));
    CHECK(Rational(7) / Rational(2) == Rational(BigInt(7), BigInt(2)));

    CHECK_THROWS_AS(Rational(2) - Rational(5), NegativeResult);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);

    // x - x = 0 and 0 is a legal operand everywhere except as a divisor
    CHECK(half - half == Rational(0));
    CHECK(Rational(0) * Rational(9) == Rational(0));
    CHECK(Rational(0) / Rational(9) == Rational(0));
}

TEST_CASE("ordering is exact cross-multiplication") {
    const Rational third(BigInt(1), BigInt(3));
    const Rational half(BigInt(1), BigInt(2));
    CHECK(third < half);
    CHECK(half < Rational(BigInt(2), BigInt(3)));
    CHECK_FALSE(half < half);

    // close ratios that double arithmetic cannot separate
    const Rational a(BigInt("999999999999999999"), BigInt("1000000000000000000"));
    CHECK(a < Rational(1));
    CHECK(Rational(1) > a);
    CHECK(a <= a);
    CHECK(a >= a);
}

TEST_CASE("values grow without overflow") {
    Rational v(2);
    for (int i = 0; i < 100; ++i) v = v * Rational(2);
    CHECK(v == Rational(BigInt(1) << 101, BigInt(1)));
    CHECK(Rational::parse(v.str()) == v);
}

TEST_CASE("hash agrees with equality") {
    const Rational a(BigInt(2), BigInt(4));
    const Rational b(BigInt(1), BigInt(2));
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(std::hash<Rational>{}(a) == b.hash());
}

TEST_CASE("abs_diff and to_double") {
    CHECK(Rational::abs_diff(Rational(BigInt(2), BigInt(3)), Rational(1)) ==
          Rational(BigInt(1), BigInt(3)));
    CHECK(Rational::abs_diff(Rational(1), Rational(BigInt(2), BigInt(3))) ==
          Rational(BigInt(1), BigInt(3)));
    CHECK(Rational(BigInt(1), BigInt(2)).to_double() == doctest::Approx(0.5));
    CHECK(Rational(0).to_double() == doctest::Approx(0.0));
}

TEST_SUITE_END();
