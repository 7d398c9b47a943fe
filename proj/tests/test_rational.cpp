#include <doctest.h>

#include "rejsched/rational.hpp"

using rejsched::ParseError;
using rejsched::Rational;

TEST_CASE("parse integers, fractions and decimals") {
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("3.25") == Rational(13, 4));
    CHECK(Rational::parse("0.3") == Rational(3, 10));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
}

TEST_CASE("parse rejects malformed literals") {
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("canonical form") {
    Rational r(6, -4);
    CHECK(r == Rational(-3, 2));
    CHECK(r.den() > 0);
    CHECK(Rational(0, 7).str() == "0");
}

TEST_CASE("arithmetic is exact") {
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
    CHECK(Rational(7, 2) * Rational(2, 7) == Rational(1));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("string rendering") {
    CHECK(Rational(5, 2).str() == "5/2");
    CHECK(Rational(8).str() == "8");
    CHECK(Rational(3, 2).decimal(6) == "1.500000");
    CHECK(Rational(1, 3).decimal(6) == "0.333333");
    CHECK(Rational(-1, 4).decimal(2) == "-0.25");
    CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
}
