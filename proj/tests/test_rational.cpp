#include "cag/rational.hpp"

#include <doctest.h>

using cag::Rational;

TEST_CASE("construction reduces and normalizes sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-4));
}

TEST_CASE("mod1 and floor") {
    CHECK(Rational(7, 4).mod1() == Rational(3, 4));
    CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
    CHECK(Rational(3).mod1() == Rational(0));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
}

TEST_CASE("parse and print round-trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
