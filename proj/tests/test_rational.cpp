#include "uryson/rational.hpp"

#include <doctest.h>

using uryson::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).str() == "2/1");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4/8") == Rational(-1, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

    Rational acc(0);
    for (int i = 0; i < 1000; ++i) acc += Rational(1, 3);
    CHECK(acc == Rational(1000, 3));
}

TEST_CASE("ordering and min/max") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(0));
    CHECK(uryson::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(uryson::max(Rational(-1), Rational(-2)) == Rational(-1));
}

TEST_CASE("powers of two for epsilon grids") {
    CHECK(uryson::pow2_inverse(0) == Rational(1));
    CHECK(uryson::pow2_inverse(3) == Rational(1, 8));
    CHECK(uryson::pow2_inverse(20) == Rational(1, 1048576));
}
