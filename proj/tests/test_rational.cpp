#include <doctest.h>

#include "tss/errors.hpp"
#include "tss/rational.hpp"

using namespace tss;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(7).str() == "7/1");
}

TEST_CASE("rational parsing accepts p/q and bare integers") {
    CHECK(Rational::parse("5/35") == Rational(1, 7));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), input_error);
    CHECK_THROWS_AS(Rational::parse("x/y"), input_error);
    CHECK_THROWS_AS(Rational::parse(""), input_error);
    CHECK_THROWS_AS(Rational(1, 0), input_error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational seventh(1, 7);
    Rational sum;
    for (int i = 0; i < 7; ++i) sum += seventh;
    CHECK(sum == Rational(1));
    CHECK(sq(Rational(3, 4)) == Rational(9, 16));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1) / Rational(7) == seventh);
    CHECK_THROWS_AS(Rational(1) / Rational(0), input_error);
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(-1, 2).sign() == -1);
}
