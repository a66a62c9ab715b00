#include "kkms/rational.hpp"

#include <doctest.h>

using namespace kkms;

TEST_CASE("rational parsing and canonical form")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0") == 0);
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("rational parsing rejects malformed input")
{
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("arithmetic is exact")
{
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(1, 18));
    CHECK(a - b == b);
    CHECK(a / b == 2);
    CHECK(boost::multiprecision::denominator(Rational(a + b)) == 2);
}

TEST_CASE("point helpers round-trip")
{
    const RVector p = rpoint({"1/2", "-3", "0"});
    CHECK(p.size() == 3);
    CHECK(p(0) == Rational(1, 2));
    CHECK(to_string(p) == "1/2 -3 0");
    CHECK(parse_point({"1/2", "-3", "0"}) == p);
}
