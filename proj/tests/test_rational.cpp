#include <doctest.h>

#include <unordered_set>

#include "cuboid/rational.hpp"
#include "test_support.hpp"

using namespace cuboid;

TEST_CASE("canonical form is maintained") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).denominator().is_one());
    CHECK(Rational(-3, 6).numerator() == Integer(-1));
    CHECK(Rational(-3, 6).denominator() == Integer(2));
}

TEST_CASE("arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(inverse(Rational(-3, 7)) == Rational(-7, 3));
    CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(inverse(Rational(0)), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("ordering and printing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(-22, 4).to_string() == "-11/2");
    CHECK(Rational::parse("-11/2") == Rational(-11, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("/3"), ParseError);
}

TEST_CASE("parse/print round trip") {
    testing::Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        const Rational r = rng.rational(1000000, 999983);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("big integer helpers") {
    const Integer big("123456789012345678901234567890");
    CHECK(big.to_string() == "123456789012345678901234567890");
    CHECK(gcd(Integer(12), Integer(18)) == Integer(6));
    CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
    CHECK(pow(Integer(2), 20) == Integer(1048576));
    CHECK(isqrt(Integer(170)) == Integer(13));
    CHECK(is_perfect_square(Integer(169)));
    CHECK(!is_perfect_square(Integer(170)));
    CHECK(!is_perfect_square(Integer(-4)));
    CHECK(divexact(big * Integer(77), Integer(77)) == big);
}

TEST_CASE("exact_sqrt on reference values") {
    CHECK(exact_sqrt(Rational(4, 9)) == Rational(2, 3));
    CHECK(!exact_sqrt(Rational(2)).has_value());
    CHECK(!exact_sqrt(Rational(-4)).has_value());
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    // P_7(2) = 4, the point (2, 2) of the curve.
    CHECK(exact_sqrt(Rational(4)) == Rational(2));
}

TEST_CASE("exact_sqrt(s^2) == |s| for 1000 random rationals") {
    testing::Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
        const Rational s = rng.rational(10000, 997);
        const auto r = exact_sqrt(s * s);
        REQUIRE(r.has_value());
        CHECK(*r == abs(s));
    }
}

TEST_CASE("hashing respects equality") {
    std::unordered_set<Rational> set;
    set.insert(Rational(1, 2));
    set.insert(Rational(2, 4));
    set.insert(Rational(3, 6));
    CHECK(set.size() == 1);
    CHECK(Rational(7, 3).hash() == Rational(14, 6).hash());
}
