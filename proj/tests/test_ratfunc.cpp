#include <doctest.h>

#include "cuboid/ratfunc.hpp"
#include "test_support.hpp"

using namespace cuboid;

namespace {
const MultiPoly B = MultiPoly::variable(Var::b);
const MultiPoly C = MultiPoly::variable(Var::c);
} // namespace

TEST_CASE("construction and canonical form") {
    CHECK_THROWS_AS(RationalFunction(C, MultiPoly{}), DenominatorVanishes);
    // (c^2-1)/(c-1) reduces to c+1.
    const RationalFunction f(C * C - MultiPoly(1), C - MultiPoly(1));
    CHECK(f.num() == C + MultiPoly(1));
    CHECK(f.den() == MultiPoly(1));
    // Denominator is primitive with positive leading coefficient.
    const RationalFunction g(C, MultiPoly(-2) * C * C + MultiPoly(-4));
    CHECK(g.den() == C * C + MultiPoly(2));
    CHECK(g.num() == MultiPoly(Rational(-1, 2)) * C);
    // Zero numerator forces denominator 1.
    const RationalFunction z(MultiPoly{}, C);
    CHECK(z.is_zero());
    CHECK(z.den() == MultiPoly(1));
}

TEST_CASE("field axioms on random rational functions") {
    testing::Rng rng(53);
    for (int i = 0; i < 15; ++i) {
        const RationalFunction f(rng.poly({Var::b, Var::c}, 2, 3),
                                 rng.univariate(Var::c, 1) * rng.univariate(Var::b, 1));
        const RationalFunction g(rng.poly({Var::b, Var::c}, 2, 3), rng.univariate(Var::c, 2));
        const RationalFunction h(rng.poly({Var::b, Var::c}, 2, 3), rng.univariate(Var::b, 2));
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        if (!g.is_zero()) CHECK((f / g) * g == f);
    }
}

TEST_CASE("cross-multiplication equality") {
    const RationalFunction f(C, C * C); // 1/c
    const RationalFunction g(MultiPoly(1), C);
    CHECK(f == g);
    const RationalFunction h(B, B * C); // also 1/c, but multivariate
    CHECK(h == g);
}

TEST_CASE("evaluation") {
    const RationalFunction f(B * C - MultiPoly(1), C - MultiPoly(2));
    CHECK(f.eval({{Var::b, Rational(3)}, {Var::c, Rational(4)}}) == Rational(11, 2));
    CHECK_THROWS_AS(f.eval({{Var::b, Rational(1)}, {Var::c, Rational(2)}}), DenominatorVanishes);
    CHECK_THROWS_AS(f.eval({{Var::c, Rational(3)}}), MissingVariable);
}

TEST_CASE("pow and inverse") {
    const RationalFunction f(C + MultiPoly(1), C);
    CHECK(pow(f, 3) == f * f * f);
    CHECK(pow(f, 0) == RationalFunction(Rational(1)));
    CHECK(inverse(f) * f == RationalFunction(Rational(1)));
    CHECK_THROWS_AS(inverse(RationalFunction()), DivisionByZero);
    CHECK_THROWS_AS(f / RationalFunction(), DivisionByZero);
}
