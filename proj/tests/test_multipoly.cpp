#include <doctest.h>

#include "cuboid/multipoly.hpp"
#include "test_support.hpp"

using namespace cuboid;

namespace {
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly B = MultiPoly::variable(Var::b);
const MultiPoly C = MultiPoly::variable(Var::c);
} // namespace

TEST_CASE("difference of squares") {
    const MultiPoly lhs = (X + MultiPoly(1)) * (X - MultiPoly(1));
    const MultiPoly rhs = X * X - MultiPoly(1);
    CHECK(lhs == rhs);
}

TEST_CASE("additive identity") {
    testing::Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const MultiPoly p = rng.poly({Var::b, Var::c}, 4, 6);
        CHECK(p + MultiPoly{} == p);
        CHECK(p - p == MultiPoly{});
    }
}

TEST_CASE("guard-factor product expansion") {
    // (bc - 1 - b)(bc - c - 2b), collected from the nine raw products.
    const MultiPoly g1 = B * C - MultiPoly(1) - B;
    const MultiPoly g2 = B * C - C - MultiPoly(2) * B;
    const MultiPoly product = g1 * g2;
    CHECK(product == testing::naive_product(g1, g2));
    // Frozen expansion: b^2c^2 - 3b^2c - bc^2 + 2b^2 + 2b + c.
    MultiPoly expect = MultiPoly::monomial(Rational(1), {{Var::b, 2}, {Var::c, 2}});
    expect += MultiPoly::monomial(Rational(-3), {{Var::b, 2}, {Var::c, 1}});
    expect += MultiPoly::monomial(Rational(-1), {{Var::b, 1}, {Var::c, 2}});
    expect += MultiPoly::monomial(Rational(2), {{Var::b, 2}});
    expect += MultiPoly::monomial(Rational(2), {{Var::b, 1}});
    expect += MultiPoly::monomial(Rational(1), {{Var::c, 1}});
    CHECK(product == expect);
    CHECK(product.term_count() == 6);
}

TEST_CASE("ring axioms on random triples") {
    testing::Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        const MultiPoly p = rng.poly({Var::b, Var::c, Var::y}, 3, 5);
        const MultiPoly q = rng.poly({Var::b, Var::c, Var::y}, 3, 5);
        const MultiPoly r = rng.poly({Var::b, Var::c, Var::y}, 3, 5);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
    }
}

TEST_CASE("multiplication matches the naive oracle") {
    testing::Rng rng(13);
    for (int i = 0; i < 25; ++i) {
        const MultiPoly p = rng.poly({Var::b, Var::c, Var::x}, 4, 8);
        const MultiPoly q = rng.poly({Var::b, Var::c, Var::x}, 4, 8);
        CHECK(p * q == testing::naive_product(p, q));
    }
}

TEST_CASE("evaluation") {
    const MultiPoly p = B * B * C + MultiPoly(2) * B - C; // b^2c + 2b - c
    CHECK(p.eval({{Var::b, Rational(2)}, {Var::c, Rational(3)}}) == Rational(13));
    CHECK_THROWS_AS(p.eval({{Var::b, Rational(1)}}), MissingVariable);

    testing::Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        // Direct evaluation agrees with Horner-style nested evaluation.
        const MultiPoly q = rng.univariate(Var::c, 6);
        const Rational at = rng.rational();
        const std::vector<Rational> coeffs = univ_coeffs(q, Var::c);
        Rational horner(0);
        for (std::size_t k = coeffs.size(); k-- > 0;) horner = horner * at + coeffs[k];
        CHECK(q.eval({{Var::c, at}}) == horner);
    }
}

TEST_CASE("degrees, support, coefficients") {
    const MultiPoly p = B * B * C - MultiPoly(7);
    CHECK(p.degree(Var::b) == 2);
    CHECK(p.degree(Var::c) == 1);
    CHECK(p.degree(Var::y) == 0);
    CHECK(p.total_degree() == 3);
    CHECK(p.support() == std::vector<Var>{Var::b, Var::c});
    CHECK(!p.sole_variable().has_value());
    CHECK((B * B - B).sole_variable() == Var::b);

    const auto in_b = p.coeffs_in(Var::b);
    REQUIRE(in_b.size() == 3);
    CHECK(in_b[0] == MultiPoly(-7));
    CHECK(in_b[1].is_zero());
    CHECK(in_b[2] == C);

    CHECK(p.content() == Rational(1));
    CHECK((MultiPoly(4) * B + MultiPoly(6)).content() == Rational(2));
    CHECK((MultiPoly(Rational(1, 2)) * B + MultiPoly(Rational(3, 4))).content() == Rational(1, 4));
}

TEST_CASE("derivative and substitution") {
    const MultiPoly p = pow(C, 3) - MultiPoly(2) * C; // c^3 - 2c
    CHECK(p.derivative(Var::c) == MultiPoly(3) * C * C - MultiPoly(2));
    CHECK(p.derivative(Var::b).is_zero());
    // Substitute c -> b + 1: (b+1)^3 - 2(b+1) = b^3 + 3b^2 + b - 1.
    const MultiPoly sub = p.substitute(Var::c, B + MultiPoly(1));
    CHECK(sub == pow(B, 3) + MultiPoly(3) * B * B + B - MultiPoly(1));
}

TEST_CASE("canonical printing") {
    const MultiPoly g1 = B * C - MultiPoly(1) - B;
    CHECK(g1.to_string() == "b*c - b - 1");
    CHECK(MultiPoly{}.to_string() == "0");
    CHECK((MultiPoly(Rational(-1, 2)) * X).to_string() == "-1/2*x");
    const MultiPoly p7 = MultiPoly::from_coeffs(
        Var::c, {Rational(-7), Rational(40), Rational(-84), Rational(80), Rational(-28)});
    CHECK(p7.to_string() == "-7*c^4 + 40*c^3 - 84*c^2 + 80*c - 28");
}

TEST_CASE("from_coeffs and univ_coeffs round trip") {
    testing::Rng rng(19);
    for (int i = 0; i < 20; ++i) {
        const MultiPoly p = rng.univariate(Var::d, 5);
        const auto up = univ_coeffs(p, Var::d);
        std::vector<Rational> desc(up.rbegin(), up.rend());
        CHECK(MultiPoly::from_coeffs(Var::d, desc) == p);
    }
    CHECK_THROWS_AS(univ_coeffs(B * C, Var::b), NotUnivariate);
}
