#include <doctest.h>

#include <algorithm>

#include "cuboid/curve_quotient.hpp"
#include "cuboid/univariate.hpp"
#include "test_support.hpp"

using namespace cuboid;

namespace {
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly D = MultiPoly::variable(Var::d);
const MultiPoly C = MultiPoly::variable(Var::c);
} // namespace

TEST_CASE("rational_roots basics") {
    // x^3 - 1 -> {(1, 1)}
    auto r = rational_roots(pow(X, 3) - MultiPoly(1));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == RootWithMultiplicity{Rational(1), 1});

    // d(d^2 + 1) -> {(0, 1)}
    r = rational_roots(D * (D * D + MultiPoly(1)));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == RootWithMultiplicity{Rational(0), 1});

    // x^3 - x^2: roots 0 (double), 1
    r = rational_roots(pow(X, 3) - X * X);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == RootWithMultiplicity{Rational(0), 2});
    CHECK(r[1] == RootWithMultiplicity{Rational(1), 1});

    CHECK_THROWS_AS(rational_roots(MultiPoly{}), ZeroPolynomial);
    CHECK_THROWS_AS(rational_roots(X * D), NotUnivariate);
    CHECK(rational_roots(MultiPoly(5)).empty());
}

TEST_CASE("rational_roots of the cubic at (b,c)=(1,1)") {
    // x^3 - (1/2)x^2 - (3/8)x: the first cubic at b = c = 1.
    const MultiPoly p =
        pow(X, 3) - MultiPoly(Rational(1, 2)) * X * X - MultiPoly(Rational(3, 8)) * X;
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == RootWithMultiplicity{Rational(0), 1});
    // The quadratic cofactor has discriminant 1/4 + 3/2 = 7/4, not a square.
    const MultiPoly cofactor = deflate(p, Rational(0));
    CHECK(cofactor == X * X - MultiPoly(Rational(1, 2)) * X - MultiPoly(Rational(3, 8)));
    const Rational disc = Rational(1, 4) + Rational(3, 2);
    CHECK(disc == Rational(7, 4));
    CHECK(!exact_sqrt(disc).has_value());
}

TEST_CASE("rational_roots recovers constructed factorizations") {
    testing::Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        // Product of linear factors and an irreducible quadratic.
        std::vector<Rational> roots;
        MultiPoly p(rng.nonzero_rational(5, 3));
        const int linear = static_cast<int>(rng.integer(1, 3));
        for (int k = 0; k < linear; ++k) {
            const Rational root = rng.rational(6, 4);
            roots.push_back(root);
            p *= X - MultiPoly(root);
        }
        if (rng.integer(0, 1) == 1) {
            p *= X * X + MultiPoly(1); // no rational roots
        }
        auto found = rational_roots(p);
        unsigned total_mult = 0;
        for (const auto& f : found) {
            total_mult += f.multiplicity;
            CHECK(std::count(roots.begin(), roots.end(), f.root) ==
                  static_cast<long>(f.multiplicity));
        }
        CHECK(total_mult == roots.size());
        CHECK(std::is_sorted(found.begin(), found.end(),
                             [](const auto& a, const auto& b) { return a.root < b.root; }));
    }
}

TEST_CASE("deflate basics") {
    CHECK(deflate(pow(X, 3) - MultiPoly(1), Rational(1)) == X * X + X + MultiPoly(1));
    CHECK(deflate(pow(X + MultiPoly(1), 3), Rational(-1)) == pow(X + MultiPoly(1), 2));
    CHECK_THROWS_AS(deflate(pow(X, 3) - MultiPoly(1), Rational(2)), NotARoot);
}

TEST_CASE("deflate inverts multiplication by a linear factor") {
    testing::Rng rng(29);
    for (int i = 0; i < 50; ++i) {
        const MultiPoly p = rng.univariate(Var::x, 3);
        const Rational r = rng.rational(8, 5);
        CHECK(deflate(p * (X - MultiPoly(r)), r) == p);
    }
}

TEST_CASE("divmod is exact division with remainder") {
    testing::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const MultiPoly num = rng.univariate(Var::c, 6);
        const MultiPoly den = rng.univariate(Var::c, 1 + static_cast<unsigned>(rng.integer(0, 3)));
        const auto [q, r] = divmod(num, den, Var::c);
        CHECK(q * den + r == num);
        CHECK((r.is_zero() || r.degree(Var::c) < den.degree(Var::c)));
    }
    CHECK_THROWS_AS(divmod(C, MultiPoly{}, Var::c), DivisionByZero);
}

TEST_CASE("gcd_univariate") {
    const MultiPoly g = C * C + MultiPoly(1);
    const MultiPoly a = g * (C - MultiPoly(3));
    const MultiPoly b = g * (C + MultiPoly(5)) * (C + MultiPoly(5));
    CHECK(gcd_univariate(a, b, Var::c) == g);
    CHECK(gcd_univariate(a, MultiPoly{}, Var::c) == a * inverse(a.content()));
    // Coprime inputs give a constant.
    CHECK(gcd_univariate(C + MultiPoly(1), C + MultiPoly(2), Var::c).is_constant());
}

TEST_CASE("pseudo_remainder vanishes exactly on multiples") {
    testing::Rng rng(37);
    for (int i = 0; i < 20; ++i) {
        const MultiPoly b = rng.poly({Var::b, Var::c}, 2, 3) +
                            MultiPoly::monomial(Rational(1), {{Var::b, 3}});
        const MultiPoly cof = rng.poly({Var::b, Var::c}, 2, 3);
        CHECK(pseudo_remainder(b * cof, b, Var::b).is_zero());
        const MultiPoly off = b * cof + MultiPoly(1);
        CHECK(!pseudo_remainder(off, b, Var::b).is_zero());
    }
}

TEST_CASE("quartic discriminants of the two curve models") {
    const Rational expected(-1048576); // -2^20
    CHECK(quartic_discriminant(curve_quartic(CurveId::Curve7)) == expected);
    CHECK(quartic_discriminant(curve_quartic(CurveId::Curve8)) == expected);
}

TEST_CASE("quartic discriminant of c^4 - 1") {
    // For c^4 + q the discriminant is 256 q^3; with q = -1 that is -256,
    // confirmed by the Sylvester-matrix oracle below.
    CHECK(quartic_discriminant(pow(C, 4) - MultiPoly(1)) == Rational(-256));
    const MultiPoly p = pow(C, 4) - MultiPoly(1);
    CHECK(testing::sylvester_resultant(p, p.derivative(Var::c), Var::c) == Rational(-256));
}

TEST_CASE("discriminant degree guard") {
    CHECK_THROWS_AS(quartic_discriminant(pow(C, 3) - MultiPoly(1)), WrongDegree);
    CHECK_THROWS_AS(quartic_discriminant(MultiPoly{}), WrongDegree);
    CHECK_THROWS_AS(quartic_discriminant(pow(C, 5) - MultiPoly(1)), WrongDegree);
}

TEST_CASE("discriminant agrees with the Sylvester oracle on random quartics") {
    testing::Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly p = rng.univariate(Var::c, 4);
        const Rational lead = p.univ_coeff(Var::c, 4);
        const Rational oracle =
            testing::sylvester_resultant(p, p.derivative(Var::c), Var::c) / lead;
        CHECK(quartic_discriminant(p) == oracle);
    }
}

TEST_CASE("resultant agrees with the Sylvester oracle") {
    testing::Rng rng(47);
    for (int i = 0; i < 60; ++i) {
        const MultiPoly p = rng.univariate(Var::c, 1 + static_cast<unsigned>(rng.integer(0, 4)));
        const MultiPoly q = rng.univariate(Var::c, 1 + static_cast<unsigned>(rng.integer(0, 4)));
        CHECK(resultant(p, q, Var::c) == testing::sylvester_resultant(p, q, Var::c));
    }
}

TEST_CASE("positive_divisors") {
    auto divs = positive_divisors(Integer(-12));
    std::sort(divs.begin(), divs.end());
    CHECK(divs == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    // A product of two large primes exercises the rho path.
    const Integer n = Integer("1000000007") * Integer("1000000009");
    auto big = positive_divisors(n);
    CHECK(big.size() == 4);
    std::sort(big.begin(), big.end());
    CHECK(big[1] == Integer("1000000007"));
    CHECK(big[2] == Integer("1000000009"));
}
