#include "cuboid/coeffs.hpp"

namespace cuboid {

namespace {

struct BCTerm {
    long k;
    unsigned be;
    unsigned ce;
};

MultiPoly bc(std::initializer_list<BCTerm> terms) {
    MultiPoly p;
    for (const auto& t : terms) {
        p += MultiPoly::monomial(Rational(t.k), {{Var::b, t.be}, {Var::c, t.ce}});
    }
    return p;
}

// Shared denominator factors.
const MultiPoly& delta_poly() { // b^2c^4 - 6b^2c^3 + 13b^2c^2 - 12b^2c + 4b^2 + c^2
    static const MultiPoly p =
        bc({{1, 2, 4}, {-6, 2, 3}, {13, 2, 2}, {-12, 2, 1}, {4, 2, 0}, {1, 0, 2}});
    return p;
}
const MultiPoly& g1_poly() { // bc - 1 - b
    static const MultiPoly p = bc({{1, 1, 1}, {-1, 0, 0}, {-1, 1, 0}});
    return p;
}
const MultiPoly& g2_poly() { // bc - c - 2b
    static const MultiPoly p = bc({{1, 1, 1}, {-1, 0, 1}, {-2, 1, 0}});
    return p;
}
const MultiPoly& s_poly() { // b^2c^2 + 2b^2 - 3b^2c + c - bc^2 + 2b
    static const MultiPoly p =
        bc({{1, 2, 2}, {2, 2, 0}, {-3, 2, 1}, {1, 0, 1}, {-1, 1, 2}, {2, 1, 0}});
    return p;
}

SymbolicCoefficients build_symbolic() {
    const MultiPoly S = s_poly();
    const MultiPoly Delta = delta_poly();
    const MultiPoly G1sq = g1_poly() * g1_poly();
    const MultiPoly G2sq = g2_poly() * g2_poly();
    const Rational half(1, 2);

    SymbolicCoefficients E;

    E.E11 = RationalFunction(bc({{-1, 1, 2}, {-2, 1, 0}, {4, 1, 1}}), S);
    E.E01 = RationalFunction(bc({{-1, 1, 2}, {-2, 1, 0}, {2, 1, 1}}), S);
    E.E10 = RationalFunction(bc({{-1, 2, 2}, {-2, 2, 0}, {3, 2, 1}, {1, 0, 1}}), S);

    const MultiPoly a02 = bc({{28, 2, 2}, {-16, 2, 1}, {-2, 0, 2},  {-4, 2, 0}, {-1, 2, 4},
                              {4, 3, 4},  {-12, 3, 3}, {4, 1, 3},   {24, 3, 1}, {-8, 1, 1},
                              {-2, 4, 4}, {12, 4, 3},  {-26, 4, 2}, {-8, 2, 3}, {24, 4, 1},
                              {-16, 3, 0}, {-8, 4, 0}});
    E.E02 = RationalFunction(a02 * half, G1sq * G2sq);

    const MultiPoly a21 = bc({{5, 1, 6},   {-2, 2, 6},  {52, 2, 5},  {-16, 1, 5}, {-2, 2, 7},
                              {2, 4, 8},   {142, 4, 6}, {-26, 4, 7}, {-426, 4, 5}, {-61, 3, 6},
                              {100, 3, 5}, {14, 3, 7},  {-1, 3, 8},  {-20, 1, 2}, {-8, 2, 2},
                              {-16, 2, 1}, {-128, 2, 4}, {-200, 3, 3}, {244, 3, 2}, {32, 1, 3},
                              {-112, 3, 1}, {768, 4, 4}, {-852, 4, 3}, {568, 4, 2}, {104, 2, 3},
                              {-208, 4, 1}, {8, 0, 4},  {-4, 0, 3},  {16, 3, 0},  {32, 4, 0},
                              {-2, 0, 5}});
    E.E21 = RationalFunction(MultiPoly::variable(Var::b) * a21 * half, Delta * G1sq * G2sq);

    const MultiPoly a12 = bc({{16, 6, 0},  {32, 5, 0},  {-6, 2, 5},  {2, 1, 5},   {-62, 5, 6},
                              {62, 6, 6},  {-180, 6, 5}, {18, 5, 7}, {-12, 6, 7}, {-2, 5, 8},
                              {1, 6, 8},   {248, 5, 2}, {248, 6, 2}, {-96, 6, 1}, {321, 6, 4},
                              {-180, 5, 3}, {-144, 5, 1}, {-360, 6, 3}, {1, 4, 8}, {8, 4, 6},
                              {-6, 4, 7},  {18, 4, 5},  {7, 3, 6},   {90, 5, 5},  {-14, 3, 5},
                              {-1, 3, 7},  {17, 2, 4},  {28, 3, 3},  {-28, 3, 2}, {-4, 1, 3},
                              {8, 3, 1},   {-57, 4, 4}, {36, 4, 3},  {32, 4, 2},  {-12, 2, 3},
                              {-48, 4, 1}, {-1, 0, 4},  {16, 4, 0}});
    E.E12 = RationalFunction(a12, Delta * G1sq * G2sq);

    // E20 = (b/2)(bc^2 - 2c - 2b)(2bc^2 - c^2 - 6bc + 2 + 4b) / (G1^2 G2^2)
    E.E20 = RationalFunction(MultiPoly::variable(Var::b) *
                                 bc({{1, 1, 2}, {-2, 0, 1}, {-2, 1, 0}}) *
                                 bc({{2, 1, 2}, {-1, 0, 2}, {-6, 1, 1}, {2, 0, 0}, {4, 1, 0}}) *
                                 half,
                             G1sq * G2sq);

    // E30 = c b^2 (1-c)(c-2)(bc^2 - 4bc + 2 + 4b)(2bc^2 - c^2 - 4bc + 2b)
    //       / (Delta G1^2 G2^2)
    E.E30 = RationalFunction(
        MultiPoly::monomial(Rational(1), {{Var::b, 2}, {Var::c, 1}}) *
            bc({{1, 0, 0}, {-1, 0, 1}}) * bc({{1, 0, 1}, {-2, 0, 0}}) *
            bc({{1, 1, 2}, {-4, 1, 1}, {2, 0, 0}, {4, 1, 0}}) *
            bc({{2, 1, 2}, {-1, 0, 2}, {-4, 1, 1}, {2, 1, 0}}),
        Delta * G1sq * G2sq);

    // E03 = (b/2) F1 F2 / (Delta G1^2 G2^2); F1 and F2 are the left-hand
    // sides of the two vanishing conditions that seed the curves.
    const MultiPoly f1 = bc({{1, 2, 4}, {-5, 2, 3}, {10, 2, 2}, {-10, 2, 1}, {4, 2, 0},
                             {2, 1, 1}, {2, 0, 2},  {-1, 1, 3}});
    const MultiPoly f2 = bc({{2, 2, 4}, {-12, 2, 3}, {26, 2, 2}, {-24, 2, 1}, {8, 2, 0},
                             {-1, 1, 4}, {3, 1, 3},  {-6, 1, 1}, {4, 1, 0},   {1, 0, 3},
                             {-2, 0, 2}, {2, 0, 1}});
    E.E03 = RationalFunction(MultiPoly::variable(Var::b) * f1 * f2 * half, Delta * G1sq * G2sq);

    return E;
}

} // namespace

const std::array<MultiPoly, 4>& guard_factor_polys() {
    static const std::array<MultiPoly, 4> factors = {delta_poly(), g1_poly(), g2_poly(),
                                                     s_poly()};
    return factors;
}

std::array<Rational, 4> guard_factors(const ParamPoint& p) {
    const std::map<Var, Rational> at{{Var::b, p.b}, {Var::c, p.c}};
    const auto& polys = guard_factor_polys();
    return {polys[0].eval(at), polys[1].eval(at), polys[2].eval(at), polys[3].eval(at)};
}

bool guard_nonvanishing(const ParamPoint& p) {
    for (const Rational& f : guard_factors(p)) {
        if (f.is_zero()) return false;
    }
    return true;
}

CoefficientSet coefficients(const ParamPoint& p) {
    if (!guard_nonvanishing(p)) {
        throw DegenerateParameters("coefficient denominator vanishes at (b, c) = (" +
                                   p.b.to_string() + ", " + p.c.to_string() + ")");
    }
    const Rational& b = p.b;
    const Rational& c = p.c;
    const Rational b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b, b6 = b5 * b;
    const Rational c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c, c6 = c5 * c,
                   c7 = c6 * c, c8 = c7 * c;

    const Rational S = b2 * c2 + Rational(2) * b2 - Rational(3) * b2 * c + c - b * c2 +
                       Rational(2) * b;
    const Rational delta = b2 * c4 - Rational(6) * b2 * c3 + Rational(13) * b2 * c2 -
                           Rational(12) * b2 * c + Rational(4) * b2 + c2;
    const Rational g1 = b * c - Rational(1) - b;
    const Rational g2 = b * c - c - Rational(2) * b;
    const Rational g1sq = g1 * g1, g2sq = g2 * g2;
    const Rational half(1, 2);

    CoefficientSet E;
    E.E11 = -b * (c2 + Rational(2) - Rational(4) * c) / S;
    E.E01 = -b * (c2 + Rational(2) - Rational(2) * c) / S;
    E.E10 = -(b2 * c2 + Rational(2) * b2 - Rational(3) * b2 * c - c) / S;

    E.E02 = half *
            (Rational(28) * b2 * c2 - Rational(16) * b2 * c - Rational(2) * c2 -
             Rational(4) * b2 - b2 * c4 + Rational(4) * b3 * c4 - Rational(12) * b3 * c3 +
             Rational(4) * b * c3 + Rational(24) * b3 * c - Rational(8) * b * c -
             Rational(2) * b4 * c4 + Rational(12) * b4 * c3 - Rational(26) * b4 * c2 -
             Rational(8) * b2 * c3 + Rational(24) * b4 * c - Rational(16) * b3 -
             Rational(8) * b4) /
            (g1sq * g2sq);

    E.E21 = half * b *
            (Rational(5) * c6 * b - Rational(2) * c6 * b2 + Rational(52) * c5 * b2 -
             Rational(16) * c5 * b - Rational(2) * c7 * b2 + Rational(2) * b4 * c8 +
             Rational(142) * b4 * c6 - Rational(26) * b4 * c7 - Rational(426) * b4 * c5 -
             Rational(61) * b3 * c6 + Rational(100) * b3 * c5 + Rational(14) * c7 * b3 -
             c8 * b3 - Rational(20) * b * c2 - Rational(8) * b2 * c2 - Rational(16) * b2 * c -
             Rational(128) * b2 * c4 - Rational(200) * b3 * c3 + Rational(244) * b3 * c2 +
             Rational(32) * b * c3 - Rational(112) * b3 * c + Rational(768) * b4 * c4 -
             Rational(852) * b4 * c3 + Rational(568) * b4 * c2 + Rational(104) * b2 * c3 -
             Rational(208) * b4 * c + Rational(8) * c4 - Rational(4) * c3 + Rational(16) * b3 +
             Rational(32) * b4 - Rational(2) * c5) /
            (delta * g1sq * g2sq);

    E.E12 = (Rational(16) * b6 + Rational(32) * b5 - Rational(6) * c5 * b2 +
             Rational(2) * c5 * b - Rational(62) * b5 * c6 + Rational(62) * b6 * c6 -
             Rational(180) * b6 * c5 + Rational(18) * b5 * c7 - Rational(12) * b6 * c7 -
             Rational(2) * b5 * c8 + b6 * c8 + Rational(248) * b5 * c2 +
             Rational(248) * b6 * c2 - Rational(96) * b6 * c + Rational(321) * b6 * c4 -
             Rational(180) * b5 * c3 - Rational(144) * b5 * c - Rational(360) * b6 * c3 +
             b4 * c8 + Rational(8) * b4 * c6 - Rational(6) * b4 * c7 + Rational(18) * b4 * c5 +
             Rational(7) * b3 * c6 + Rational(90) * b5 * c5 - Rational(14) * b3 * c5 -
             c7 * b3 + Rational(17) * b2 * c4 + Rational(28) * b3 * c3 -
             Rational(28) * b3 * c2 - Rational(4) * b * c3 + Rational(8) * b3 * c -
             Rational(57) * b4 * c4 + Rational(36) * b4 * c3 + Rational(32) * b4 * c2 -
             Rational(12) * b2 * c3 - Rational(48) * b4 * c - c4 + Rational(16) * b4) /
            (delta * g1sq * g2sq);

    E.E20 = half * b * (b * c2 - Rational(2) * c - Rational(2) * b) *
            (Rational(2) * b * c2 - c2 - Rational(6) * b * c + Rational(2) + Rational(4) * b) /
            (g1sq * g2sq);

    E.E30 = c * b2 * (Rational(1) - c) * (c - Rational(2)) *
            (b * c2 - Rational(4) * b * c + Rational(2) + Rational(4) * b) *
            (Rational(2) * b * c2 - c2 - Rational(4) * b * c + Rational(2) * b) /
            (delta * g1sq * g2sq);

    E.E03 = half * b *
            (b2 * c4 - Rational(5) * b2 * c3 + Rational(10) * b2 * c2 - Rational(10) * b2 * c +
             Rational(4) * b2 + Rational(2) * b * c + Rational(2) * c2 - b * c3) *
            (Rational(2) * b2 * c4 - Rational(12) * b2 * c3 + Rational(26) * b2 * c2 -
             Rational(24) * b2 * c + Rational(8) * b2 - c4 * b + Rational(3) * b * c3 -
             Rational(6) * b * c + Rational(4) * b + c3 - Rational(2) * c2 +
             Rational(2) * c) /
            (delta * g1sq * g2sq);

    return E;
}

const SymbolicCoefficients& symbolic_coefficients() {
    static const SymbolicCoefficients E = build_symbolic();
    return E;
}

bool verify_biquadratic_identity() {
    const auto& E = symbolic_coefficients();
    const RationalFunction one(Rational(1)); // L^2 with L = 1
    const RationalFunction two_e11 = RationalFunction(Rational(2)) * E.E11;
    const RationalFunction mid = E.E01 * E.E01 + one - E.E10 * E.E10;
    const RationalFunction lhs =
        two_e11 * two_e11 + mid * mid - RationalFunction(Rational(8)) * E.E01 * E.E01;
    return lhs.is_zero();
}

Rational biquadratic_residual(const ParamPoint& p) {
    const CoefficientSet E = coefficients(p);
    const Rational L2 = kSpaceDiagonal * kSpaceDiagonal;
    const Rational two_e11 = Rational(2) * E.E11;
    const Rational mid = E.E01 * E.E01 + L2 - E.E10 * E.E10;
    return two_e11 * two_e11 + mid * mid - Rational(8) * E.E01 * E.E01 * L2;
}

} // namespace cuboid
