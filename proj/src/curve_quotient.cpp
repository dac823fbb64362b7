#include "cuboid/curve_quotient.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace cuboid {

const char* curve_name(CurveId id) { return id == CurveId::Curve7 ? "7" : "8"; }

const MultiPoly& curve_quartic(CurveId id) {
    static const MultiPoly p7 = MultiPoly::from_coeffs(
        Var::c, {Rational(-7), Rational(40), Rational(-84), Rational(80), Rational(-28)});
    static const MultiPoly p8 = MultiPoly::from_coeffs(
        Var::c, {Rational(1), Rational(-8), Rational(12), Rational(-16), Rational(4)});
    return id == CurveId::Curve7 ? p7 : p8;
}

namespace {

void require_same_curve(CurveId a, CurveId b) {
    if (a != b) throw Error("mixed quotient elements of curve 7 and curve 8");
}

void require_c_only(const RationalFunction& f) {
    for (const MultiPoly* p : {&f.num(), &f.den()}) {
        for (const Var v : p->support()) {
            if (v != Var::c) {
                throw Error("quotient coefficients must be rational functions of c, found " +
                            std::string(var_name(v)));
            }
        }
    }
}

} // namespace

CurveReducedExpr::CurveReducedExpr(CurveId id, RationalFunction a0, RationalFunction a1)
    : curve_(id), a0_(std::move(a0)), a1_(std::move(a1)) {
    require_c_only(a0_);
    require_c_only(a1_);
}

CurveReducedExpr CurveReducedExpr::from_rational(CurveId id, const Rational& v) {
    return CurveReducedExpr(id, RationalFunction(v), RationalFunction());
}

CurveReducedExpr CurveReducedExpr::c_var(CurveId id) {
    return CurveReducedExpr(id, RationalFunction(MultiPoly::variable(Var::c)), RationalFunction());
}

CurveReducedExpr CurveReducedExpr::y_var(CurveId id) {
    return CurveReducedExpr(id, RationalFunction(), RationalFunction(Rational(1)));
}

CurveReducedExpr& CurveReducedExpr::operator+=(const CurveReducedExpr& o) {
    require_same_curve(curve_, o.curve_);
    a0_ += o.a0_;
    a1_ += o.a1_;
    return *this;
}

CurveReducedExpr& CurveReducedExpr::operator-=(const CurveReducedExpr& o) {
    require_same_curve(curve_, o.curve_);
    a0_ -= o.a0_;
    a1_ -= o.a1_;
    return *this;
}

CurveReducedExpr& CurveReducedExpr::operator*=(const CurveReducedExpr& o) {
    require_same_curve(curve_, o.curve_);
    const RationalFunction quartic{curve_quartic(curve_)};
    // (a0 + a1 y)(b0 + b1 y) = a0 b0 + a1 b1 P + (a0 b1 + a1 b0) y.
    RationalFunction n0 = a0_ * o.a0_ + a1_ * o.a1_ * quartic;
    RationalFunction n1 = a0_ * o.a1_ + a1_ * o.a0_;
    a0_ = std::move(n0);
    a1_ = std::move(n1);
    return *this;
}

CurveReducedExpr& CurveReducedExpr::operator/=(const CurveReducedExpr& o) {
    *this *= inverse(o);
    return *this;
}

CurveReducedExpr inverse(const CurveReducedExpr& e) {
    const RationalFunction quartic{curve_quartic(e.curve())};
    // 1/(a0 + a1 y) = (a0 - a1 y) / (a0^2 - a1^2 P); the norm is nonzero for
    // every nonzero element because P is squarefree of degree 4.
    const RationalFunction norm = e.a0() * e.a0() - e.a1() * e.a1() * quartic;
    if (norm.is_zero()) {
        throw DenominatorVanishes("inverse of the zero element of the curve quotient");
    }
    return CurveReducedExpr(e.curve(), e.a0() / norm, -e.a1() / norm);
}

CurveReducedExpr pow(const CurveReducedExpr& base, unsigned exp) {
    CurveReducedExpr result = CurveReducedExpr::from_rational(base.curve(), Rational(1));
    CurveReducedExpr sq = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1U) result *= sq;
        e >>= 1U;
        if (e > 0) sq *= sq;
    }
    return result;
}

Rational CurveReducedExpr::eval(const Rational& y0, const Rational& c0) const {
    const std::map<Var, Rational> at{{Var::c, c0}};
    return a0_.eval(at) + a1_.eval(at) * y0;
}

std::string CurveReducedExpr::to_string() const {
    if (a1_.is_zero()) return a0_.to_string();
    return "(" + a0_.to_string() + ") + (" + a1_.to_string() + ")*y";
}

std::ostream& operator<<(std::ostream& os, const CurveReducedExpr& e) {
    return os << e.to_string();
}

namespace {

/// Splits a polynomial in {c, y} as n0(c) + n1(c)*y using y^2 -> P(c).
std::pair<MultiPoly, MultiPoly> split_even_odd(const MultiPoly& p, const MultiPoly& quartic) {
    for (const Var v : p.support()) {
        if (v != Var::c && v != Var::y) {
            throw Error("reduce_mod_curve input must involve only c and y, found " +
                        std::string(var_name(v)));
        }
    }
    std::vector<MultiPoly> quartic_pows{MultiPoly(Rational(1))};
    MultiPoly even, odd;
    for (const auto& [m, coeff] : p.terms()) {
        const unsigned ey = m[static_cast<std::size_t>(Var::y)];
        const unsigned half = ey / 2;
        while (quartic_pows.size() <= half) quartic_pows.push_back(quartic_pows.back() * quartic);
        const MultiPoly base =
            MultiPoly::monomial(coeff, {{Var::c, m[static_cast<std::size_t>(Var::c)]}}) *
            quartic_pows[half];
        if (ey % 2 == 0) {
            even += base;
        } else {
            odd += base;
        }
    }
    return {even, odd};
}

} // namespace

CurveReducedExpr reduce_mod_curve(const MultiPoly& e, CurveId id) {
    const auto [n0, n1] = split_even_odd(e, curve_quartic(id));
    return CurveReducedExpr(id, RationalFunction(n0), RationalFunction(n1));
}

CurveReducedExpr reduce_mod_curve(const RationalFunction& e, CurveId id) {
    const MultiPoly& quartic = curve_quartic(id);
    const auto [n0, n1] = split_even_odd(e.num(), quartic);
    const auto [d0, d1] = split_even_odd(e.den(), quartic);
    if (d1.is_zero()) {
        if (d0.is_zero()) throw DenominatorVanishes("denominator reduces to zero on the curve");
        return CurveReducedExpr(id, RationalFunction(n0, d0), RationalFunction(n1, d0));
    }
    // Rationalize by the conjugate d0 - d1*y.
    const MultiPoly norm = d0 * d0 - d1 * d1 * quartic;
    if (norm.is_zero()) throw DenominatorVanishes("denominator reduces to zero on the curve");
    return CurveReducedExpr(id, RationalFunction(n0 * d0 - n1 * d1 * quartic, norm),
                            RationalFunction(n1 * d0 - n0 * d1, norm));
}

CurveReducedExpr eval_bc_at_curve(const RationalFunction& f, const CurveReducedExpr& b_value) {
    const CurveId id = b_value.curve();
    const auto eval_poly = [&](const MultiPoly& p) {
        std::vector<CurveReducedExpr> b_pows{CurveReducedExpr::from_rational(id, Rational(1))};
        CurveReducedExpr out(id);
        for (const auto& [m, coeff] : p.terms()) {
            for (const Var v : {Var::x, Var::d, Var::y}) {
                if (m[static_cast<std::size_t>(v)] > 0) {
                    throw Error("eval_bc_at_curve input must involve only b and c");
                }
            }
            const unsigned eb = m[static_cast<std::size_t>(Var::b)];
            while (b_pows.size() <= eb) b_pows.push_back(b_pows.back() * b_value);
            const MultiPoly c_part =
                MultiPoly::monomial(coeff, {{Var::c, m[static_cast<std::size_t>(Var::c)]}});
            out += b_pows[eb] * CurveReducedExpr(id, RationalFunction(c_part), RationalFunction());
        }
        return out;
    };
    CurveReducedExpr den = eval_poly(f.den());
    if (den.is_zero()) {
        throw DenominatorVanishes("denominator vanishes identically under the substitution");
    }
    return eval_poly(f.num()) / den;
}

} // namespace cuboid
