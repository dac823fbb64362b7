#ifndef CUBOID_CURVE_QUOTIENT_HPP
#define CUBOID_CURVE_QUOTIENT_HPP

#include <iosfwd>
#include <string>

#include "cuboid/ratfunc.hpp"

namespace cuboid {

/// The two elliptic curves y^2 = P_7(c) and y^2 = P_8(c).
enum class CurveId { Curve7, Curve8 };

const char* curve_name(CurveId id); // "7" / "8"

/// The quartic P_7(c) = -7c^4+40c^3-84c^2+80c-28 or
/// P_8(c) = c^4-8c^3+12c^2-16c+4.
const MultiPoly& curve_quartic(CurveId id);

/// Element a0(c) + a1(c)*y of the quotient Q(c)[y] / (y^2 - P_k(c)).
/// Since P_k is not a square in Q(c), the quotient is a field.
class CurveReducedExpr {
  public:
    explicit CurveReducedExpr(CurveId id) : curve_(id) {}
    CurveReducedExpr(CurveId id, RationalFunction a0, RationalFunction a1);

    static CurveReducedExpr from_rational(CurveId id, const Rational& v);
    /// The coordinate functions c and y as quotient elements.
    static CurveReducedExpr c_var(CurveId id);
    static CurveReducedExpr y_var(CurveId id);

    CurveId curve() const { return curve_; }
    const RationalFunction& a0() const { return a0_; }
    const RationalFunction& a1() const { return a1_; }

    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }

    CurveReducedExpr& operator+=(const CurveReducedExpr& o);
    CurveReducedExpr& operator-=(const CurveReducedExpr& o);
    CurveReducedExpr& operator*=(const CurveReducedExpr& o);
    CurveReducedExpr& operator/=(const CurveReducedExpr& o);

    friend CurveReducedExpr operator+(CurveReducedExpr a, const CurveReducedExpr& b) {
        return a += b;
    }
    friend CurveReducedExpr operator-(CurveReducedExpr a, const CurveReducedExpr& b) {
        return a -= b;
    }
    friend CurveReducedExpr operator*(CurveReducedExpr a, const CurveReducedExpr& b) {
        return a *= b;
    }
    friend CurveReducedExpr operator/(CurveReducedExpr a, const CurveReducedExpr& b) {
        return a /= b;
    }
    friend CurveReducedExpr operator-(const CurveReducedExpr& a) {
        CurveReducedExpr r(a);
        r.a0_ = -r.a0_;
        r.a1_ = -r.a1_;
        return r;
    }

    friend bool operator==(const CurveReducedExpr& a, const CurveReducedExpr& b) {
        return a.curve_ == b.curve_ && a.a0_ == b.a0_ && a.a1_ == b.a1_;
    }

    /// Exact evaluation at a rational point (y0, c0) of the curve.
    Rational eval(const Rational& y0, const Rational& c0) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const CurveReducedExpr& e);

  private:
    CurveId curve_;
    RationalFunction a0_;
    RationalFunction a1_;
};

CurveReducedExpr inverse(const CurveReducedExpr& e);
CurveReducedExpr pow(const CurveReducedExpr& base, unsigned exp);

/// Rewrites a rational expression in the variables c and y as a0(c) + a1(c)*y
/// by eliminating every power y^k, k >= 2, via y^2 -> P_k(c). A denominator of
/// y-degree <= 1 after reduction is rationalized by its conjugate; throws
/// DenominatorVanishes when that leaves the zero denominator.
CurveReducedExpr reduce_mod_curve(const RationalFunction& e, CurveId id);
CurveReducedExpr reduce_mod_curve(const MultiPoly& e, CurveId id);

/// Evaluates a rational function of (b, c) in the quotient field with
/// b := b_value and c := the coordinate function c.
CurveReducedExpr eval_bc_at_curve(const RationalFunction& f, const CurveReducedExpr& b_value);

} // namespace cuboid

#endif
