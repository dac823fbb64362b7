#ifndef CUBOID_COEFFS_HPP
#define CUBOID_COEFFS_HPP

#include <array>

#include "cuboid/ratfunc.hpp"

namespace cuboid {

/// A point (b, c) of the rational parameter plane.
struct ParamPoint {
    Rational b;
    Rational c;

    friend bool operator==(const ParamPoint& p, const ParamPoint& q) {
        return p.b == q.b && p.c == q.c;
    }
};

/// The space-diagonal length; the whole parametrization is normalized to 1.
inline const Rational kSpaceDiagonal{1};

/// The nine coefficients of the two cubics and of the auxiliary equations,
/// either as exact numbers at a parameter point or as rational functions of
/// (b, c) in symbolic form.
template <typename T> struct CoefficientSetT {
    T E10, E20, E30; // cubic in x
    T E01, E02, E03; // cubic in d
    T E11, E21, E12; // right-hand sides of the auxiliary equations
};

using CoefficientSet = CoefficientSetT<Rational>;
using SymbolicCoefficients = CoefficientSetT<RationalFunction>;

/// The four denominator factors whose product must not vanish, in the order
/// they appear in the non-vanishing condition.
std::array<Rational, 4> guard_factors(const ParamPoint& p);
const std::array<MultiPoly, 4>& guard_factor_polys();

/// True when every coefficient denominator is nonzero at p.
bool guard_nonvanishing(const ParamPoint& p);

/// Exact values of the nine coefficients; throws DegenerateParameters when
/// the guard fails. Computed by direct rational arithmetic, independently of
/// the symbolic forms.
CoefficientSet coefficients(const ParamPoint& p);

/// The nine coefficients as canonical rational functions of b and c.
/// Computed once and cached; safe to share across threads.
const SymbolicCoefficients& symbolic_coefficients();

/// The defining biquadratic identity of the coefficient trio
/// (2 E11)^2 + (E01^2 + L^2 - E10^2)^2 - 8 E01^2 L^2 = 0 with L = 1,
/// checked symbolically over Q(b, c).
bool verify_biquadratic_identity();

/// Numeric left-hand side of the same identity at a guard-passing point.
Rational biquadratic_residual(const ParamPoint& p);

} // namespace cuboid

#endif
