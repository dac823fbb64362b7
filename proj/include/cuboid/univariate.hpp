#ifndef CUBOID_UNIVARIATE_HPP
#define CUBOID_UNIVARIATE_HPP

#include <utility>
#include <vector>

#include "cuboid/multipoly.hpp"

namespace cuboid {

struct RootWithMultiplicity {
    Rational root;
    unsigned multiplicity = 0;

    friend bool operator==(const RootWithMultiplicity& a, const RootWithMultiplicity& b) {
        return a.root == b.root && a.multiplicity == b.multiplicity;
    }
};

/// All rational roots of a univariate polynomial, ascending, with
/// multiplicities. Candidates come from divisor pairs of the constant and
/// leading coefficients of the primitive integer form; every root is verified
/// by exact evaluation and multiplicities are taken by synthetic division.
std::vector<RootWithMultiplicity> rational_roots(const MultiPoly& p);

/// Quotient q with p = (v - root) * q; throws NotARoot when p(root) != 0.
MultiPoly deflate(const MultiPoly& p, const Rational& root);

/// Exact division of univariate polynomials over Q: returns (quotient,
/// remainder) with num = quotient * den + remainder, deg rem < deg den.
std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& num, const MultiPoly& den, Var v);

/// Pseudo-remainder of a by b with respect to v. Coefficients may involve
/// other variables; the result equals lc(b)^k * a mod b for some k >= 0, so
/// it is zero exactly when b divides a over the coefficient fraction field.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v);

/// Primitive gcd (positive leading coefficient) of univariate polynomials
/// over Q, computed by a primitive pseudo-remainder sequence.
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, Var v);

/// Resultant of univariate polynomials over Q via the Euclidean recursion.
Rational resultant(const MultiPoly& p, const MultiPoly& q, Var v);

/// Discriminant of a degree-4 univariate polynomial:
/// (-1)^{n(n-1)/2} Res(p, p') / lc(p) with n = 4.
Rational quartic_discriminant(const MultiPoly& p);

/// All positive divisors of |n| for nonzero n, unsorted.
std::vector<Integer> positive_divisors(const Integer& n);

} // namespace cuboid

#endif
