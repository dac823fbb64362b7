#ifndef CUBOID_RATFUNC_HPP
#define CUBOID_RATFUNC_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "cuboid/multipoly.hpp"
#include "cuboid/univariate.hpp"

namespace cuboid {

/// Quotient of two multivariate polynomials over Q. The denominator is never
/// zero. Canonical form: content-normalized with a primitive denominator of
/// positive leading coefficient; when numerator and denominator are
/// univariate in one shared variable they are additionally reduced by their
/// polynomial gcd. Equality is tested by cross-multiplication.
class RationalFunction {
  public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& value) : num_(value), den_(Rational(1)) {} // NOLINT
    RationalFunction(long value) : RationalFunction(Rational(value)) {}
    RationalFunction(MultiPoly num); // NOLINT: polynomials convert implicitly
    RationalFunction(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
        return a /= b;
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r(a);
        r.num_ *= Rational(-1);
        return r;
    }

    /// Structural equality of the reduced cross product num1*den2 == num2*den1.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Exact evaluation; throws DenominatorVanishes when the denominator is 0
    /// at the point and MissingVariable on an incomplete assignment.
    Rational eval(const std::map<Var, Rational>& assignment) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

  private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

RationalFunction pow(const RationalFunction& base, unsigned exp);
RationalFunction inverse(const RationalFunction& f);

} // namespace cuboid

#endif
