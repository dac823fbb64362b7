#include "cuboid/ratfunc.hpp"

#include <ostream>

namespace cuboid {

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)), den_(Rational(1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DenominatorVanishes("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Rational(1));
        return;
    }
    // Polynomial gcd reduction when both sides live in one shared variable.
    const auto sn = num_.support();
    const auto sd = den_.support();
    if (sn.size() <= 1 && sd.size() <= 1 && (sn.empty() || sd.empty() || sn == sd)) {
        const Var v = !sn.empty() ? sn.front() : (!sd.empty() ? sd.front() : Var::x);
        const MultiPoly g = gcd_univariate(num_, den_, v);
        if (!g.is_constant()) {
            num_ = divmod(num_, g, v).first;
            den_ = divmod(den_, g, v).first;
        }
    }
    // Scale so the denominator is primitive with positive leading coefficient.
    Rational k = den_.content();
    if (den_.leading_coeff().sign() < 0) k = -k;
    const Rational inv = inverse(k);
    num_ *= inv;
    den_ *= inv;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.num_.is_zero()) throw DivisionByZero("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

Rational RationalFunction::eval(const std::map<Var, Rational>& assignment) const {
    const Rational d = den_.eval(assignment);
    if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at the evaluation point");
    return num_.eval(assignment) / d;
}

std::string RationalFunction::to_string() const {
    if (den_ == MultiPoly(Rational(1))) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
}

RationalFunction pow(const RationalFunction& base, unsigned exp) {
    RationalFunction result(Rational(1));
    RationalFunction sq = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1U) result *= sq;
        e >>= 1U;
        if (e > 0) sq *= sq;
    }
    return result;
}

RationalFunction inverse(const RationalFunction& f) {
    if (f.is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RationalFunction(f.den(), f.num());
}

} // namespace cuboid
