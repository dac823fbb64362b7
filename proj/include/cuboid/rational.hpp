#ifndef CUBOID_RATIONAL_HPP
#define CUBOID_RATIONAL_HPP

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuboid/errors.hpp"

namespace cuboid {

/// Arbitrary-precision integer, a value-semantic wrapper around GMP's mpz_t.
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); } // NOLINT: integers convert implicitly
    explicit Integer(std::string_view s);

    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const;
    std::string to_string() const;

    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator-(const Integer& a) {
        Integer r;
        mpz_neg(r.z_, a.z_);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = mpz_cmp(a.z_, b.z_);
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

  private:
    mpz_t z_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);
/// Quotient of an exact division; the caller must know that b divides a.
Integer divexact(const Integer& a, const Integer& b);
/// Floor square root of a nonnegative integer.
Integer isqrt(const Integer& a);
bool is_perfect_square(const Integer& a);

/// Arbitrary-precision rational number, always in canonical form:
/// gcd(|num|, den) = 1 and den >= 1. Wraps GMP's mpq_t.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) { // NOLINT: integers convert implicitly
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    Rational(const Integer& num) { // NOLINT
        mpq_init(q_);
        mpq_set_z(q_, num.raw());
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "P" or "P/Q" in base 10. No decimal notation.
    static Rational parse(std::string_view s);

    Integer numerator() const;
    Integer denominator() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    std::string to_string() const;

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        mpq_neg(r.q_, a.q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_, b.q_);
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

    mpq_srcptr raw() const { return q_; }

    std::size_t hash() const;

  private:
    mpq_t q_;
};

Rational abs(const Rational& a);
Rational inverse(const Rational& a);
/// Integer power; negative exponents invert (DivisionByZero on 0).
Rational pow(const Rational& base, long exp);

/// The nonnegative s with s*s == r, when r is the square of a rational.
/// Negative and non-square inputs yield nullopt.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Height of p/q in lowest terms with q > 0: max(|p|, q).
Integer height(const Rational& r);

/// Every reduced p/q with q >= 1 and max(|p|, q) <= max_height, ordered by
/// (height, value). Deterministic.
std::vector<Rational> rationals_by_height(unsigned max_height);

} // namespace cuboid

template <> struct std::hash<cuboid::Rational> {
    std::size_t operator()(const cuboid::Rational& r) const noexcept { return r.hash(); }
};

#endif
