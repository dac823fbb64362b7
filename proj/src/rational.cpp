#include "cuboid/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

namespace cuboid {

Integer::Integer(std::string_view s) {
    if (mpz_init_set_str(z_, std::string(s).c_str(), 10) != 0) {
        mpz_clear(z_);
        mpz_init(z_);
        throw ParseError("invalid integer literal: '" + std::string(s) + "'");
    }
}

long Integer::to_long() const {
    if (!fits_long()) throw Error("integer does not fit a long: " + to_string());
    return mpz_get_si(z_);
}

std::string Integer::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.raw(), a.raw());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.raw(), a.raw(), b.raw());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.raw(), a.raw(), b.raw());
    return r;
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.raw(), base.raw(), exp);
    return r;
}

Integer divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DivisionByZero("divexact by zero");
    Integer r;
    mpz_divexact(r.raw(), a.raw(), b.raw());
    return r;
}

Integer isqrt(const Integer& a) {
    if (a.sign() < 0) throw Error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.raw(), a.raw());
    return r;
}

bool is_perfect_square(const Integer& a) {
    if (a.sign() < 0) return false;
    return mpz_perfect_square_p(a.raw()) != 0;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_init(q_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    if (mpz_sgn(mpq_denref(q_)) < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational Rational::parse(std::string_view s) {
    const auto bad = [&]() -> ParseError {
        return ParseError("invalid rational literal: '" + std::string(s) + "' (expected P or P/Q)");
    };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        Integer n(s);
        return Rational(n);
    }
    if (slash == 0 || slash + 1 == s.size()) throw bad();
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den.is_zero()) throw bad();
    return Rational(num, den);
}

Integer Rational::numerator() const {
    Integer r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

Integer Rational::denominator() const {
    Integer r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return numerator().to_string();
    return numerator().to_string() + "/" + denominator().to_string();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

std::size_t Rational::hash() const {
    // Residues mod a 64-bit prime, combined; canonical form makes this well-defined.
    const unsigned long p = 0xFFFFFFFFFFFFFFC5UL;
    std::size_t h = mpz_fdiv_ui(mpq_numref(q_), p);
    h ^= mpz_fdiv_ui(mpq_denref(q_), p) + 0x9e3779b97f4a7c15UL + (h << 6) + (h >> 2);
    return h;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational inverse(const Rational& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(a.denominator(), a.numerator());
}

Rational pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    const bool neg = exp < 0;
    const auto e = static_cast<unsigned long>(neg ? -exp : exp);
    Rational r(pow(base.numerator(), e), pow(base.denominator(), e));
    return neg ? inverse(r) : r;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    const Integer num = r.numerator();
    const Integer den = r.denominator();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    return Rational(isqrt(num), isqrt(den));
}

Integer height(const Rational& r) {
    const Integer n = abs(r.numerator());
    const Integer d = r.denominator();
    return n > d ? n : d;
}

std::vector<Rational> rationals_by_height(unsigned max_height) {
    std::vector<Rational> out;
    for (unsigned h = 1; h <= max_height; ++h) {
        std::vector<Rational> layer;
        const long lh = static_cast<long>(h);
        // New values of height exactly h: p = +-h with q <= h, and q = h with |p| < h.
        for (long q = 1; q <= lh; ++q) {
            if (std::gcd(lh, q) != 1) continue;
            layer.emplace_back(lh, q);
            layer.emplace_back(-lh, q);
        }
        for (long p = -lh + 1; p < lh; ++p) {
            if (std::gcd(p < 0 ? -p : p, lh) != 1) continue;
            layer.emplace_back(p, lh);
        }
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace cuboid
