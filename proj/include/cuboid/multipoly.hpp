#ifndef CUBOID_MULTIPOLY_HPP
#define CUBOID_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/rational.hpp"

namespace cuboid {

/// The indeterminates of the problem. b, c are the curve parameters; x, d the
/// cubic variables; y the curve ordinate.
enum class Var : std::uint8_t { b = 0, c = 1, x = 2, d = 3, y = 4 };

inline constexpr std::size_t kNumVars = 5;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector, indexed by Var.
using Monomial = std::array<std::uint32_t, kNumVars>;

unsigned monomial_degree(const Monomial& m);

/// Graded-lexicographic descending order: higher total degree first, ties by
/// lexicographic comparison with Var::b most significant.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = monomial_degree(a);
        const unsigned db = monomial_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored;
/// iteration order is canonical (graded-lex, leading term first).
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(const Rational& value); // NOLINT: constants convert implicitly
    MultiPoly(long value) : MultiPoly(Rational(value)) {}

    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Rational& coeff,
                              std::initializer_list<std::pair<Var, unsigned>> exps);
    /// Univariate polynomial from coefficients in descending degree order.
    static MultiPoly from_coeffs(Var v, const std::vector<Rational>& descending);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    std::vector<Var> support() const;
    /// The unique variable of a non-constant univariate polynomial, if any.
    std::optional<Var> sole_variable() const;

    Rational coeff(const Monomial& m) const;
    /// Coefficient of v^k in a polynomial whose support is contained in {v}.
    Rational univ_coeff(Var v, unsigned k) const;
    /// Coefficients with respect to v, ascending; entry k is a polynomial in
    /// the remaining variables. Size degree(v)+1 (a single zero for the zero
    /// polynomial).
    std::vector<MultiPoly> coeffs_in(Var v) const;
    /// Leading coefficient under the canonical term order.
    Rational leading_coeff() const;
    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    Rational content() const;

    MultiPoly derivative(Var v) const;
    MultiPoly substitute(Var v, const MultiPoly& replacement) const;

    Rational eval(const std::map<Var, Rational>& assignment) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }
    MultiPoly& operator*=(const Rational& s);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a);
        return r *= Rational(-1);
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

  private:
    void add_term(const Monomial& m, const Rational& coeff);

    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exp);

/// Coefficients of a univariate polynomial, ascending degree; {0} for zero.
std::vector<Rational> univ_coeffs(const MultiPoly& p, Var v);

} // namespace cuboid

#endif
