#include "cuboid/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cuboid {

namespace {
constexpr std::array<const char*, kNumVars> kVarNames = {"b", "c", "x", "d", "y"};
}

const char* var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (name == kVarNames[i]) return static_cast<Var>(i);
    }
    return std::nullopt;
}

unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto e : m) d += e;
    return d;
}

MultiPoly::MultiPoly(const Rational& value) {
    if (!value.is_zero()) terms_.emplace(Monomial{}, value);
}

MultiPoly MultiPoly::variable(Var v) {
    MultiPoly p;
    Monomial m{};
    m[static_cast<std::size_t>(v)] = 1;
    p.terms_.emplace(m, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& coeff,
                              std::initializer_list<std::pair<Var, unsigned>> exps) {
    MultiPoly p;
    if (coeff.is_zero()) return p;
    Monomial m{};
    for (const auto& [v, e] : exps) m[static_cast<std::size_t>(v)] += e;
    p.terms_.emplace(m, coeff);
    return p;
}

MultiPoly MultiPoly::from_coeffs(Var v, const std::vector<Rational>& descending) {
    MultiPoly p;
    const std::size_t n = descending.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (descending[i].is_zero()) continue;
        Monomial m{};
        m[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(n - 1 - i);
        p.terms_.emplace(m, descending[i]);
    }
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial{};
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

unsigned MultiPoly::degree(Var v) const {
    unsigned d = 0;
    const auto i = static_cast<std::size_t>(v);
    for (const auto& [m, _] : terms_) d = std::max(d, m[i]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    // Leading term has maximal total degree under graded order.
    return monomial_degree(terms_.begin()->first);
}

std::vector<Var> MultiPoly::support() const {
    std::array<bool, kNumVars> seen{};
    for (const auto& [m, _] : terms_) {
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] > 0) seen[i] = true;
        }
    }
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (seen[i]) out.push_back(static_cast<Var>(i));
    }
    return out;
}

std::optional<Var> MultiPoly::sole_variable() const {
    const auto s = support();
    if (s.size() == 1) return s.front();
    return std::nullopt;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::univ_coeff(Var v, unsigned k) const {
    Monomial m{};
    m[static_cast<std::size_t>(v)] = k;
    return coeff(m);
}

std::vector<MultiPoly> MultiPoly::coeffs_in(Var v) const {
    const auto i = static_cast<std::size_t>(v);
    std::vector<MultiPoly> out(degree(v) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        const unsigned k = rest[i];
        rest[i] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

Rational MultiPoly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

Rational MultiPoly::content() const {
    Integer num_gcd(0);
    Integer den_lcm(1);
    for (const auto& [_, c] : terms_) {
        num_gcd = gcd(num_gcd, c.numerator());
        den_lcm = lcm(den_lcm, c.denominator());
    }
    if (num_gcd.is_zero()) return Rational(0);
    return Rational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::derivative(Var v) const {
    const auto i = static_cast<std::size_t>(v);
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        out.add_term(d, c * Rational(static_cast<long>(m[i])));
    }
    return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
    const auto i = static_cast<std::size_t>(v);
    // Cache powers of the replacement up to the needed degree.
    std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m[i];
        while (powers.size() <= e) powers.push_back(powers.back() * replacement);
        Monomial rest = m;
        rest[i] = 0;
        MultiPoly term;
        term.add_term(rest, c);
        out += term * powers[e];
    }
    return out;
}

Rational MultiPoly::eval(const std::map<Var, Rational>& assignment) const {
    for (const Var v : support()) {
        if (assignment.find(v) == assignment.end()) {
            throw MissingVariable(std::string("no value for variable ") + var_name(v));
        }
    }
    // Cache powers per variable.
    std::array<std::vector<Rational>, kNumVars> powers;
    for (std::size_t i = 0; i < kNumVars; ++i) powers[i].push_back(Rational(1));
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            const unsigned e = m[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.size() <= e) {
                const Rational& base = assignment.at(static_cast<Var>(i));
                while (pw.size() <= e) pw.push_back(pw.back() * base);
            }
            t *= pw[e];
        }
        total += t;
    }
#ifndef NDEBUG
    // Cross-check the term route against Horner on univariate input.
    if (const auto v = sole_variable()) {
        const auto coeffs = univ_coeffs(*this, *v);
        const Rational& at = assignment.at(*v);
        Rational horner(0);
        for (std::size_t k = coeffs.size(); k-- > 0;) horner = horner * at + coeffs[k];
        assert(horner == total);
    }
#endif
    return total;
}

void MultiPoly::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    const auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly pow(const MultiPoly& base, unsigned exp) {
    MultiPoly result{Rational(1)};
    MultiPoly sq = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1U) result *= sq;
        e >>= 1U;
        if (e > 0) sq *= sq;
    }
    return result;
}

std::vector<Rational> univ_coeffs(const MultiPoly& p, Var v) {
    if (p.is_zero()) return {Rational(0)};
    const auto s = p.support();
    if (s.size() > 1 || (s.size() == 1 && s.front() != v)) {
        throw NotUnivariate("polynomial is not univariate in " + std::string(var_name(v)));
    }
    std::vector<Rational> out(p.degree(v) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) out[m[static_cast<std::size_t>(v)]] = c;
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string vars;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += kVarNames[i];
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            os << mag.to_string();
        } else if (mag.is_one()) {
            os << vars;
        } else {
            os << mag.to_string() << "*" << vars;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

} // namespace cuboid
