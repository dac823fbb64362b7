#include "cuboid/univariate.hpp"

#include <algorithm>
#include <map>

namespace cuboid {

namespace {

Var require_univariate(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("zero polynomial");
    const auto s = p.support();
    if (s.size() > 1) throw NotUnivariate("polynomial has " + std::to_string(s.size()) + " variables");
    return s.empty() ? Var::x : s.front(); // constants treated as univariate in a dummy variable
}

// ---- integer factorization for root candidates ----

void factor_into(Integer n, std::map<Integer, unsigned>& out);

Integer pollard_rho(const Integer& n) {
    // Floyd cycle detection; n must be odd and composite.
    mpz_t x, y, diff, c, nn, d;
    mpz_inits(x, y, diff, c, nn, d, nullptr);
    mpz_set(nn, n.raw());
    const auto step = [&](mpz_ptr v) {
        mpz_mul(v, v, v);
        mpz_add(v, v, c);
        mpz_mod(v, v, nn);
    };
    Integer result;
    for (unsigned long seed = 1;; ++seed) {
        mpz_set_ui(c, seed);
        mpz_set_ui(x, 2);
        mpz_set_ui(y, 2);
        do {
            step(x);
            step(y);
            step(y);
            mpz_sub(diff, x, y);
            mpz_abs(diff, diff);
            mpz_gcd(d, diff, nn);
        } while (mpz_cmp_ui(d, 1) == 0);
        if (mpz_cmp(d, nn) != 0) {
            mpz_set(result.raw(), d);
            break;
        }
        // Walk collapsed onto the cycle; retry with another increment.
    }
    mpz_clears(x, y, diff, c, nn, d, nullptr);
    return result;
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n.sign() < 0) n = -n;
    if (n.is_zero() || n.is_one()) return;
    // Small trial division first.
    static const unsigned long kSmall[] = {2, 3, 5, 7, 11, 13};
    for (const unsigned long p : kSmall) {
        while (mpz_divisible_ui_p(n.raw(), p)) {
            out[Integer(static_cast<long>(p))] += 1;
            mpz_divexact_ui(n.raw(), n.raw(), p);
        }
    }
    unsigned long d = 17;
    while (d < (1UL << 16) && mpz_cmp_ui(n.raw(), d * d) >= 0) {
        if (mpz_divisible_ui_p(n.raw(), d)) {
            out[Integer(static_cast<long>(d))] += 1;
            mpz_divexact_ui(n.raw(), n.raw(), d);
        } else {
            d += 2;
        }
    }
    if (n.is_one()) return;
    if (mpz_cmp_ui(n.raw(), (1UL << 16) * (1UL << 16)) < 0 || mpz_probab_prime_p(n.raw(), 40) != 0) {
        out[n] += 1; // prime (or below the trial-division bound squared, hence prime)
        return;
    }
    if (is_perfect_square(n)) {
        std::map<Integer, unsigned> sub;
        factor_into(isqrt(n), sub);
        for (const auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    const Integer f = pollard_rho(n);
    factor_into(f, out);
    factor_into(divexact(n, f), out);
}

} // namespace

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n.is_zero()) throw Error("divisors of zero");
    std::map<Integer, unsigned> factors;
    factor_into(n, factors);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t sz = divs.size();
        Integer pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& num, const MultiPoly& den, Var v) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    for (const MultiPoly* p : {&num, &den}) {
        for (const Var s : p->support()) {
            if (s != v) throw NotUnivariate("divmod operands must be univariate in the given variable");
        }
    }
    std::vector<Rational> r = univ_coeffs(num, v);
    const std::vector<Rational> d = univ_coeffs(den, v);
    const std::size_t dn = d.size() - 1;
    if (r.size() - 1 < dn || num.is_zero()) return {MultiPoly{}, num};
    std::vector<Rational> q(r.size() - dn, Rational(0));
    for (std::size_t k = r.size() - 1; k + 1 > dn; --k) {
        if (r[k].is_zero()) {
            if (k == dn) break;
            continue;
        }
        const Rational f = r[k] / d[dn];
        q[k - dn] = f;
        for (std::size_t j = 0; j <= dn; ++j) r[k - dn + j] -= f * d[j];
        if (k == dn) break;
    }
    MultiPoly quot, rem;
    for (std::size_t i = 0; i < q.size(); ++i) {
        quot += MultiPoly::monomial(q[i], {{v, static_cast<unsigned>(i)}});
    }
    for (std::size_t i = 0; i < std::min(r.size(), dn); ++i) {
        rem += MultiPoly::monomial(r[i], {{v, static_cast<unsigned>(i)}});
    }
    return {quot, rem};
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
    if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
    const unsigned db = b.degree(v);
    auto bc = b.coeffs_in(v);
    const MultiPoly lead_b = bc[db];
    MultiPoly r = a;
    while (!r.is_zero() && r.degree(v) >= db) {
        const unsigned dr = r.degree(v);
        const MultiPoly lead_r = r.coeffs_in(v)[dr];
        // r <- lc(b)*r - lc(r)*v^(dr-db)*b eliminates the leading term.
        r = lead_b * r - lead_r * MultiPoly::monomial(Rational(1), {{v, dr - db}}) * b;
    }
    return r;
}

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, Var v) {
    const auto primitive = [](const MultiPoly& p) {
        if (p.is_zero()) return p;
        MultiPoly out = p * inverse(p.content());
        if (out.leading_coeff().sign() < 0) out *= Rational(-1);
        return out;
    };
    MultiPoly f = primitive(a);
    MultiPoly g = primitive(b);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    while (!g.is_zero()) {
        MultiPoly r = pseudo_remainder(f, g, v);
        f = g;
        g = primitive(r);
    }
    return primitive(f);
}

Rational resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
    for (const MultiPoly* t : {&p, &q}) {
        for (const Var s : t->support()) {
            if (s != v) throw NotUnivariate("resultant operands must be univariate in the given variable");
        }
    }
    if (p.is_zero() || q.is_zero()) return Rational(0);
    const unsigned m = p.degree(v);
    const unsigned n = q.degree(v);
    if (m < n) {
        const Rational r = resultant(q, p, v);
        return (m * n) % 2 == 0 ? r : -r;
    }
    if (n == 0) return pow(q.constant_value(), static_cast<long>(m));
    const auto [_, rem] = divmod(p, q, v);
    if (rem.is_zero()) return Rational(0);
    const unsigned d = rem.degree(v);
    const Rational lead = q.univ_coeff(v, n);
    Rational r = pow(lead, static_cast<long>(m - d)) * resultant(q, rem, v);
    return (m * n) % 2 == 0 ? r : -r;
}

Rational quartic_discriminant(const MultiPoly& p) {
    if (p.is_zero()) throw WrongDegree("discriminant of the zero polynomial");
    const Var v = require_univariate(p);
    if (p.degree(v) != 4) {
        throw WrongDegree("expected degree 4, got " + std::to_string(p.degree(v)));
    }
    // n = 4: (-1)^{n(n-1)/2} = +1.
    return resultant(p, p.derivative(v), v) / p.univ_coeff(v, 4);
}

MultiPoly deflate(const MultiPoly& p, const Rational& root) {
    const Var v = require_univariate(p);
    std::vector<Rational> coeffs = univ_coeffs(p, v);
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) throw NotARoot("constant polynomial has no roots");
    // Synthetic division by (v - root).
    std::vector<Rational> q(n, Rational(0));
    Rational carry = coeffs[n];
    for (std::size_t k = n; k-- > 0;) {
        q[k] = carry;
        carry = coeffs[k] + carry * root;
    }
    if (!carry.is_zero()) {
        throw NotARoot("p(" + root.to_string() + ") = " + carry.to_string());
    }
    MultiPoly out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        out += MultiPoly::monomial(q[i], {{v, static_cast<unsigned>(i)}});
    }
    return out;
}

std::vector<RootWithMultiplicity> rational_roots(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("rational_roots of the zero polynomial");
    const auto s = p.support();
    if (s.size() > 1) throw NotUnivariate("rational_roots requires a univariate polynomial");
    if (s.empty()) return {}; // nonzero constant
    const Var v = s.front();

    // Primitive integer form: same roots.
    const MultiPoly prim = p * inverse(p.content());
    std::vector<Rational> coeffs = univ_coeffs(prim, v);

    std::vector<RootWithMultiplicity> found;

    // Trailing zero coefficients give the root 0.
    unsigned zero_mult = 0;
    while (zero_mult < coeffs.size() - 1 && coeffs[zero_mult].is_zero()) ++zero_mult;
    if (zero_mult > 0) {
        found.push_back({Rational(0), zero_mult});
        coeffs.erase(coeffs.begin(), coeffs.begin() + zero_mult);
    }
    if (coeffs.size() == 1) {
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.root < b.root; });
        return found;
    }

    const Integer a0 = coeffs.front().numerator();
    const Integer an = coeffs.back().numerator();
    MultiPoly work;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        work += MultiPoly::monomial(coeffs[i], {{v, static_cast<unsigned>(i)}});
    }

    const std::vector<Integer> ps = positive_divisors(a0);
    const std::vector<Integer> qs = positive_divisors(an);
    std::vector<Rational> candidates;
    candidates.reserve(ps.size() * qs.size() * 2);
    for (const Integer& num : ps) {
        for (const Integer& den : qs) {
            if (!gcd(num, den).is_one()) continue;
            candidates.emplace_back(num, den);
            candidates.emplace_back(-num, den);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& cand : candidates) {
        unsigned mult = 0;
        while (!work.is_constant() && work.eval({{v, cand}}).is_zero()) {
            work = deflate(work, cand);
            ++mult;
        }
        if (mult > 0) found.push_back({cand, mult});
        if (work.is_constant()) break;
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.root < b.root; });
    return found;
}

} // namespace cuboid
