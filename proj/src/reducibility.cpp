#include "cuboid/reducibility.hpp"

#include <algorithm>

#include "cuboid/cuboidcheck.hpp"

namespace cuboid {

const char* case_name(CaseId id) {
    switch (id) {
        case CaseId::Case1: return "Case1";
        case CaseId::Case2: return "Case2";
        case CaseId::Case3: return "Case3";
        case CaseId::Case4: return "Case4";
        case CaseId::Case5: return "Case5";
        case CaseId::Case6: return "Case6";
        case CaseId::Case7: return "Case7";
        case CaseId::Case8: return "Case8";
    }
    return "?";
}

CurveId curve_of_case(CaseId id) {
    if (id == CaseId::Case7) return CurveId::Curve7;
    if (id == CaseId::Case8) return CurveId::Curve8;
    throw Error("no curve is associated with " + std::string(case_name(id)));
}

namespace {

struct BCTerm {
    long k;
    unsigned be;
    unsigned ce;
};

MultiPoly bc(std::initializer_list<BCTerm> terms) {
    MultiPoly p;
    for (const auto& t : terms) {
        p += MultiPoly::monomial(Rational(t.k), {{Var::b, t.be}, {Var::c, t.ce}});
    }
    return p;
}

} // namespace

const MultiPoly& vanishing_condition(CaseId id) {
    // b^2c^4 - 5b^2c^3 + 10b^2c^2 - 10b^2c + 4b^2 - bc^3 + 2bc + 2c^2
    static const MultiPoly f7 = bc({{1, 2, 4}, {-5, 2, 3}, {10, 2, 2}, {-10, 2, 1}, {4, 2, 0},
                                    {-1, 1, 3}, {2, 1, 1}, {2, 0, 2}});
    // 2b^2c^4 - 12b^2c^3 + 26b^2c^2 - 24b^2c + 8b^2 - bc^4 + 3bc^3 - 6bc + 4b
    // + c^3 - 2c^2 + 2c
    static const MultiPoly f8 = bc({{2, 2, 4}, {-12, 2, 3}, {26, 2, 2}, {-24, 2, 1}, {8, 2, 0},
                                    {-1, 1, 4}, {3, 1, 3}, {-6, 1, 1}, {4, 1, 0}, {1, 0, 3},
                                    {-2, 0, 2}, {2, 0, 1}});
    if (id == CaseId::Case7) return f7;
    if (id == CaseId::Case8) return f8;
    throw Error("vanishing condition exists only for Case7 and Case8");
}

CurvePoint::CurvePoint(Rational y_val, Rational c_val, CurveId curve_id)
    : y(std::move(y_val)), c(std::move(c_val)), curve(curve_id) {
    const Rational rhs = curve_quartic(curve).eval({{Var::c, c}});
    if (y * y != rhs) {
        throw NotOnCurve("(" + y.to_string() + ", " + c.to_string() + ") is not on curve " +
                         curve_name(curve));
    }
}

const ExceptionalCatalog& exceptional_catalog() {
    static const ExceptionalCatalog catalog = [] {
        ExceptionalCatalog cat;
        cat.solutions7 = {{Rational(0), Rational(0)},
                          {Rational(-2), Rational(1)},
                          {Rational(2), Rational(2)}};
        cat.solutions8 = {{Rational(0), Rational(0)}, {Rational(-1, 2), Rational(0)}};
        cat.points7 = {CurvePoint(Rational(1), Rational(1), CurveId::Curve7),
                       CurvePoint(Rational(-2), Rational(2), CurveId::Curve7),
                       CurvePoint(Rational(-1), Rational(1), CurveId::Curve7),
                       CurvePoint(Rational(2), Rational(2), CurveId::Curve7)};
        cat.points8 = {CurvePoint(Rational(-2), Rational(0), CurveId::Curve8),
                       CurvePoint(Rational(2), Rational(0), CurveId::Curve8)};
        return cat;
    }();
    return catalog;
}

std::set<CaseId> classify_cases(const ParamPoint& p) {
    const Rational& b = p.b;
    const Rational& c = p.c;
    std::set<CaseId> out;
    if (b.is_zero() && !c.is_zero()) out.insert(CaseId::Case1);
    if (c.is_zero() && !(b * (Rational(1) + b)).is_zero()) out.insert(CaseId::Case2);
    if (c == Rational(1) && b != Rational(-1)) out.insert(CaseId::Case3);
    if (c == Rational(2) && b != Rational(1)) out.insert(CaseId::Case4);
    const Rational cm2 = c - Rational(2);
    if (b * cm2 * cm2 == Rational(-2) && c != Rational(2)) out.insert(CaseId::Case5);
    const Rational cm1 = c - Rational(1);
    if (Rational(2) * b * cm1 * cm1 == c * c && !(c * cm1).is_zero()) out.insert(CaseId::Case6);
    return out;
}

Rational residual_21(const ParamPoint& p) {
    return vanishing_condition(CaseId::Case7).eval({{Var::b, p.b}, {Var::c, p.c}});
}

Rational residual_22(const ParamPoint& p) {
    return vanishing_condition(CaseId::Case8).eval({{Var::b, p.b}, {Var::c, p.c}});
}

Rational b_from_point(const CurvePoint& pt) {
    const Rational& y = pt.y;
    const Rational& c = pt.c;
    if (c == Rational(1) || c == Rational(2)) {
        throw ExceptionalC("the map is undefined at c = " + c.to_string());
    }
    const Rational cm1 = c - Rational(1);
    const Rational cm2 = c - Rational(2);
    if (pt.curve == CurveId::Curve7) {
        return c * (c * c + y - Rational(2)) /
               (Rational(2) * cm1 * cm2 * (cm1 * cm1 + Rational(1)));
    }
    return (c * c + y - Rational(2)) / (Rational(4) * cm2 * cm1);
}

Rational y_from_solution(const ParamPoint& p, CaseId which) {
    const Rational& b = p.b;
    const Rational& c = p.c;
    if (which == CaseId::Case7) {
        if (!residual_21(p).is_zero()) {
            throw NotOnVariety("(b, c) does not satisfy the Case7 vanishing condition");
        }
        if (c.is_zero()) throw ZeroC("the Case7 map is undefined at c = 0");
        const Rational c2 = c * c, c3 = c2 * c, c4 = c3 * c;
        const Rational a = Rational(2) * c4 - Rational(10) * c3 + Rational(20) * c2 -
                           Rational(20) * c + Rational(8);
        return (a * b - c3 + Rational(2) * c) / c;
    }
    if (which == CaseId::Case8) {
        if (!residual_22(p).is_zero()) {
            throw NotOnVariety("(b, c) does not satisfy the Case8 vanishing condition");
        }
        return (Rational(4) * c * c - Rational(12) * c + Rational(8)) * b - c * c + Rational(2);
    }
    throw Error("y_from_solution requires Case7 or Case8");
}

bool is_exceptional(const ParamPoint& p) {
    const auto& cat = exceptional_catalog();
    const auto hit = [&](const std::vector<ParamPoint>& list) {
        return std::find(list.begin(), list.end(), p) != list.end();
    };
    return hit(cat.solutions7) || hit(cat.solutions8);
}

bool is_exceptional(const CurvePoint& pt) {
    const auto& cat = exceptional_catalog();
    const auto& list = pt.curve == CurveId::Curve7 ? cat.points7 : cat.points8;
    return std::find(list.begin(), list.end(), pt) != list.end();
}

std::vector<ParamPoint> sample_case_points(CaseId id, unsigned count) {
    std::vector<ParamPoint> out;
    for (const Rational& t : rationals_by_height(64)) {
        if (out.size() >= count) break;
        ParamPoint p{Rational(0), Rational(0)};
        switch (id) {
            case CaseId::Case1:
                if (t.is_zero()) continue;
                p = {Rational(0), t};
                break;
            case CaseId::Case2:
                if (t.is_zero() || t == Rational(-1)) continue;
                p = {t, Rational(0)};
                break;
            case CaseId::Case3:
                if (t == Rational(-1)) continue;
                p = {t, Rational(1)};
                break;
            case CaseId::Case4:
                if (t == Rational(1)) continue;
                p = {t, Rational(2)};
                break;
            case CaseId::Case5: {
                if (t == Rational(2)) continue;
                const Rational tm2 = t - Rational(2);
                p = {Rational(-2) / (tm2 * tm2), t};
                break;
            }
            case CaseId::Case6: {
                if (t.is_zero() || t == Rational(1)) continue;
                const Rational tm1 = t - Rational(1);
                p = {t * t / (Rational(2) * tm1 * tm1), t};
                break;
            }
            default:
                throw Error("sampling is defined for cases 1-6 only");
        }
        if (!guard_nonvanishing(p)) continue;
        out.push_back(p);
    }
    if (out.size() < count) {
        throw Error("exhausted the sample enumeration for " + std::string(case_name(id)));
    }
    return out;
}

namespace {

/// The b-map of Theorem 2.1 / 2.2 as a rational function of (c, y).
RationalFunction b_map_rf(CurveId id, bool flip_y_sign) {
    const MultiPoly C = MultiPoly::variable(Var::c);
    const MultiPoly Y = MultiPoly::variable(Var::y);
    const MultiPoly y_term = flip_y_sign ? -Y : Y;
    const MultiPoly one(1);
    const MultiPoly cm1 = C - one;
    const MultiPoly cm2 = C - MultiPoly(2);
    if (id == CurveId::Curve7) {
        const MultiPoly num = C * (C * C + y_term - MultiPoly(2));
        const MultiPoly den = MultiPoly(2) * cm1 * cm2 * (cm1 * cm1 + one);
        return RationalFunction(num, den);
    }
    const MultiPoly num = C * C + y_term - MultiPoly(2);
    const MultiPoly den = MultiPoly(4) * cm2 * cm1;
    return RationalFunction(num, den);
}

/// The y-map of Theorem 2.3 / 2.4 as a rational function of (b, c).
RationalFunction y_map_rf(CaseId which) {
    const MultiPoly B = MultiPoly::variable(Var::b);
    const MultiPoly C = MultiPoly::variable(Var::c);
    if (which == CaseId::Case7) {
        const MultiPoly a = MultiPoly::from_coeffs(
            Var::c, {Rational(2), Rational(-10), Rational(20), Rational(-20), Rational(8)});
        return RationalFunction(a * B - pow(C, 3) + MultiPoly(2) * C, C);
    }
    const MultiPoly a =
        MultiPoly::from_coeffs(Var::c, {Rational(4), Rational(-12), Rational(8)});
    return RationalFunction(a * B - C * C + MultiPoly(2));
}

} // namespace

BijectionReport bijection_check(CurveId id, bool flip_y_sign) {
    BijectionReport report;
    report.curve = id;
    const CaseId which = id == CurveId::Curve7 ? CaseId::Case7 : CaseId::Case8;
    const CurveReducedExpr B = reduce_mod_curve(b_map_rf(id, flip_y_sign), id);

    const CurveReducedExpr subst =
        eval_bc_at_curve(RationalFunction(vanishing_condition(which)), B);
    report.substitution_ok = subst.is_zero();

    const CurveReducedExpr composed = eval_bc_at_curve(y_map_rf(which), B);
    const CurveReducedExpr diff = composed - CurveReducedExpr::y_var(id);
    report.composition_ok = diff.is_zero();

    if (!report.substitution_ok) {
        report.witness = "substitution residual: " + subst.to_string();
    } else if (!report.composition_ok) {
        report.witness = "composition minus y: " + diff.to_string();
    }
    return report;
}

bool verify_bijection_symbolic(CurveId id) { return bijection_check(id).ok(); }

bool verify_forward_map(CurveId id) {
    const MultiPoly B = MultiPoly::variable(Var::b);
    const MultiPoly C = MultiPoly::variable(Var::c);
    if (id == CurveId::Curve7) {
        // (c * y(b,c))^2 = c^2 P_7(c) must hold modulo the vanishing condition.
        const MultiPoly a = MultiPoly::from_coeffs(
            Var::c, {Rational(2), Rational(-10), Rational(20), Rational(-20), Rational(8)});
        const MultiPoly cy = a * B - pow(C, 3) + MultiPoly(2) * C;
        const MultiPoly lhs = cy * cy - C * C * curve_quartic(id);
        return pseudo_remainder(lhs, vanishing_condition(CaseId::Case7), Var::b).is_zero();
    }
    const MultiPoly a =
        MultiPoly::from_coeffs(Var::c, {Rational(4), Rational(-12), Rational(8)});
    const MultiPoly yv = a * B - C * C + MultiPoly(2);
    const MultiPoly lhs = yv * yv - curve_quartic(id);
    return pseudo_remainder(lhs, vanishing_condition(CaseId::Case8), Var::b).is_zero();
}

bool ProofReport::all_zero() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const ProofClaim& c) { return c.residual_is_zero; });
}

ProofReport prove_factorization(CaseId which, bool mutate_root_sign) {
    if (which != CaseId::Case7 && which != CaseId::Case8) {
        throw Error("prove_factorization requires Case7 or Case8");
    }
    const CurveId id = curve_of_case(which);
    ProofReport report;
    report.which = which;

    const CurveReducedExpr B = reduce_mod_curve(b_map_rf(id, false), id);
    const auto& sym = symbolic_coefficients();
    const CurveReducedExpr e10 = eval_bc_at_curve(sym.E10, B);
    const CurveReducedExpr e20 = eval_bc_at_curve(sym.E20, B);
    const CurveReducedExpr e30 = eval_bc_at_curve(sym.E30, B);
    const CurveReducedExpr e01 = eval_bc_at_curve(sym.E01, B);
    const CurveReducedExpr e02 = eval_bc_at_curve(sym.E02, B);
    const CurveReducedExpr e03 = eval_bc_at_curve(sym.E03, B);

    Rational root = which == CaseId::Case7 ? Rational(-1) : Rational(1);
    if (mutate_root_sign) root = -root;
    const CurveReducedExpr r = CurveReducedExpr::from_rational(id, root);

    const CurveReducedExpr p_at_root = r * r * r - e10 * r * r + e20 * r - e30;
    report.claims.push_back({"P(" + root.to_string() + ") == 0 in the curve " +
                                 curve_name(id) + " quotient",
                             p_at_root.is_zero(), p_at_root.to_string()});
    report.claims.push_back({"E_03 == 0 in the curve " + std::string(curve_name(id)) +
                                 " quotient (so Q(0) == 0)",
                             e03.is_zero(), e03.to_string()});

    // Synthetic division of x^3 - E10 x^2 + E20 x - E30 by (x - root).
    const CurveReducedExpr q1 = -e10 + r;
    const CurveReducedExpr q0 = e20 + r * q1;
    report.p_cofactor = {"1", q1.to_string(), q0.to_string()};
    report.q_cofactor = {"1", (-e01).to_string(), e02.to_string()};
    return report;
}

nlohmann::json ProofReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["case"] = case_name(which);
    j["claims"] = nlohmann::json::array();
    for (const auto& c : claims) {
        j["claims"].push_back(
            {{"name", c.name}, {"residual_is_zero", c.residual_is_zero}, {"residual", c.residual}});
    }
    j["residual_is_zero"] = all_zero();
    const char* suffix = which == CaseId::Case7 ? "7.2" : "8.2";
    j["cofactor_coefficients"] = nlohmann::json::array();
    j["cofactor_coefficients"].push_back(
        {{"polynomial", std::string("P_") + suffix}, {"coefficients", p_cofactor}});
    j["cofactor_coefficients"].push_back(
        {{"polynomial", std::string("Q_") + suffix}, {"coefficients", q_cofactor}});
    return j;
}

SplitReport split_report(const CurvePoint& pt) {
    if (is_exceptional(pt)) {
        throw ExceptionalPoint("(" + pt.y.to_string() + ", " + pt.c.to_string() +
                               ") is an exceptional point of curve " + curve_name(pt.curve));
    }
    const CaseId which = pt.curve == CurveId::Curve7 ? CaseId::Case7 : CaseId::Case8;
    SplitReport report;
    report.which = which;
    report.point_y = pt.y;
    report.point_c = pt.c;
    report.b = b_from_point(pt); // ExceptionalC at c in {1, 2}

    const ParamPoint param{report.b, pt.c};
    const CubicPair cubics = build_cubics(param); // DegenerateParameters on guard failure
    const Rational root = which == CaseId::Case7 ? Rational(-1) : Rational(1);

    const Rational p_at_root = cubics.P.eval({{Var::x, root}});
    const Rational e03 = coefficients(param).E03;
    report.claims.push_back({"P(" + root.to_string() + ") == 0 at the point",
                             p_at_root.is_zero(), p_at_root.to_string()});
    report.claims.push_back({"E_03 == 0 at the point", e03.is_zero(), e03.to_string()});

    const MultiPoly p_quad = deflate(cubics.P, root);
    const MultiPoly q_quad = deflate(cubics.Q, Rational(0));
    report.p_cofactor = {p_quad.univ_coeff(Var::x, 2), p_quad.univ_coeff(Var::x, 1),
                         p_quad.univ_coeff(Var::x, 0)};
    report.q_cofactor = {q_quad.univ_coeff(Var::d, 2), q_quad.univ_coeff(Var::d, 1),
                         q_quad.univ_coeff(Var::d, 0)};

    const auto splits = [](const std::vector<Rational>& quad) {
        const Rational disc = quad[1] * quad[1] - Rational(4) * quad[0] * quad[2];
        return exact_sqrt(disc).has_value();
    };
    report.p_quadratic_splits = splits(report.p_cofactor);
    report.q_quadratic_splits = splits(report.q_cofactor);

    for (const auto& r : rational_roots(cubics.P)) {
        for (unsigned k = 0; k < r.multiplicity; ++k) report.x_roots.push_back(r.root);
    }
    for (const auto& r : rational_roots(cubics.Q)) {
        for (unsigned k = 0; k < r.multiplicity; ++k) report.d_roots.push_back(r.root);
    }
    return report;
}

nlohmann::json SplitReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["case"] = case_name(which);
    j["curve"] = curve_name(which == CaseId::Case7 ? CurveId::Curve7 : CurveId::Curve8);
    j["point"] = {{"y", point_y.to_string()}, {"c", point_c.to_string()}};
    j["b"] = b.to_string();
    j["claims"] = nlohmann::json::array();
    bool all = true;
    for (const auto& c : claims) {
        all = all && c.residual_is_zero;
        j["claims"].push_back(
            {{"name", c.name}, {"residual_is_zero", c.residual_is_zero}, {"residual", c.residual}});
    }
    j["residual_is_zero"] = all;
    const auto coeff_strings = [](const std::vector<Rational>& v) {
        std::vector<std::string> out;
        for (const auto& r : v) out.push_back(r.to_string());
        return out;
    };
    const char* suffix = which == CaseId::Case7 ? "7.2" : "8.2";
    j["cofactor_coefficients"] = nlohmann::json::array();
    j["cofactor_coefficients"].push_back({{"polynomial", std::string("P_") + suffix},
                                          {"coefficients", coeff_strings(p_cofactor)},
                                          {"splits", p_quadratic_splits}});
    j["cofactor_coefficients"].push_back({{"polynomial", std::string("Q_") + suffix},
                                          {"coefficients", coeff_strings(q_cofactor)},
                                          {"splits", q_quadratic_splits}});
    const auto roots_json = [](const std::vector<Rational>& roots) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : roots) a.push_back(r.to_string());
        return a;
    };
    j["x_roots"] = roots_json(x_roots);
    j["d_roots"] = roots_json(d_roots);
    return j;
}

} // namespace cuboid
