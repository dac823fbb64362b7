#include "cuboid/cuboidcheck.hpp"

#include <algorithm>
#include <sstream>

namespace cuboid {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PerfectCuboid: return "PerfectCuboid";
        case Verdict::ReducibleButNotCuboid: return "ReducibleButNotCuboid";
        case Verdict::Irreducible: return "Irreducible";
        case Verdict::Degenerate: return "Degenerate";
    }
    return "?";
}

CubicPair build_cubics(const ParamPoint& p) {
    const CoefficientSet E = coefficients(p); // throws DegenerateParameters
    const MultiPoly X = MultiPoly::variable(Var::x);
    const MultiPoly D = MultiPoly::variable(Var::d);
    CubicPair out;
    out.P = pow(X, 3) - MultiPoly(E.E10) * X * X + MultiPoly(E.E20) * X - MultiPoly(E.E30);
    out.Q = pow(D, 3) - MultiPoly(E.E01) * D * D + MultiPoly(E.E02) * D - MultiPoly(E.E03);
    return out;
}

std::array<Rational, 3> aux_residuals(const std::array<Rational, 3>& xs,
                                      const std::array<Rational, 3>& ds, const Rational& E21,
                                      const Rational& E11, const Rational& E12) {
    const Rational& x1 = xs[0];
    const Rational& x2 = xs[1];
    const Rational& x3 = xs[2];
    const Rational& d1 = ds[0];
    const Rational& d2 = ds[1];
    const Rational& d3 = ds[2];
    const Rational r1 = x1 * x2 * d3 + x2 * x3 * d1 + x3 * x1 * d2 - E21;
    const Rational r2 = x1 * d2 + d1 * x2 + x2 * d3 + d2 * x3 + x3 * d1 + d3 * x1 - E11;
    const Rational r3 = x1 * d2 * d3 + x2 * d3 * d1 + x3 * d1 * d2 - E12;
    return {r1, r2, r3};
}

bool validate_geometry(const std::array<Rational, 3>& xs, const std::array<Rational, 3>& ds) {
    for (const Rational& v : xs) {
        if (v.sign() <= 0) return false;
    }
    for (const Rational& v : ds) {
        if (v.sign() <= 0) return false;
    }
    const Rational x1s = xs[0] * xs[0], x2s = xs[1] * xs[1], x3s = xs[2] * xs[2];
    if (x1s + x2s + x3s != Rational(1)) return false;
    // d_i spans the face opposite to x_i.
    if (ds[0] * ds[0] != x2s + x3s) return false;
    if (ds[1] * ds[1] != x1s + x3s) return false;
    if (ds[2] * ds[2] != x1s + x2s) return false;
    return true;
}

namespace {

std::vector<Rational> expand_roots(const std::vector<RootWithMultiplicity>& roots) {
    std::vector<Rational> out;
    for (const auto& r : roots) {
        for (unsigned k = 0; k < r.multiplicity; ++k) out.push_back(r.root);
    }
    return out;
}

} // namespace

CuboidReport check_candidate(const ParamPoint& p) {
    CuboidReport report;
    report.param = p;
    report.guard_ok = guard_nonvanishing(p);
    if (!report.guard_ok) {
        report.verdict = Verdict::Degenerate;
        return report;
    }
    const CoefficientSet E = coefficients(p);
    const CubicPair cubics = build_cubics(p);
    report.x_roots = expand_roots(rational_roots(cubics.P));
    report.d_roots = expand_roots(rational_roots(cubics.Q));
    report.p_reducible = !report.x_roots.empty();
    report.q_reducible = !report.d_roots.empty();

    const bool p_splits = report.x_roots.size() == 3;
    const bool q_splits = report.d_roots.size() == 3;
    bool aux_ok = false;
    if (p_splits && q_splits) {
        const std::array<Rational, 3> xs{report.x_roots[0], report.x_roots[1],
                                         report.x_roots[2]};
        std::array<std::size_t, 3> perm{0, 1, 2};
        std::array<Rational, 3> first_residuals{};
        bool first = true;
        // Try every pairing of the d-triple against the sorted x-triple.
        do {
            const std::array<Rational, 3> ds{report.d_roots[perm[0]], report.d_roots[perm[1]],
                                             report.d_roots[perm[2]]};
            const auto res = aux_residuals(xs, ds, E.E21, E.E11, E.E12);
            if (first) {
                first_residuals = res;
                first = false;
            }
            if (res[0].is_zero() && res[1].is_zero() && res[2].is_zero()) {
                aux_ok = true;
                report.aux_residuals = res;
                report.geometry_ok = validate_geometry(xs, ds);
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!aux_ok) report.aux_residuals = first_residuals;

        report.positivity =
            std::all_of(report.x_roots.begin(), report.x_roots.end(),
                        [](const Rational& r) { return r.sign() > 0; }) &&
            std::all_of(report.d_roots.begin(), report.d_roots.end(),
                        [](const Rational& r) { return r.sign() > 0; });
    }

    if (p_splits && q_splits && report.positivity && aux_ok && report.geometry_ok) {
        report.verdict = Verdict::PerfectCuboid;
    } else if (report.p_reducible || report.q_reducible) {
        report.verdict = Verdict::ReducibleButNotCuboid;
    } else {
        report.verdict = Verdict::Irreducible;
    }
    return report;
}

nlohmann::json CuboidReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["b"] = param.b.to_string();
    j["c"] = param.c.to_string();
    j["guard_ok"] = guard_ok;
    auto roots_json = [](const std::vector<Rational>& roots) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : roots) a.push_back(r.to_string());
        return a;
    };
    j["x_roots"] = roots_json(x_roots);
    j["d_roots"] = roots_json(d_roots);
    j["p_reducible"] = p_reducible;
    j["q_reducible"] = q_reducible;
    if (aux_residuals) {
        j["aux_residuals"] = {(*aux_residuals)[0].to_string(), (*aux_residuals)[1].to_string(),
                              (*aux_residuals)[2].to_string()};
    } else {
        j["aux_residuals"] = nullptr;
    }
    j["positivity"] = positivity;
    j["geometry_ok"] = geometry_ok;
    j["verdict"] = verdict_name(verdict);
    return j;
}

std::string CuboidReport::csv_header() {
    return "b,c,verdict,p_reducible,q_reducible,x_roots,d_roots";
}

std::string CuboidReport::csv_row() const {
    const auto join = [](const std::vector<Rational>& roots) {
        std::string s;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (i > 0) s += ";";
            s += roots[i].to_string();
        }
        return s;
    };
    std::ostringstream os;
    os << param.b.to_string() << "," << param.c.to_string() << "," << verdict_name(verdict)
       << "," << (p_reducible ? 1 : 0) << "," << (q_reducible ? 1 : 0) << "," << join(x_roots)
       << "," << join(d_roots);
    return os.str();
}

} // namespace cuboid
