#include "cuboid/curves.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "cuboid/univariate.hpp"

namespace cuboid {

QuarticCurve::QuarticCurve(CurveId curve_id) : id(curve_id), quartic(curve_quartic(curve_id)) {
    const Rational expected(-1048576); // -2^20
    if (quartic_discriminant(quartic) != expected) {
        throw Error("curve quartic discriminant mismatch for curve " +
                    std::string(curve_name(id)));
    }
}

const QuarticCurve& QuarticCurve::get(CurveId id) {
    static const QuarticCurve c7(CurveId::Curve7);
    static const QuarticCurve c8(CurveId::Curve8);
    return id == CurveId::Curve7 ? c7 : c8;
}

MultiPoly discriminant_in_b(int which) {
    if (which != 7 && which != 8) throw Error("discriminant_in_b expects 7 or 8");
    const CaseId case_id = which == 7 ? CaseId::Case7 : CaseId::Case8;
    const auto in_b = vanishing_condition(case_id).coeffs_in(Var::b);
    if (in_b.size() != 3) throw Error("vanishing condition is not quadratic in b");
    const MultiPoly disc = in_b[1] * in_b[1] - MultiPoly(4) * in_b[2] * in_b[0];

    // The printed closed forms.
    const MultiPoly C = MultiPoly::variable(Var::c);
    MultiPoly expected;
    if (which == 7) {
        // -(7c^4 - 40c^3 + 84c^2 - 80c + 28) c^2
        expected = -MultiPoly::from_coeffs(Var::c, {Rational(7), Rational(-40), Rational(84),
                                                    Rational(-80), Rational(28)}) *
                   C * C;
    } else {
        // (c^4 - 8c^3 + 12c^2 - 16c + 4)(c-1)^2 (c-2)^2
        const MultiPoly cm1 = C - MultiPoly(1);
        const MultiPoly cm2 = C - MultiPoly(2);
        expected = MultiPoly::from_coeffs(Var::c, {Rational(1), Rational(-8), Rational(12),
                                                   Rational(-16), Rational(4)}) *
                   cm1 * cm1 * cm2 * cm2;
    }
    if (disc != expected) {
        throw Error("computed discriminant D_" + std::to_string(which) +
                    " differs from the closed form");
    }
    return disc;
}

MultiPoly squarefree_quartic_part(int which) {
    const MultiPoly disc = discriminant_in_b(which);
    const MultiPoly C = MultiPoly::variable(Var::c);
    MultiPoly square_factor;
    if (which == 7) {
        // D_7 = P_7(c) * c^2: the sign of (2.3) is absorbed by P_7 itself.
        square_factor = C * C;
    } else {
        const MultiPoly cm1 = C - MultiPoly(1);
        const MultiPoly cm2 = C - MultiPoly(2);
        square_factor = cm1 * cm1 * cm2 * cm2;
    }
    const auto [quot, rem] = divmod(disc, square_factor, Var::c);
    if (!rem.is_zero()) {
        throw Error("square factor does not divide D_" + std::to_string(which) + " exactly");
    }
    return quot;
}

bool on_curve(const Rational& y, const Rational& c, CurveId id) {
    return y * y == curve_quartic(id).eval({{Var::c, c}});
}

bool no_point_guards() {
    const MultiPoly& p7 = curve_quartic(CurveId::Curve7);
    const MultiPoly& p8 = curve_quartic(CurveId::Curve8);
    const bool ok7 = p7.eval({{Var::c, Rational(0)}}).sign() < 0;
    const bool ok8 = p8.eval({{Var::c, Rational(1)}}).sign() < 0 &&
                     p8.eval({{Var::c, Rational(2)}}).sign() < 0;
    return ok7 && ok8;
}

namespace {

unsigned height_of(const Rational& c) {
    const Integer h = height(c);
    return static_cast<unsigned>(h.to_long());
}

std::vector<SearchHit> scan_band(CurveId id, const std::vector<Rational>& cs, std::size_t begin,
                                 std::size_t end) {
    const MultiPoly& quartic = curve_quartic(id);
    std::vector<SearchHit> hits;
    for (std::size_t i = begin; i < end; ++i) {
        const Rational& c = cs[i];
        const Rational value = quartic.eval({{Var::c, c}});
        const auto y = exact_sqrt(value);
        if (!y) continue;
        const unsigned h = height_of(c);
        hits.push_back({CurvePoint(*y, c, id), h, false});
        if (!y->is_zero()) hits.push_back({CurvePoint(-*y, c, id), h, false});
    }
    return hits;
}

} // namespace

SearchResult search(CurveId id, unsigned height_bound, unsigned jobs) {
    if (height_bound < 1) throw Error("search height bound must be at least 1");
    if (jobs < 1) jobs = 1;
    const std::vector<Rational> cs = rationals_by_height(height_bound);

    SearchResult result;
    result.curve = id;
    result.height_bound = height_bound;
    result.cells_scanned = cs.size();

    std::vector<std::vector<SearchHit>> partial(jobs);
    if (jobs == 1) {
        partial[0] = scan_band(id, cs, 0, cs.size());
    } else {
        // Contiguous bands; the final sort makes the merge order-insensitive.
        std::vector<std::thread> workers;
        const std::size_t chunk = (cs.size() + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::size_t begin = std::min<std::size_t>(w * chunk, cs.size());
            const std::size_t end = std::min<std::size_t>(begin + chunk, cs.size());
            workers.emplace_back(
                [&, w, begin, end] { partial[w] = scan_band(id, cs, begin, end); });
        }
        for (auto& t : workers) t.join();
    }
    for (auto& band : partial) {
        for (auto& hit : band) result.points.push_back(std::move(hit));
    }
    std::sort(result.points.begin(), result.points.end(),
              [](const SearchHit& a, const SearchHit& b) {
                  if (a.height != b.height) return a.height < b.height;
                  if (a.point.c != b.point.c) return a.point.c < b.point.c;
                  return a.point.y < b.point.y;
              });
    for (auto& hit : result.points) hit.exceptional = is_exceptional(hit.point);
    return result;
}

std::string SearchResult::csv_header() {
    return "curve,c_num,c_den,y_num,y_den,height,exceptional";
}

std::string SearchResult::to_csv() const {
    std::ostringstream os;
    os << csv_header() << "\n";
    for (const auto& hit : points) {
        os << curve_name(curve) << "," << hit.point.c.numerator().to_string() << ","
           << hit.point.c.denominator().to_string() << "," << hit.point.y.numerator().to_string()
           << "," << hit.point.y.denominator().to_string() << "," << hit.height << ","
           << (hit.exceptional ? 1 : 0) << "\n";
    }
    return os.str();
}

nlohmann::json SearchResult::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["curve"] = curve_name(curve);
    j["height_bound"] = height_bound;
    j["cells_scanned"] = cells_scanned;
    j["points"] = nlohmann::json::array();
    for (const auto& hit : points) {
        j["points"].push_back({{"y", hit.point.y.to_string()},
                               {"c", hit.point.c.to_string()},
                               {"height", hit.height},
                               {"exceptional", hit.exceptional}});
    }
    return j;
}

} // namespace cuboid
