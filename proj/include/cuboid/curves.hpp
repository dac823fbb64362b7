#ifndef CUBOID_CURVES_HPP
#define CUBOID_CURVES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuboid/reducibility.hpp"

namespace cuboid {

/// One of the two quartic curve models, discriminant-checked at construction.
struct QuarticCurve {
    CurveId id;
    MultiPoly quartic;

    static const QuarticCurve& get(CurveId id);

  private:
    explicit QuarticCurve(CurveId curve_id);
};

/// Discriminant of the Case7/Case8 vanishing condition with respect to b,
/// as a polynomial in c. Verified term-for-term against the printed closed
/// forms before returning.
MultiPoly discriminant_in_b(int which);

/// The square-free quartic part of the discriminant: D_7 / (-c^2) or
/// D_8 / ((c-1)^2 (c-2)^2), checked by exact division.
MultiPoly squarefree_quartic_part(int which);

/// Exact membership test y^2 = P_k(c).
bool on_curve(const Rational& y, const Rational& c, CurveId id);

/// Confirms the no-point arguments: P_7(0) < 0, P_8(1) < 0, P_8(2) < 0.
bool no_point_guards();

struct SearchHit {
    CurvePoint point;
    unsigned height; // of c = p/q: max(|p|, q)
    bool exceptional;
};

struct SearchResult {
    CurveId curve = CurveId::Curve7;
    unsigned height_bound = 0;
    std::vector<SearchHit> points; // sorted by (height, c, y)
    std::uint64_t cells_scanned = 0;

    std::string to_csv() const;
    static std::string csv_header();
    nlohmann::json to_json() const;
};

/// Enumerates every reduced c = p/q with q >= 1 and max(|p|, q) <= height
/// and tests P_k(c) for exact squareness. Complete and deterministic; the
/// result does not depend on the number of worker threads.
SearchResult search(CurveId id, unsigned height_bound, unsigned jobs = 1);

} // namespace cuboid

#endif
