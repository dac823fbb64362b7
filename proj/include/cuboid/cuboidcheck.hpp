#ifndef CUBOID_CUBOIDCHECK_HPP
#define CUBOID_CUBOIDCHECK_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuboid/coeffs.hpp"
#include "cuboid/univariate.hpp"

namespace cuboid {

/// The monic cubics whose roots are the edges x_i and face diagonals d_i.
struct CubicPair {
    MultiPoly P; // x^3 - E10 x^2 + E20 x - E30
    MultiPoly Q; // d^3 - E01 d^2 + E02 d - E03
};

enum class Verdict { PerfectCuboid, ReducibleButNotCuboid, Irreducible, Degenerate };

const char* verdict_name(Verdict v);

/// Full diagnosis of a candidate parameter point.
struct CuboidReport {
    ParamPoint param{Rational(0), Rational(0)};
    bool guard_ok = false;
    std::vector<Rational> x_roots; // rational roots with multiplicity, ascending
    std::vector<Rational> d_roots;
    bool p_reducible = false;
    bool q_reducible = false;
    /// Present when both cubics split completely: residuals of the accepted
    /// root pairing, or of the identity pairing when none is accepted.
    std::optional<std::array<Rational, 3>> aux_residuals;
    bool positivity = false;
    bool geometry_ok = false;
    Verdict verdict = Verdict::Degenerate;

    nlohmann::json to_json() const;
    static std::string csv_header();
    std::string csv_row() const;
};

/// Builds the cubic pair at a guard-passing point; throws
/// DegenerateParameters otherwise.
CubicPair build_cubics(const ParamPoint& p);

/// Left-minus-right residuals of the three auxiliary equations for the
/// paired roots (x_1,d_1), (x_2,d_2), (x_3,d_3):
///   x1x2d3 + x2x3d1 + x3x1d2            = E21
///   x1d2 + d1x2 + x2d3 + d2x3 + x3d1 + d3x1 = E11
///   x1d2d3 + x2d3d1 + x3d1d2            = E12
std::array<Rational, 3> aux_residuals(const std::array<Rational, 3>& xs,
                                      const std::array<Rational, 3>& ds, const Rational& E21,
                                      const Rational& E11, const Rational& E12);

/// Checks x_i > 0, d_i > 0, x1^2+x2^2+x3^2 = 1 and d_i^2 = x_j^2 + x_k^2
/// with d_i opposite to x_i.
bool validate_geometry(const std::array<Rational, 3>& xs, const std::array<Rational, 3>& ds);

/// Runs the full candidate pipeline; never throws, all failures are verdicts.
CuboidReport check_candidate(const ParamPoint& p);

} // namespace cuboid

#endif
