#ifndef CUBOID_REDUCIBILITY_HPP
#define CUBOID_REDUCIBILITY_HPP

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuboid/coeffs.hpp"
#include "cuboid/curve_quotient.hpp"

namespace cuboid {

/// The eight reducibility cases: 1-6 are the classically known conditions,
/// 7 and 8 are the two elliptic-curve cases.
enum class CaseId { Case1 = 1, Case2, Case3, Case4, Case5, Case6, Case7, Case8 };

const char* case_name(CaseId id);
CurveId curve_of_case(CaseId id); // Case7/Case8 only

/// The quadratic-in-b vanishing condition that seeds Case7 (resp. Case8):
/// the second (resp. third) factor of the E03 numerator.
const MultiPoly& vanishing_condition(CaseId id);

/// A rational point (y, c) on one of the two curves; membership y^2 = P_k(c)
/// is validated at construction (NotOnCurve otherwise).
struct CurvePoint {
    CurvePoint(Rational y_val, Rational c_val, CurveId curve_id);

    Rational y;
    Rational c;
    CurveId curve;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        return a.curve == b.curve && a.y == b.y && a.c == b.c;
    }
};

/// The finitely many solutions and points excluded from the birational
/// correspondence.
struct ExceptionalCatalog {
    std::vector<ParamPoint> solutions7; // (0,0), (-2,1), (2,2)
    std::vector<ParamPoint> solutions8; // (0,0), (-1/2,0)
    std::vector<CurvePoint> points7;    // (1,1), (-2,2), (-1,1), (2,2)
    std::vector<CurvePoint> points8;    // (-2,0), (2,0)
};

const ExceptionalCatalog& exceptional_catalog();

/// Every case among 1-6 whose condition-with-side-constraint holds at p.
/// The conditions overlap, so a set is returned.
std::set<CaseId> classify_cases(const ParamPoint& p);

/// Exact left-hand sides of the two vanishing conditions.
Rational residual_21(const ParamPoint& p);
Rational residual_22(const ParamPoint& p);

/// The parameter b produced by a curve point (ExceptionalC when c is 1 or 2).
Rational b_from_point(const CurvePoint& pt);

/// The curve ordinate produced by a solution of the respective vanishing
/// condition. Requires case Case7 or Case8; NotOnVariety when the residual is
/// nonzero, ZeroC for Case7 with c = 0.
Rational y_from_solution(const ParamPoint& p, CaseId which);

bool is_exceptional(const ParamPoint& p);
bool is_exceptional(const CurvePoint& pt);

/// First `count` guard-passing parameter points satisfying the given case
/// condition (cases 1-6), enumerated deterministically by parameter height.
std::vector<ParamPoint> sample_case_points(CaseId id, unsigned count);

/// Symbolic proof of the birational correspondence for one curve:
/// substituting the b-map into the vanishing condition reduces to zero, and
/// the composed y-map is the identity in the quotient field.
struct BijectionReport {
    CurveId curve;
    bool substitution_ok = false;
    bool composition_ok = false;
    std::string witness; // nonzero residual, when any

    bool ok() const { return substitution_ok && composition_ok; }
};

BijectionReport bijection_check(CurveId id, bool flip_y_sign = false);
bool verify_bijection_symbolic(CurveId id);

/// Symbolic proof of the forward maps: the image of a solution satisfies the
/// curve equation identically modulo the vanishing condition.
bool verify_forward_map(CurveId id);

struct ProofClaim {
    std::string name;
    bool residual_is_zero = false;
    std::string residual;
};

/// Machine proof of the factorization of the two cubics over one curve.
struct ProofReport {
    CaseId which = CaseId::Case7;
    std::vector<ProofClaim> claims;
    std::vector<std::string> p_cofactor; // monic quadratic coefficients, descending
    std::vector<std::string> q_cofactor;

    bool all_zero() const;
    nlohmann::json to_json() const;
};

ProofReport prove_factorization(CaseId which, bool mutate_root_sign = false);

/// Numeric splitting diagnosis at a non-exceptional curve point.
struct SplitReport {
    CaseId which = CaseId::Case7;
    Rational point_y, point_c;
    Rational b;
    std::vector<ProofClaim> claims;
    std::vector<Rational> p_cofactor; // deflated quadratic of P, descending
    std::vector<Rational> q_cofactor; // deflated quadratic of Q, descending
    bool p_quadratic_splits = false;
    bool q_quadratic_splits = false;
    std::vector<Rational> x_roots;
    std::vector<Rational> d_roots;

    nlohmann::json to_json() const;
};

SplitReport split_report(const CurvePoint& pt);

} // namespace cuboid

#endif
