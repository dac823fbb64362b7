#include <doctest.h>

#include <algorithm>

#include "cuboid/cuboidcheck.hpp"
#include "cuboid/reducibility.hpp"
#include "test_support.hpp"

using namespace cuboid;

namespace {
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly D = MultiPoly::variable(Var::d);
} // namespace

TEST_CASE("build_cubics at the reference points") {
    // (1,1): P = x^3 - (1/2)x^2 - (3/8)x, E30 = 0 at c = 1.
    const CubicPair at11 = build_cubics({Rational(1), Rational(1)});
    CHECK(at11.P ==
          pow(X, 3) - MultiPoly(Rational(1, 2)) * X * X - MultiPoly(Rational(3, 8)) * X);
    CHECK(at11.Q == pow(D, 3) + MultiPoly(Rational(1, 2)) * D * D -
                        MultiPoly(Rational(7, 8)) * D - MultiPoly(Rational(3, 8)));

    // (0,5): b = 0 kills E20 and E30, E10 = 1.
    const CubicPair at05 = build_cubics({Rational(0), Rational(5)});
    CHECK(at05.P == pow(X, 3) - X * X);

    CHECK_THROWS_AS(build_cubics({Rational(1), Rational(2)}), DegenerateParameters);
}

TEST_CASE("aux_residuals") {
    const std::array<Rational, 3> zeros{Rational(0), Rational(0), Rational(0)};
    CHECK(aux_residuals(zeros, zeros, Rational(0), Rational(0), Rational(0)) == zeros);
    // All-ones roots: term counts are 3, 6, 3.
    const std::array<Rational, 3> ones{Rational(1), Rational(1), Rational(1)};
    CHECK(aux_residuals(ones, ones, Rational(3), Rational(6), Rational(3)) == zeros);
    CHECK(aux_residuals(ones, ones, Rational(0), Rational(0), Rational(0)) ==
          std::array<Rational, 3>{Rational(3), Rational(6), Rational(3)});
}

TEST_CASE("aux_residuals are invariant under simultaneous pair permutation") {
    testing::Rng rng(79);
    for (int i = 0; i < 20; ++i) {
        const std::array<Rational, 3> xs{rng.rational(), rng.rational(), rng.rational()};
        const std::array<Rational, 3> ds{rng.rational(), rng.rational(), rng.rational()};
        const Rational e21 = rng.rational(), e11 = rng.rational(), e12 = rng.rational();
        const auto base = aux_residuals(xs, ds, e21, e11, e12);
        std::array<std::size_t, 3> perm{0, 1, 2};
        do {
            const std::array<Rational, 3> px{xs[perm[0]], xs[perm[1]], xs[perm[2]]};
            const std::array<Rational, 3> pd{ds[perm[0]], ds[perm[1]], ds[perm[2]]};
            CHECK(aux_residuals(px, pd, e21, e11, e12) == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("validate_geometry") {
    // d1 = 5/13 satisfies its own face relation, but d2 would have to square
    // to 153/169, which no rational does; every completion fails.
    const std::array<Rational, 3> xs{Rational(12, 13), Rational(4, 13), Rational(3, 13)};
    CHECK(xs[1] * xs[1] + xs[2] * xs[2] == Rational(25, 169));
    CHECK(!exact_sqrt(Rational(153, 169)).has_value());
    CHECK(!validate_geometry(xs, {Rational(5, 13), Rational(1), Rational(1)}));
    // Positivity violations.
    CHECK(!validate_geometry({Rational(1), Rational(0), Rational(0)},
                             {Rational(1), Rational(1), Rational(1)}));
    CHECK(!validate_geometry({Rational(-1, 2), Rational(1, 2), Rational(1, 2)},
                             {Rational(1), Rational(1), Rational(1)}));
    // Unit space diagonal is required.
    CHECK(!validate_geometry({Rational(1), Rational(1), Rational(1)},
                             {Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("check_candidate verdicts at the reference points") {
    const CuboidReport r11 = check_candidate({Rational(1), Rational(1)});
    CHECK(r11.verdict == Verdict::ReducibleButNotCuboid);
    CHECK(r11.guard_ok);
    CHECK(r11.p_reducible);
    CHECK(r11.q_reducible);
    CHECK(r11.x_roots == std::vector<Rational>{Rational(0)});
    CHECK(r11.d_roots == std::vector<Rational>{Rational(-1)});
    CHECK(!r11.aux_residuals.has_value());

    const CuboidReport r12 = check_candidate({Rational(1), Rational(2)});
    CHECK(r12.verdict == Verdict::Degenerate);
    CHECK(!r12.guard_ok);
    CHECK(r12.x_roots.empty());

    const CuboidReport r05 = check_candidate({Rational(0), Rational(5)});
    CHECK(r05.verdict == Verdict::ReducibleButNotCuboid);
    CHECK(r05.x_roots == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
    CHECK(!r05.positivity); // zero roots violate positivity
}

TEST_CASE("six-case sweep: both cubics reducible, no perfect cuboid") {
    for (const CaseId id : {CaseId::Case1, CaseId::Case2, CaseId::Case3, CaseId::Case4,
                            CaseId::Case5, CaseId::Case6}) {
        for (const ParamPoint& p : sample_case_points(id, 20)) {
            const CuboidReport report = check_candidate(p);
            CHECK(report.p_reducible);
            CHECK(report.q_reducible);
            if (report.verdict == Verdict::PerfectCuboid) {
                // Headline event, not a test failure: record loudly.
                MESSAGE("PERFECT CUBOID CANDIDATE at b=" << p.b.to_string()
                                                         << " c=" << p.c.to_string());
            }
        }
    }
}

TEST_CASE("Vieta consistency on fully split cubics") {
    int full_splits = 0;
    for (const CaseId id : {CaseId::Case1, CaseId::Case2, CaseId::Case3, CaseId::Case4,
                            CaseId::Case5, CaseId::Case6}) {
        for (const ParamPoint& p : sample_case_points(id, 20)) {
            const CuboidReport report = check_candidate(p);
            const CoefficientSet E = coefficients(p);
            if (report.x_roots.size() == 3) {
                ++full_splits;
                const auto& r = report.x_roots;
                CHECK(r[0] + r[1] + r[2] == E.E10);
                CHECK(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] == E.E20);
                CHECK(r[0] * r[1] * r[2] == E.E30);
            }
            if (report.d_roots.size() == 3) {
                ++full_splits;
                const auto& r = report.d_roots;
                CHECK(r[0] + r[1] + r[2] == E.E01);
                CHECK(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] == E.E02);
                CHECK(r[0] * r[1] * r[2] == E.E03);
            }
        }
    }
    CHECK(full_splits > 0); // the b = 0 family always splits completely
}

TEST_CASE("report serialization") {
    const CuboidReport r = check_candidate({Rational(1), Rational(1)});
    const auto j = r.to_json();
    CHECK(j["schema_version"] == 1);
    CHECK(j["b"] == "1");
    CHECK(j["c"] == "1");
    CHECK(j["verdict"] == "ReducibleButNotCuboid");
    CHECK(j["x_roots"].size() == 1);
    CHECK(j["aux_residuals"].is_null());
    CHECK(CuboidReport::csv_header() == "b,c,verdict,p_reducible,q_reducible,x_roots,d_roots");
    CHECK(r.csv_row() == "1,1,ReducibleButNotCuboid,1,1,0,-1");
}
