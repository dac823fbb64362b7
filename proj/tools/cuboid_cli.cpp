// Command-line front end: coefficient evaluation, case classification,
// curve point search, the symbolic verification suite, candidate checking
// and parameter-grid scans. All arithmetic is exact; rationals are read and
// printed as P or P/Q.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuboid/cuboidcheck.hpp"
#include "cuboid/curves.hpp"
#include "cuboid/reducibility.hpp"

namespace {

using namespace cuboid;

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

unsigned default_jobs() {
    if (const char* env = std::getenv("CUBOID_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const ParseError&) {
        throw CLI::ValidationError(flag, "expected a rational P or P/Q, got '" + text + "'");
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
}

int run_coeffs(const std::string& b_text, const std::string& c_text, bool json) {
    const ParamPoint p{parse_rational_flag(b_text, "--b"), parse_rational_flag(c_text, "--c")};
    const bool ok = guard_nonvanishing(p);
    const auto factors = guard_factors(p);
    static const char* kFactorNames[] = {"Delta", "bc-1-b", "bc-c-2b", "S"};
    if (json) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["b"] = p.b.to_string();
        j["c"] = p.c.to_string();
        j["guard_ok"] = ok;
        j["guard_factors"] = nlohmann::json::object();
        for (int i = 0; i < 4; ++i) j["guard_factors"][kFactorNames[i]] = factors[i].to_string();
        if (ok) {
            const CoefficientSet E = coefficients(p);
            j["coefficients"] = {{"E10", E.E10.to_string()}, {"E20", E.E20.to_string()},
                                 {"E30", E.E30.to_string()}, {"E01", E.E01.to_string()},
                                 {"E02", E.E02.to_string()}, {"E03", E.E03.to_string()},
                                 {"E11", E.E11.to_string()}, {"E21", E.E21.to_string()},
                                 {"E12", E.E12.to_string()}};
        }
        std::cout << j.dump(2) << "\n";
        return kExitSuccess;
    }
    if (!ok) {
        std::cout << "degenerate parameters: a coefficient denominator vanishes at (b, c) = ("
                  << p.b << ", " << p.c << ")\n";
        for (int i = 0; i < 4; ++i) {
            std::cout << "  " << kFactorNames[i] << " = " << factors[i]
                      << (factors[i].is_zero() ? "   <- zero" : "") << "\n";
        }
        return kExitSuccess;
    }
    const CoefficientSet E = coefficients(p);
    std::cout << "E_10 = " << E.E10 << "\nE_20 = " << E.E20 << "\nE_30 = " << E.E30
              << "\nE_01 = " << E.E01 << "\nE_02 = " << E.E02 << "\nE_03 = " << E.E03
              << "\nE_11 = " << E.E11 << "\nE_21 = " << E.E21 << "\nE_12 = " << E.E12 << "\n";
    return kExitSuccess;
}

int run_classify(const std::string& b_text, const std::string& c_text, bool json) {
    const ParamPoint p{parse_rational_flag(b_text, "--b"), parse_rational_flag(c_text, "--c")};
    const auto cases = classify_cases(p);
    const Rational r21 = residual_21(p);
    const Rational r22 = residual_22(p);
    if (json) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["b"] = p.b.to_string();
        j["c"] = p.c.to_string();
        j["cases"] = nlohmann::json::array();
        for (const CaseId id : cases) j["cases"].push_back(case_name(id));
        j["residual_21"] = r21.to_string();
        j["residual_22"] = r22.to_string();
        j["exceptional"] = is_exceptional(p);
        std::cout << j.dump(2) << "\n";
        return kExitSuccess;
    }
    std::cout << "cases:";
    if (cases.empty()) std::cout << " none";
    for (const CaseId id : cases) std::cout << " " << case_name(id);
    std::cout << "\nresidual of the Case7 condition: " << r21
              << "\nresidual of the Case8 condition: " << r22 << "\n";
    if (is_exceptional(p)) std::cout << "exceptional solution of the catalog\n";
    return kExitSuccess;
}

int run_curve_search(int which, unsigned height, unsigned jobs, const std::string& csv_path,
                     bool json) {
    const CurveId id = which == 7 ? CurveId::Curve7 : CurveId::Curve8;
    const SearchResult result = search(id, height, jobs);
    if (!csv_path.empty()) {
        write_output(csv_path, result.to_csv());
        if (csv_path != "-") {
            std::cout << "wrote " << result.points.size() << " points to " << csv_path << "\n";
        }
        return kExitSuccess;
    }
    if (json) {
        std::cout << result.to_json().dump(2) << "\n";
        return kExitSuccess;
    }
    std::cout << "curve " << curve_name(id) << ", height bound " << height << ": scanned "
              << result.cells_scanned << " values of c, found " << result.points.size()
              << " rational points\n";
    for (const auto& hit : result.points) {
        std::cout << "  (y, c) = (" << hit.point.y << ", " << hit.point.c << ")  height "
                  << hit.height << (hit.exceptional ? "  exceptional" : "  NON-EXCEPTIONAL")
                  << "\n";
    }
    return kExitSuccess;
}

int run_check(const std::string& b_text, const std::string& c_text, bool json) {
    const ParamPoint p{parse_rational_flag(b_text, "--b"), parse_rational_flag(c_text, "--c")};
    const CuboidReport report = check_candidate(p);
    if (json) {
        std::cout << report.to_json().dump(2) << "\n";
        return kExitSuccess;
    }
    std::cout << "candidate (b, c) = (" << p.b << ", " << p.c << ")\n";
    std::cout << "verdict: " << verdict_name(report.verdict) << "\n";
    if (report.guard_ok) {
        const auto print_roots = [](const char* label, const std::vector<Rational>& roots) {
            std::cout << label;
            if (roots.empty()) std::cout << " none";
            for (const auto& r : roots) std::cout << " " << r;
            std::cout << "\n";
        };
        print_roots("rational roots of P(x):", report.x_roots);
        print_roots("rational roots of Q(d):", report.d_roots);
        std::cout << "P reducible: " << (report.p_reducible ? "yes" : "no")
                  << ", Q reducible: " << (report.q_reducible ? "yes" : "no") << "\n";
        if (report.aux_residuals) {
            std::cout << "auxiliary residuals: " << (*report.aux_residuals)[0] << ", "
                      << (*report.aux_residuals)[1] << ", " << (*report.aux_residuals)[2]
                      << "\n";
        }
    }
    return kExitSuccess;
}

struct VerifyItem {
    std::string name;
    bool ok;
    double seconds;
};

int run_verify(bool all, bool identity17, bool discriminants, const std::string& theorem,
               bool json) {
    std::vector<VerifyItem> items;
    const auto timed = [&](const std::string& name, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const bool ok = fn();
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        items.push_back({name, ok, dt});
    };

    const bool none_selected = !all && !identity17 && !discriminants && theorem.empty();
    if (none_selected) {
        std::cerr << "verify: select --all, --identity17, --discriminants or --theorem T\n";
        return kExitUsage;
    }
    static const std::vector<std::string> kTheorems = {"2.1", "2.2", "2.3", "2.4",
                                                       "3.1", "3.2", "4.1", "5.1"};
    if (!theorem.empty() &&
        std::find(kTheorems.begin(), kTheorems.end(), theorem) == kTheorems.end()) {
        std::cerr << "verify: unknown theorem '" << theorem
                  << "' (expected 2.1, 2.2, 2.3, 2.4, 3.1, 3.2, 4.1 or 5.1)\n";
        return kExitUsage;
    }

    if (all || discriminants) {
        timed("discriminants: D(P_7) = D(P_8) = -1048576", [] {
            const Rational expected(-1048576);
            return quartic_discriminant(curve_quartic(CurveId::Curve7)) == expected &&
                   quartic_discriminant(curve_quartic(CurveId::Curve8)) == expected;
        });
        timed("discriminants in b match the closed forms; square-free parts are P_7, P_8", [] {
            return squarefree_quartic_part(7) == curve_quartic(CurveId::Curve7) &&
                   squarefree_quartic_part(8) == curve_quartic(CurveId::Curve8);
        });
    }
    if (all || identity17) {
        timed("biquadratic identity in E_11, E_01, E_10 (L = 1)",
              [] { return verify_biquadratic_identity(); });
    }
    const auto want = [&](const char* t) { return all || theorem == t; };
    if (want("2.1")) {
        timed("theorem 2.1: b-map lands on the Case7 condition",
              [] { return bijection_check(CurveId::Curve7).substitution_ok; });
    }
    if (want("2.2")) {
        timed("theorem 2.2: b-map lands on the Case8 condition",
              [] { return bijection_check(CurveId::Curve8).substitution_ok; });
    }
    if (want("2.3")) {
        timed("theorem 2.3: y-map lands on curve 7", [] {
            return verify_forward_map(CurveId::Curve7);
        });
    }
    if (want("2.4")) {
        timed("theorem 2.4: y-map lands on curve 8", [] {
            return verify_forward_map(CurveId::Curve8);
        });
    }
    if (want("3.1")) {
        timed("theorem 3.1: curve 7 correspondence round trip",
              [] { return verify_bijection_symbolic(CurveId::Curve7); });
    }
    if (want("3.2")) {
        timed("theorem 3.2: curve 8 correspondence round trip",
              [] { return verify_bijection_symbolic(CurveId::Curve8); });
    }
    if (want("4.1")) {
        timed("theorem 4.1: P(-1) and E_03 vanish in the curve 7 quotient",
              [] { return prove_factorization(CaseId::Case7).all_zero(); });
    }
    if (want("5.1")) {
        timed("theorem 5.1: P(1) and E_03 vanish in the curve 8 quotient",
              [] { return prove_factorization(CaseId::Case8).all_zero(); });
    }

    bool all_ok = true;
    if (json) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["checks"] = nlohmann::json::array();
        for (const auto& item : items) {
            all_ok = all_ok && item.ok;
            j["checks"].push_back(
                {{"name", item.name}, {"ok", item.ok}, {"seconds", item.seconds}});
        }
        j["ok"] = all_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& item : items) {
            all_ok = all_ok && item.ok;
            std::cout << (item.ok ? "ok   " : "FAIL ") << item.name << "\n";
        }
    }
    return all_ok ? kExitSuccess : kExitVerificationFailure;
}

int run_scan(unsigned grid, std::optional<int> case_number, unsigned jobs,
             const std::string& csv_path, bool json) {
    // Assemble the candidate list deterministically, then fan out.
    std::vector<ParamPoint> candidates;
    if (case_number) {
        const CaseId id = static_cast<CaseId>(*case_number);
        for (const Rational& t : rationals_by_height(grid)) {
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
                    std::cerr << "scan: --case expects 1..6\n";
                    return kExitUsage;
            }
            candidates.push_back(p);
        }
    } else {
        const auto values = rationals_by_height(grid);
        for (const Rational& b : values) {
            for (const Rational& c : values) candidates.push_back({b, c});
        }
    }

    std::vector<CuboidReport> reports(candidates.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            reports[i] = check_candidate(candidates[i]);
        }
    } else {
        std::vector<std::thread> workers;
        const std::size_t chunk = (candidates.size() + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::size_t begin = std::min<std::size_t>(w * chunk, candidates.size());
            const std::size_t end = std::min<std::size_t>(begin + chunk, candidates.size());
            workers.emplace_back([&, begin, end] {
                for (std::size_t i = begin; i < end; ++i) {
                    reports[i] = check_candidate(candidates[i]);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    std::size_t degenerate = 0, irreducible = 0, reducible = 0, perfect = 0;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::Degenerate: ++degenerate; break;
            case Verdict::Irreducible: ++irreducible; break;
            case Verdict::ReducibleButNotCuboid: ++reducible; break;
            case Verdict::PerfectCuboid: ++perfect; break;
        }
    }

    if (!csv_path.empty()) {
        std::string csv = CuboidReport::csv_header() + "\n";
        for (const auto& r : reports) csv += r.csv_row() + "\n";
        write_output(csv_path, csv);
        if (csv_path != "-") {
            std::cout << "wrote " << reports.size() << " reports to " << csv_path << "\n";
        }
    } else if (json) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["grid"] = grid;
        if (case_number) j["case"] = *case_number;
        j["counts"] = {{"total", reports.size()},
                       {"degenerate", degenerate},
                       {"irreducible", irreducible},
                       {"reducible_but_not_cuboid", reducible},
                       {"perfect_cuboid", perfect}};
        j["reports"] = nlohmann::json::array();
        for (const auto& r : reports) j["reports"].push_back(r.to_json());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "scanned " << reports.size() << " parameter points (grid height " << grid
                  << (case_number ? ", case " + std::to_string(*case_number) : std::string())
                  << ")\n";
        std::cout << "  degenerate:               " << degenerate << "\n";
        std::cout << "  irreducible:              " << irreducible << "\n";
        std::cout << "  reducible but not cuboid: " << reducible << "\n";
        std::cout << "  PERFECT CUBOID:           " << perfect << "\n";
    }
    if (perfect > 0) {
        std::cout << "A PERFECT CUBOID CANDIDATE APPEARED; inspect the reports above.\n";
    }
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for the perfect-cuboid parametrization and its "
                 "two elliptic curves"};
    app.require_subcommand(1);

    std::string b_text, c_text, theorem, csv_path;
    bool json = false, all = false, identity17 = false, discriminants = false;
    unsigned height = 10, grid = 4, jobs = default_jobs();
    int which_curve = 7;
    std::optional<int> case_number;

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Evaluate the nine E_ij at (b, c)");
    coeffs_cmd->add_option("--b", b_text, "b as P or P/Q")->required();
    coeffs_cmd->add_option("--c", c_text, "c as P or P/Q")->required();
    coeffs_cmd->add_flag("--json", json, "JSON output");

    auto* classify_cmd =
        app.add_subcommand("classify", "List the reducibility cases holding at (b, c)");
    classify_cmd->add_option("--b", b_text, "b as P or P/Q")->required();
    classify_cmd->add_option("--c", c_text, "c as P or P/Q")->required();
    classify_cmd->add_flag("--json", json, "JSON output");

    auto* search_cmd =
        app.add_subcommand("curve-search", "Enumerate rational points of bounded height");
    search_cmd->add_option("--curve", which_curve, "7 or 8")->required()->check(CLI::IsMember({7, 8}));
    search_cmd->add_option("--height", height, "height bound for c = p/q")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--jobs", jobs, "worker threads (default $CUBOID_JOBS or 1)");
    search_cmd->add_option("--csv", csv_path, "write CSV to a file, or - for stdout");
    search_cmd->add_flag("--json", json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "Run the symbolic proof suite");
    verify_cmd->add_flag("--all", all, "every identity");
    verify_cmd->add_flag("--identity17", identity17, "the biquadratic coefficient identity");
    verify_cmd->add_flag("--discriminants", discriminants, "quartic discriminants and square-free parts");
    verify_cmd->add_option("--theorem", theorem, "one of 2.1 2.2 2.3 2.4 3.1 3.2 4.1 5.1");
    verify_cmd->add_flag("--json", json, "JSON output");

    auto* check_cmd = app.add_subcommand("check", "Full cuboid-candidate report for (b, c)");
    check_cmd->add_option("--b", b_text, "b as P or P/Q")->required();
    check_cmd->add_option("--c", c_text, "c as P or P/Q")->required();
    check_cmd->add_flag("--json", json, "JSON output");

    auto* scan_cmd = app.add_subcommand("scan", "Sweep parameter points of bounded height");
    scan_cmd->add_option("--grid", grid, "height bound for b and c (or the case parameter)")
        ->required()
        ->check(CLI::PositiveNumber);
    auto* case_opt = scan_cmd->add_option("--case", "restrict to one of the cases 1..6");
    case_opt->check(CLI::Range(1, 6));
    scan_cmd->add_option("--jobs", jobs, "worker threads (default $CUBOID_JOBS or 1)");
    scan_cmd->add_option("--csv", csv_path, "write CSV to a file, or - for stdout");
    scan_cmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    if (case_opt->count() > 0) case_number = case_opt->as<int>();

    try {
        if (app.got_subcommand(coeffs_cmd)) return run_coeffs(b_text, c_text, json);
        if (app.got_subcommand(classify_cmd)) return run_classify(b_text, c_text, json);
        if (app.got_subcommand(search_cmd)) {
            return run_curve_search(which_curve, height, jobs, csv_path, json);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify(all, identity17, discriminants, theorem, json);
        }
        if (app.got_subcommand(check_cmd)) return run_check(b_text, c_text, json);
        if (app.got_subcommand(scan_cmd)) {
            return run_scan(grid, case_number, jobs, csv_path, json);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
