// End-to-end tests of the command-line binary. The path to the built
// executable is injected by CMake as CUBOID_CLI_PATH.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "cuboid/curves.hpp"

#ifndef CUBOID_CLI_PATH
#error "CUBOID_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CUBOID_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

} // namespace

TEST_CASE("coeffs prints the nine values") {
    const auto r = run_cli("coeffs --b 1 --c 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("E_10 = 1/2") != std::string::npos);
    CHECK(r.output.find("E_20 = -3/8") != std::string::npos);
    CHECK(r.output.find("E_30 = 0") != std::string::npos);
    CHECK(r.output.find("E_12 = -1") != std::string::npos);
}

TEST_CASE("coeffs diagnoses a guard failure") {
    const auto r = run_cli("coeffs --b 1 --c 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("degenerate parameters") != std::string::npos);
    CHECK(r.output.find("<- zero") != std::string::npos);
}

TEST_CASE("classify reports cases and residuals") {
    const auto r = run_cli("classify --b -1/2 --c 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Case2 Case5") != std::string::npos);
    CHECK(r.output.find("Case8 condition: 0") != std::string::npos);
}

TEST_CASE("verify --discriminants exits cleanly") {
    const auto r = run_cli("verify --discriminants");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("-1048576") != std::string::npos);
}

TEST_CASE("verify --all runs every identity") {
    const auto r = run_cli("verify --all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("theorem 4.1") != std::string::npos);
    CHECK(r.output.find("theorem 5.1") != std::string::npos);
}

TEST_CASE("check --b 1/1 --c 2/1 reports Degenerate with exit 0") {
    const auto r = run_cli("check --b 1/1 --c 2/1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Degenerate") != std::string::npos);
}

TEST_CASE("check --json round-trips through the schema") {
    const auto r = run_cli("check --b 1 --c 1 --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["schema_version"] == 1);
    CHECK(j["verdict"] == "ReducibleButNotCuboid");
    CHECK(cuboid::Rational::parse(j["b"].get<std::string>()) == cuboid::Rational(1));
    CHECK(j["x_roots"].size() == 1);
    CHECK(cuboid::Rational::parse(j["x_roots"][0].get<std::string>()) == cuboid::Rational(0));
    CHECK(cuboid::Rational::parse(j["d_roots"][0].get<std::string>()) == cuboid::Rational(-1));
}

TEST_CASE("curve-search --json round-trips the point list") {
    const auto r = run_cli("curve-search --curve 8 --height 2 --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["curve"] == "8");
    REQUIRE(j["points"].size() == 2);
    for (const auto& pt : j["points"]) {
        const auto y = cuboid::Rational::parse(pt["y"].get<std::string>());
        const auto c = cuboid::Rational::parse(pt["c"].get<std::string>());
        CHECK(cuboid::on_curve(y, c, cuboid::CurveId::Curve8));
        CHECK(pt["exceptional"] == true);
    }
}

TEST_CASE("curve-search finds the four exceptional points of curve 7") {
    const auto r = run_cli("curve-search --curve 7 --height 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("found 4 rational points") != std::string::npos);
    CHECK(r.output.find("NON-EXCEPTIONAL") == std::string::npos);
}

TEST_CASE("curve-search output is byte-identical across job counts") {
    const auto once = run_cli("curve-search --curve 8 --height 6 --jobs 1 --csv -");
    const auto many = run_cli("curve-search --curve 8 --height 6 --jobs 8 --csv -");
    CHECK(once.exit_code == 0);
    CHECK(many.exit_code == 0);
    CHECK(once.output == many.output);
    CHECK(once.output.rfind("curve,c_num,c_den,y_num,y_den,height,exceptional\n", 0) == 0);
}

TEST_CASE("scan summarizes verdict counts deterministically") {
    const auto r = run_cli("scan --grid 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("scanned 49 parameter points") != std::string::npos);
    CHECK(r.output.find("PERFECT CUBOID:           0") != std::string::npos);
    const auto jobs = run_cli("scan --grid 2 --jobs 4 --csv -");
    const auto jobs1 = run_cli("scan --grid 2 --jobs 1 --csv -");
    CHECK(jobs.output == jobs1.output);
}

TEST_CASE("scan restricted to a case") {
    const auto r = run_cli("scan --grid 3 --case 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("case 1") != std::string::npos);
    CHECK(r.output.find("irreducible:              0") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("check --b 1.5 --c 2").exit_code == 2);
    CHECK(run_cli("curve-search --curve 9 --height 2").exit_code == 2);
    CHECK(run_cli("scan --grid 2 --case 7").exit_code == 2);
}
