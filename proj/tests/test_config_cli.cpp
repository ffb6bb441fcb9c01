#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "heatkern/config.hpp"
#include "heatkern/errors.hpp"

#ifndef HEATKERN_CLI_PATH
#error "HEATKERN_CLI_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    const fs::path p = fs::temp_directory_path() / "heatkern_cli_tests";
    fs::create_directories(p);
    return p;
}

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path p = tmp_dir() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(HEATKERN_CLI_PATH) + " " + args +
                            " > /dev/null 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    return WEXITSTATUS(raw);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config loader round trips and validates") {
    const auto good = write_config("good.json", R"({
        "symbol": {"kind": "fractional", "d": 1.5},
        "route": "spectral",
        "tol": 1e-8,
        "times": {"kind": "list", "values": [[1.0, 0.0]]}
    })");
    const auto c = heatkern::load_config(good.string());
    CHECK(c.symbol.kind == "fractional");
    CHECK(c.symbol.d == 1.5);
    CHECK(c.tol == 1e-8);
    REQUIRE(c.grid.times.size() == 1);
    CHECK(c.grid.times[0].real() == doctest::Approx(1.0));

    const auto bad_key = write_config("bad_key.json", R"({"tool": 1e-8})");
    CHECK_THROWS_AS(heatkern::load_config(bad_key.string()),
                    heatkern::config_error);

    const auto bad_tol = write_config("bad_tol.json", R"({"tol": -1.0})");
    CHECK_THROWS_AS(heatkern::load_config(bad_tol.string()),
                    heatkern::config_error);

    const auto bad_route =
        write_config("bad_route.json", R"({"route": "magic"})");
    CHECK_THROWS_AS(heatkern::load_config(bad_route.string()),
                    heatkern::config_error);
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run_cli("kernel /nonexistent/config.json") == 2);
    const auto bad = write_config("unknown.json", R"({"campain": 3})");
    CHECK(run_cli("kernel " + bad.string()) == 2);
    const auto malformed = write_config("malformed.json", "{this is not json");
    CHECK(run_cli("kernel " + malformed.string()) == 2);
    CHECK(run_cli("") == 2);
}

TEST_CASE("kernel subcommand writes the sample table") {
    const fs::path out = tmp_dir() / "kernel.csv";
    const auto cfg = write_config("kernel.json", R"({
        "symbol": {"kind": "dn"},
        "route": "closed_form",
        "offsets": {"kind": "list", "values": [0.0, 1.0]},
        "times": {"kind": "list", "values": [[0.5, 0.0]]},
        "out": ")" + out.string() + R"("
    })");
    CHECK(run_cli("kernel " + cfg.string()) == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t_re,t_im,x,y,re,im");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("route comparison passes for the contour route") {
    const auto cfg = write_config("verify_contour.json", R"({
        "symbol": {"kind": "fractional", "d": 1.0},
        "route": "contour",
        "offsets": {"kind": "list", "values": [0.0, 1.0]},
        "times": {"kind": "list", "values": [[1.0, 0.0]]},
        "tol": 1e-6
    })");
    CHECK(run_cli("verify " + cfg.string()) == 0);
}

TEST_CASE("bound scans verify the closed kernel and reject a wrong exponent") {
    const std::string common = R"(
        "symbol": {"kind": "dn"},
        "route": "closed_form",
        "offsets": {"kind": "standard", "per_decade": 4},
        "times": {"kind": "log", "min": 0.01, "max": 10.0, "per_decade": 8},)";
    const auto good = write_config("bounds_ok.json", "{" + common + R"(
        "bound": {"name": "refined", "gamma": 0.0}
    })");
    CHECK(run_cli("bounds " + good.string()) == 0);

    const auto wrong = write_config("bounds_wrong.json", "{" + common + R"(
        "bound": {"name": "refined", "gamma": 0.0, "exponent_offset": 1.0}
    })");
    CHECK(run_cli("bounds " + wrong.string()) == 1);

    const auto lower = write_config("bounds_lower.json", "{" + common + R"(
        "lower": true,
        "bound": {"name": "poisson", "region_r": 1.0}
    })");
    CHECK(run_cli("bounds " + lower.string()) == 0);
}

TEST_CASE("subordinator tables and transform residuals") {
    const auto cfg = write_config("subordinator.json", R"({
        "times": {"kind": "list", "values": [[1.0, 0.0]]},
        "dlist": [1.0],
        "svalues": [0.5, 1.0, 2.0],
        "lambdas": [[1.0, 0.0]],
        "tol": 1e-6
    })");
    CHECK(run_cli("subordinator " + cfg.string()) == 0);
}

TEST_CASE("parametrix residual table") {
    const fs::path out = tmp_dir() / "parametrix.csv";
    const auto cfg = write_config("parametrix.json", R"({
        "symbol": {"kind": "perturbed_dn"},
        "terms": 2,
        "K": 32,
        "lambdas": [[10.0, 3.141592653589793]],
        "out": ")" + out.string() + R"("
    })");
    CHECK(run_cli("parametrix " + cfg.string()) == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "lambda_re,lambda_im,terms,op_norm,lambda_distance");
}

}  // TEST_SUITE
