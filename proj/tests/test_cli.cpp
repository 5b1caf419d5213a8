#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncl/cli.hpp"

using ncl::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

std::vector<double> fields(const std::string& line) {
    std::vector<double> result;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) result.push_back(std::stod(cell));
    return result;
}

}  // namespace

TEST_CASE("measure: vacuum") {
    const Result r = call({"measure", "--n", "0", "--v", "0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["E_N"].get<double>() == 0.0);
    CHECK(j["dgcz_simple"].get<bool>() == false);
}

TEST_CASE("measure: squeezed vacuum r = 1") {
    const double s = std::sinh(1.0), c = std::cosh(1.0);
    const Result r = call({"measure", "--n", std::to_string(s * s), "--v", std::to_string(s * c), "--theta",
                           std::to_string(M_PI)});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["E_N"].get<double>() - 1.0) < 1e-5);
    CHECK(j["lambda_simon"].get<double>() < 0.0);
}

TEST_CASE("measure: JSON keys in order") {
    const Result r = call({"measure", "--n", "1", "--v", "0.5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    const std::vector<std::string> expected = {"eta_minus", "eta_plus", "E_N",         "lambda_simon", "lambda_dgcz",
                                               "dgcz_simple", "hz",     "best_t",      "best_phi"};
    CHECK(keys == expected);
}

TEST_CASE("measure: fixed splitter") {
    const Result r = call({"measure", "--n", "1", "--v", "1.2", "--mode", "fixed", "--t", "0.6", "--phi", "0.3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["best_t"].get<double>() == doctest::Approx(0.6));
    CHECK(j["best_phi"].get<double>() == doctest::Approx(0.3));
}

TEST_CASE("measure: error handling") {
    CHECK(call({"measure", "--n", "1", "--v", "2"}).code == 2);
    CHECK(call({"measure", "--n", "abc", "--v", "0"}).code == 1);
    CHECK(call({"measure", "--n", "1"}).code == 1);
    CHECK(call({"measure", "--n", "1", "--v", "0", "--bogus"}).code == 1);
    CHECK(call({"measure", "--n", "1", "--v", "0", "--mode", "fixed", "--t", "1.5"}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"measure", "--help"}).code == 0);
}

TEST_CASE("squeezed-sweep output") {
    const Result r = call({"squeezed-sweep", "--r-max", "1", "--steps", "6", "--grid-t", "9", "--grid-phi", "16",
                           "--grid-theta", "8"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "r,E_N_fixed_theta,E_N_optimized_theta,best_t,best_phi");
    CHECK(r.out.find('\r') == std::string::npos);
    double previous = -1.0;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        REQUIRE(f.size() == 5);
        if (i == 1) {
            CHECK(f[0] == 0.0);
            CHECK(f[1] == 0.0);
            CHECK(f[2] == 0.0);
        }
        CHECK(f[1] >= previous);
        CHECK(f[2] >= f[1]);
        previous = f[1];
    }
    CHECK(call({"squeezed-sweep", "--r-max", "1", "--steps", "6", "--grid-t", "9", "--grid-phi", "16",
                "--grid-theta", "8"})
              .out == r.out);
}

TEST_CASE("squeezed-sweep argument checks") {
    CHECK(call({"squeezed-sweep", "--steps", "0"}).code == 1);
    CHECK(call({"squeezed-sweep", "--r-min", "2", "--r-max", "1"}).code == 1);
    CHECK(call({"squeezed-sweep", "--theta-mode", "sideways"}).code == 1);
}

TEST_CASE("dicke-sweep small run") {
    const Result r = call({"dicke-sweep", "--n-atoms", "4", "--fock-dim", "16", "--steps", "5", "--grid-t", "9",
                           "--grid-phi", "16"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "g,g_over_gc,ground_energy,mean_photon,E_N,lambda_simon,degenerate_flag");
    const auto first = fields(ls[1]);
    CHECK(first[0] == 0.0);
    CHECK(first[2] == doctest::Approx(-2.0));
    CHECK(first[3] == 0.0);
    CHECK(fields(ls[5])[1] == doctest::Approx(2.0));
}

TEST_CASE("dicke-sweep argument checks") {
    CHECK(call({"dicke-sweep", "--n-atoms", "0"}).code == 1);
    CHECK(call({"dicke-sweep", "--g-min", "1", "--g-max", "0.5"}).code == 1);
    const Result r = call({"dicke-sweep", "--n-atoms", "10", "--fock-dim", "60", "--g-min", "1.5", "--g-max", "1.6",
                           "--steps", "2", "--max-iter", "5"});
    CHECK(r.code == 3);
    CHECK(r.out.find(",-1") != std::string::npos);
}

TEST_CASE("oracle-check") {
    const Result ok = call({"oracle-check", "--trials", "5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);
    CHECK(ok.out.find("seed 1") != std::string::npos);

    const Result bad = call({"oracle-check", "--trials", "5", "--corrupt-phase"});
    CHECK(bad.code == 4);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    const Result trivial = call({"oracle-check", "--trials", "1", "--r-max", "0", "--alpha-max", "0", "--verbose"});
    CHECK(trivial.code == 0);
    for (const auto& line : lines(trivial.out)) {
        if (line.rfind("max_discrepancy ", 0) == 0) CHECK(std::stod(line.substr(16)) < 1e-12);
    }
    CHECK(trivial.out.find("trial 0 ") != std::string::npos);
}

TEST_CASE("--output writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "ncl_cli_output_test.json";
    std::filesystem::remove(path);
    const Result r = call({"measure", "--n", "0", "--v", "0", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j.contains("E_N"));
    std::filesystem::remove(path);
}
