// End-to-end checks of the CLI binary: exit codes, report content, and
// byte-for-byte determinism of emitted files.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include <json.hpp>

using nlohmann::json;

namespace {

const char* cli = HYPWAVE_CLI_PATH;

std::string temp_path(const std::string& suffix) {
    static int counter = 0;
    return (std::filesystem::temp_directory_path() /
            ("hypwave_cli_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + suffix))
        .string();
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_file = temp_path(".out");
    const std::string cmd = std::string(cli) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out_file, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    std::filesystem::remove(out_file);
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, ss.str()};
}

}  // namespace

TEST_CASE("verify with d'Alembert data passes and reports 76.125") {
    const auto r = run("verify --p 2 --Q 1.25,0.75 --F \"s^2\" --G \"t^3\"");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["command"] == "verify");
    CHECK(j["meta"]["version"].is_string());
    REQUIRE(j["checks"].is_array());
    bool found_final = false;
    for (const auto& c : j["checks"]) {
        CHECK(c["pass"] == true);
        if (c["name"] == "final_identity") {
            found_final = true;
            CHECK(std::abs(c["lhs"].get<double>() - 76.125) < 1e-10);
            CHECK(std::abs(c["rhs"].get<double>() - 76.125) < 1e-10);
        }
        // Shipped-schema shape: every check row carries these fields.
        for (const char* key : {"name", "lhs", "rhs", "residual", "tol", "pass"}) {
            CHECK(c.contains(key));
        }
    }
    CHECK(found_final);
}

TEST_CASE("verify rejects Q outside gamma with exit 2") {
    const auto r = run("verify --p 2 --Q 3,0 --F \"s\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("configuration error") != std::string::npos);
}

TEST_CASE("verify with a manufactured source reports the area term") {
    const auto r = run("verify --p 2 --Q 1.25,0.75 --manufactured \"s*t\" --rho 0.05");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    bool found = false;
    for (const auto& c : j["checks"]) {
        if (c["name"] == "nonhomog_final_identity") {
            found = true;
            CHECK(std::abs(c["lhs"].get<double>() - 17.0) < 1e-9);
            // rhs = u(P1) + u(P2) + area term = 8 + 9.
            CHECK(std::abs(c["rhs"].get<double>() - 17.0) < 1e-9);
            CHECK(c["pass"] == true);
        }
    }
    CHECK(found);
}

TEST_CASE("kernel-table starts at (p+q)/(p-q)") {
    const auto r = run("kernel-table --p 2 --Q 1,0 --phi 0,0.6 --samples 7 --format csv");
    REQUIRE(r.exit_code == 0);
    std::stringstream ss(r.output);
    std::string header, first;
    std::getline(ss, header);
    std::getline(ss, first);
    CHECK(header == "phi,kernel,integral_from_0");
    double phi, k, integral;
    REQUIRE(std::sscanf(first.c_str(), "%lf,%lf,%lf", &phi, &k, &integral) == 3);
    CHECK(phi == 0.0);
    CHECK(k == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(integral == 0.0);
    CHECK(run("kernel-table --p 2 --Q 1,0 --phi 0,5.0").exit_code == 2);
}

TEST_CASE("convergence trace emits the mean-value sequence") {
    const auto r = run(
        "convergence --p 2 --Q 1,0 --F \"0.5*s\" --G \"0.5*t\" --rho 0.1,0.01,0.001 "
        "--order 1 --format csv");
    REQUIRE(r.exit_code == 0);
    std::stringstream ss(r.output);
    std::string header, first;
    std::getline(ss, header);
    std::getline(ss, first);
    CHECK(header == "rho,theta_i,theta_i_star,w,mean_I,mean_Istar,boundary_sum");
    double rho, ti, tis, w, mi, mis, bs;
    REQUIRE(std::sscanf(first.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", &rho, &ti, &tis,
                        &w, &mi, &mis, &bs) == 7);
    CHECK(rho == doctest::Approx(0.1));
    CHECK(mi == doctest::Approx(1.4391424213529779).epsilon(1e-9));
    // Final row carries the extrapolated limits at rho = 0.
    std::string line, last;
    while (std::getline(ss, line)) {
        if (!line.empty()) last = line;
    }
    REQUIRE(std::sscanf(last.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", &rho, &ti, &tis, &w,
                        &mi, &mis, &bs) == 7);
    CHECK(rho == 0.0);
    CHECK(mi == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("domain-info reports the symmetric configuration") {
    const auto r = run("domain-info --p 2 --Q 1.25,0.75");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["Qstar"][0] == doctest::Approx(5.0));
    CHECK(j["Qstar"][1] == doctest::Approx(3.0));
    CHECK(j["P1"][0] == doctest::Approx(2.0));
    CHECK(std::abs(j["P1"][1].get<double>()) < 1e-14);
    CHECK(j["P2"][0] == doctest::Approx(4.25));
    CHECK(j["P2"][1] == doctest::Approx(3.75));
    CHECK(j["A_p"] == doctest::Approx(0.5));
}

TEST_CASE("re-running a command yields byte-identical output") {
    const char* args[] = {
        "domain-info --p 2 --Q 1.25,0.75 --rho 0.1,0.01 --format json",
        "kernel-table --p 2 --Q 1,0 --phi 0,0.6 --samples 9 --format csv",
        "verify --p 2 --Q 1.25,0.75 --F \"s^2\" --G \"t^3\" --format csv",
    };
    for (const char* a : args) {
        const auto r1 = run(a);
        const auto r2 = run(a);
        CHECK(r1.exit_code == r2.exit_code);
        CHECK(r1.output == r2.output);
    }
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = temp_path(".json");
    const auto r = run("domain-info --p 2 --Q 1.25,0.75 --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    const json j = json::parse(f);
    CHECK(j["command"] == "domain-info");
    std::filesystem::remove(path);
}
