#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HOLODET_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("determinants and entries") {
    auto r = run_cli("det --family andrews --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "mu + 1\n");

    r = run_cli("det --family xin --n 2");
    CHECK(r.out == "-2*mu\n");

    r = run_cli("det --family b11 --n 2 --mu 7/2");
    CHECK(r.out == "-7\n");

    r = run_cli("det --family andrews --n 2 --output json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "andrews");
    CHECK(j["n"] == 2);
    CHECK(j["det"].is_array());

    r = run_cli("entry --family t36 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1/2*mu^2 - 1/2*mu - 1\n");
}

TEST_CASE("cofactors and condensation") {
    auto r = run_cli("cofactors --family andrews --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "c_1 = -1/2*mu\nc_2 = 1\n");

    r = run_cli("cofactors --family b00 --n 4 --mode first --output json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "first");
    CHECK(j["cofactors"].size() == 4);

    r = run_cli("condense --family b00 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("identity  holds") != std::string::npos);
}

TEST_CASE("closed forms") {
    auto r = run_cli("closedform --id thm34q --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "mu + 2\n");

    r = run_cli("closedform --id qconst --n 0");
    CHECK(r.out == "(-4) / (mu + 3)\n");

    r = run_cli("closedform --id thm35 --n 2 --mu 7/2");
    CHECK(r.out == "-7\n");

    r = run_cli("closedform --id thm36 --n 4");
    CHECK(r.exit_code == 1);  // even index: a domain error, not a usage error
}

TEST_CASE("verification suites and exit codes") {
    auto r = run_cli("verify --suite thm36 --n-max 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL PASS") != std::string::npos);

    r = run_cli("verify --suite thm34 --n-max 3 --output json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["suite"] == "even-step");
    CHECK(j["results"].size() == 3);
    for (const auto& res : j["results"]) CHECK(res["status"] == "pass");

    r = run_cli("verify --suite nullcert --n-max 4 --jobs 2");
    CHECK(r.exit_code == 0);

    // Usage errors exit with 2.
    CHECK(run_cli("verify --suite nonsense --n-max 2").exit_code == 2);
    CHECK(run_cli("det --family nonsense --n 2").exit_code == 2);
    CHECK(run_cli("det --family andrews").exit_code == 2);
    CHECK(run_cli("bogus-command").exit_code == 2);
}

TEST_CASE("guessing from a data file") {
    // c(n) = 3^n
    nlohmann::json points = nlohmann::json::object();
    long v = 1;
    for (long n = 0; n <= 20; ++n) {
        points[std::to_string(n)] = std::to_string(v);
        v *= 3;
    }
    std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    std::string data_path = dir + "/holodet_cli_test_data.json";
    std::string ansatz_path = dir + "/holodet_cli_test_ansatz.json";
    std::ofstream(data_path) << nlohmann::json{{"points", points}}.dump();
    std::ofstream(ansatz_path) << nlohmann::json{{"vars", {"n"}},
                                                 {"support", {{0}, {-1}}},
                                                 {"degree_bounds", {0}},
                                                 {"mode", "specialized"}}
                                      .dump();

    auto r = run_cli("guess --input " + data_path + " --ansatz " + ansatz_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("= 0") != std::string::npos);
    CHECK(r.out.find("3") != std::string::npos);

    r = run_cli("guess --input " + data_path + " --ansatz " + ansatz_path + " --output json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["recurrences"].size() == 1);

    CHECK(run_cli("guess --input /nonexistent.json --ansatz " + ansatz_path).exit_code == 2);
    std::remove(data_path.c_str());
    std::remove(ansatz_path.c_str());
}
