#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MATEL_CLI_PATH
#error "MATEL_CLI_PATH must point at the command-line binary"
#endif

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string command = std::string("\"") + MATEL_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run_with_env(const std::string& env, const std::string& args) {
    const std::string command =
        env + " \"" + MATEL_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("compute: pinned exact outputs") {
    RunResult r = run("compute --kernel log --m 2 --n 1 --basis shifted --region triangle");
    REQUIRE(r.exit_code == 0);
    json object = json::parse(r.output);
    CHECK(object["m"] == 2);
    CHECK(object["n"] == 1);
    CHECK(object["basis"] == "shifted");
    CHECK(object["region"] == "triangle");
    CHECK(object["value"]["rational"] == "-61/900");
    CHECK(object.contains("route"));

    r = run("compute --kernel power --alpha 1 --m 2 --n 0");
    REQUIRE(r.exit_code == 0);
    object = json::parse(r.output);
    CHECK(object["value"]["rational"] == "1/60");
    CHECK(object["alpha"] == "1");

    r = run("compute --kernel log --m 0 --n 0 --basis standard --region square");
    REQUIRE(r.exit_code == 0);
    object = json::parse(r.output);
    CHECK(object["value"]["rational"] == "-6");
    CHECK(object["value"]["ln2_coeff"] == "4");
}

TEST_CASE("compute: csv and float renderings") {
    RunResult r = run("compute --kernel log --m 0 --n 0 --basis standard --region square "
                      "--format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "-6+4*ln2\n");

    r = run("compute --kernel log --m 2 --n 1 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "-61/900\n");

    r = run("compute --kernel power --alpha 1/2 --m 0 --n 0 --mode float");
    REQUIRE(r.exit_code == 0);
    const json object = json::parse(r.output);
    CHECK(std::abs(object["value"]["float"].get<double>() - 4.0 / 15.0) <= 1e-15);
}

TEST_CASE("matrix: entries follow the closed forms") {
    const RunResult r = run("matrix --kernel log --size 4 --basis shifted --region triangle");
    REQUIRE(r.exit_code == 0);
    const json object = json::parse(r.output);
    CHECK(object["size"] == 4);
    CHECK(object["entries"][0][0]["rational"] == "-3/4");
    CHECK(object["entries"][1][0]["rational"] == "-5/36");
    CHECK(object["entries"][3][3]["rational"] == "-1/48");
    CHECK(object["entries"][2][3]["rational"] == "527/14700");

    const RunResult csv = run("matrix --kernel log --size 2 --basis standard --region square "
                              "--format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == "-6+4*ln2,0\n0,-1\n");
}

TEST_CASE("table: oracle values with documented diffs against both sources") {
    const RunResult r = run("table");
    REQUIRE(r.exit_code == 0);
    const json object = json::parse(r.output);
    REQUIRE(object["entries"].size() == 16);
    int printed_mismatches = 0;
    for (const auto& entry : object["entries"]) {
        const int m = entry["m"].get<int>();
        const int n = entry["n"].get<int>();
        if (!entry["printed_match"].get<bool>()) {
            ++printed_mismatches;
            CHECK(m == 3);
            CHECK(n == 3);
            CHECK(entry["computed"] == "-1/48");
            CHECK(entry["printed"] == "1/120");
        }
        if (m == 0 && n == 0) CHECK(entry["theorem"].is_null());
        if ((m == 3 && n == 0) || (m == 0 && n == 3)) {
            CHECK_FALSE(entry["theorem_match"].get<bool>()); // literal form misses the sign
            CHECK(entry["printed_match"].get<bool>());       // the printed table is right here
        }
        if (m == 3 && n == 3) CHECK(entry["theorem_match"].get<bool>());
    }
    CHECK(printed_mismatches == 1);
}

TEST_CASE("oracle: closed forms against independent evaluation") {
    RunResult r = run("oracle --kernel log --m 3 --n 0");
    REQUIRE(r.exit_code == 0);
    json object = json::parse(r.output);
    CHECK(object["value"]["rational"] == "-1/120");
    CHECK(object["oracle"]["rational"] == "-1/120");
    CHECK(object["equal"] == true);

    r = run("oracle --kernel power --alpha 1 --m 2 --n 0");
    REQUIRE(r.exit_code == 0);
    object = json::parse(r.output);
    CHECK(object["equal"] == true);

    r = run("oracle --kernel power --alpha 1/2 --m 0 --n 0");
    REQUIRE(r.exit_code == 0);
    object = json::parse(r.output);
    CHECK(object["abs_diff"].get<double>() <= 1e-9);
}

TEST_CASE("verify: suites run clean and report per-identity lines") {
    const RunResult r = run("verify --suite table1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("ALL PASS") != std::string::npos);

    const RunResult zeros = run("verify --suite zeros --max-n 6");
    REQUIRE(zeros.exit_code == 0);
    CHECK(zeros.output.find("ALL PASS") != std::string::npos);
}

TEST_CASE("exit codes: usage 2, domain errors 3") {
    CHECK(run("lambda-kernel").exit_code == 2);
    CHECK(run("compute --kernel warp --m 0 --n 0").exit_code == 2);
    CHECK(run("compute --kernel log --basis standard --region triangle").exit_code == 2);
    CHECK(run("compute --kernel power --m 0 --n 0").exit_code == 2); // missing alpha
    CHECK(run("compute --kernel power --alpha abc --m 0 --n 0").exit_code == 2);
    CHECK(run("compute --no-such-flag").exit_code == 2);
    CHECK(run("verify --suite nonsense").exit_code == 2);
    CHECK(run("").exit_code == 2); // a subcommand is required

    CHECK(run("compute --kernel power --alpha -2 --m 0 --n 0").exit_code == 3);
    CHECK(run("compute --kernel power --alpha 1/2 --m 0 --n 0 "
              "--basis standard --region square").exit_code == 3);

    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("quadrature node count comes from the environment") {
    const RunResult ok = run_with_env("MATEL_QUAD_NODES=16",
                                      "oracle --kernel power --alpha 1/2 --m 1 --n 1");
    REQUIRE(ok.exit_code == 0);
    const json object = json::parse(ok.output);
    CHECK(object["abs_diff"].get<double>() <= 1e-9);

    CHECK(run_with_env("MATEL_QUAD_NODES=200",
                       "oracle --kernel power --alpha 1/2 --m 0 --n 0").exit_code == 2);
    CHECK(run_with_env("MATEL_QUAD_NODES=abc",
                       "oracle --kernel power --alpha 1/2 --m 0 --n 0").exit_code == 2);
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "cli_out_test.json";
    std::remove(path.c_str());
    const RunResult r = run("compute --kernel log --m 2 --n 1 --out " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    json object;
    file >> object;
    CHECK(object["value"]["rational"] == "-61/900");
    std::remove(path.c_str());
}
