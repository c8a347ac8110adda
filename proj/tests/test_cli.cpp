#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "funceq/cli.hpp"

namespace {

struct CliOutcome {
    int exit_code = 0;
    std::string out;
    std::string err;
    nlohmann::json doc;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliOutcome outcome;
    outcome.exit_code = funceq::cli::run(args, out, err);
    outcome.out = out.str();
    outcome.err = err.str();
    if (!outcome.out.empty() && outcome.out.front() == '{') {
        outcome.doc = nlohmann::json::parse(outcome.out);
    }
    return outcome;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("cli_test_") + name;
    std::ofstream file(path);
    file << content;
    return path;
}

} // namespace

TEST_CASE("solve emits the solution space document") {
    const auto result = run_cli({"solve", "--prime", "5"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.doc.at("p") == 5);
    CHECK(result.doc.at("dimension") == 3);
    const std::vector<std::vector<int>> expected = {
        {0, 1, 0, 2, 2, 0, 0, 2, 4, 4},
        {0, 0, 1, 3, 1, 0, 0, 0, 1, 4},
        {0, 0, 0, 0, 0, 0, 1, 2, 3, 4},
    };
    CHECK(result.doc.at("basis") == nlohmann::json(expected));
}

TEST_CASE("solve rejects bad moduli with a usage error") {
    CHECK(run_cli({"solve", "--prime", "6"}).exit_code == 2);
    CHECK(run_cli({"solve", "--prime", "0"}).exit_code == 2);
    CHECK(run_cli({"solve"}).exit_code == 2); // missing required option
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
}

TEST_CASE("verify passes for theorem-scope primes") {
    const auto result = run_cli({"verify", "--prime", "7"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.doc.at("pass") == true);
    CHECK(result.doc.at("scope") == "full");
    CHECK(result.doc.at("checks").at("kernel").at("dimension") == 3);
    CHECK(result.doc.at("checks").at("family_exhaustive") == true);
    CHECK(result.doc.at("checks").at("alien_equivalence") == true);
    CHECK(result.doc.at("checks").at("solution_identities") == true);
    CHECK(result.doc.at("checks").at("pairing").at("pass") == true);
}

TEST_CASE("verify cross-checks the exhaustive oracle when asked") {
    const auto result = run_cli({"verify", "--prime", "5", "--oracle"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.doc.at("pass") == true);
    CHECK(result.doc.at("checks").at("oracle_equality") == true);

    // The exhaustive cross-check is deliberately unavailable above p = 5.
    CHECK(run_cli({"verify", "--prime", "7", "--oracle"}).exit_code == 2);
}

TEST_CASE("verify reports informationally out of theorem scope") {
    const auto result = run_cli({"verify", "--prime", "3"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.doc.at("scope") == "brute_force_only");
    CHECK(result.doc.at("note") == "theorem scope: brute force only");
    CHECK(result.doc.at("checks").at("solution_count") == 9);
    CHECK(result.doc.at("checks").at("oracle_equality") == true);

    const auto p2 = run_cli({"verify", "--prime", "2"});
    REQUIRE(p2.exit_code == 0);
    CHECK(p2.doc.at("checks").at("solution_count") == 4);
    CHECK(p2.doc.at("checks").at("char_two_pairing") == true);
    // Observed, not claimed: the three-way equivalence genuinely fails mod 2.
    CHECK(p2.doc.at("checks").at("alien_equivalence_observed") == false);
}

TEST_CASE("alien summarises the degeneracy analysis per prime") {
    const auto result = run_cli({"alien", "--prime", "7"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.doc.at("pass") == true);
    const auto& report = result.doc.at("report");
    CHECK(report.at("p") == 7);
    CHECK(report.at("lemma_L") == true);
    CHECK(report.at("equivalence") == true);
    CHECK(report.at("alien_count") == 7);

    const auto p2 = run_cli({"alien", "--prime", "2"});
    REQUIRE(p2.exit_code == 0);
    CHECK(p2.doc.at("scope") == "informational");
    CHECK(p2.doc.at("report").at("alien_count") == 2);
    CHECK(p2.doc.at("report").at("equivalence") == false);
}

TEST_CASE("brute lists every solution for tiny fields and rejects large ones") {
    const auto result = run_cli({"brute", "--prime", "3"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.doc.at("solution_count") == 9);
    CHECK(result.doc.at("solutions").size() == 9);
    CHECK(result.doc.at("solutions")[0].at("f") == nlohmann::json({0, 0, 0}));

    CHECK(run_cli({"brute", "--prime", "7"}).exit_code == 2);
}

TEST_CASE("cocycle checks the defect invariants exhaustively or by sampling") {
    const auto small = run_cli({"cocycle", "--prime", "3"});
    REQUIRE(small.exit_code == 0);
    CHECK(small.doc.at("mode") == "exhaustive");
    CHECK(small.doc.at("functions_checked") == 27);
    CHECK(small.doc.at("pass") == true);

    const auto sampled = run_cli({"cocycle", "--prime", "7", "--seed", "42"});
    REQUIRE(sampled.exit_code == 0);
    CHECK(sampled.doc.at("mode") == "random");
    CHECK(sampled.doc.at("seed") == 42);
    CHECK(sampled.doc.at("functions_checked") == 1000);
    CHECK(sampled.doc.at("pass") == true);

    // Same seed, same document.
    const auto again = run_cli({"cocycle", "--prime", "7", "--seed", "42"});
    CHECK(again.out == sampled.out);
}

TEST_CASE("ineq validates a problem file end to end") {
    const std::string good = write_temp("good.json", R"({
        "grid": {"m": 2, "K": 4},
        "f": "linear:2",
        "g": {"table": []},
        "A": "abs:1"
    })");
    // Fill in the g table programmatically: g = 2x^2 - |x| on the 33 points.
    {
        nlohmann::json spec;
        std::ifstream in(good);
        in >> spec;
        nlohmann::json table = nlohmann::json::array();
        for (int k = -16; k <= 16; ++k) {
            // x = k/4: g = 2 x^2 - |x| = (2k^2 - 4|k|) / 16 = (k^2 - 2|k|) / 8
            const int num = k * k - 2 * (k < 0 ? -k : k);
            table.push_back(std::to_string(num) + "/8");
        }
        spec["g"]["table"] = table;
        std::ofstream out(good);
        out << spec;
    }
    const auto result = run_cli({"ineq", good});
    REQUIRE(result.exit_code == 0);
    CHECK(result.doc.at("pass") == true);
    CHECK(result.doc.at("inequality").at("violation_count") == 0);
    CHECK(result.doc.at("remainder").at("matches_A") == true);
    CHECK(result.doc.at("remainder").at("slack_equals_defect") == true);

    const std::string bad = write_temp(
        "bad.json", R"({"grid": {"m": 2, "K": 4}, "f": "linear:1", "g": "zero"})");
    const auto failing = run_cli({"ineq", bad});
    CHECK(failing.exit_code == 1);
    CHECK(failing.doc.at("pass") == false);
    CHECK(failing.doc.at("inequality").at("violation_count").get<int>() > 0);

    CHECK(run_cli({"ineq", "no_such_file.json"}).exit_code == 2);
    const std::string malformed = write_temp("malformed.json", "{ not json");
    CHECK(run_cli({"ineq", malformed}).exit_code == 2);
    const std::string missing_grid =
        write_temp("missing_grid.json", R"({"f": "zero", "g": "zero"})");
    CHECK(run_cli({"ineq", missing_grid}).exit_code == 2);

    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(malformed.c_str());
    std::remove(missing_grid.c_str());
}

TEST_CASE("json-out mirrors stdout to a file") {
    const std::string path = "cli_test_out.json";
    const auto result = run_cli({"solve", "--prime", "3", "--json-out", path});
    REQUIRE(result.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == result.out);
    std::remove(path.c_str());
}

TEST_CASE("stdout is byte-identical across runs and thread counts") {
    const auto t1 = run_cli({"verify", "--prime", "5", "--threads", "1"});
    const auto t4 = run_cli({"verify", "--prime", "5", "--threads", "4"});
    const auto t1_again = run_cli({"verify", "--prime", "5", "--threads", "1"});
    CHECK(t1.out == t4.out);
    CHECK(t1.out == t1_again.out);
}

TEST_CASE("the modulus cap is adjustable through the environment") {
    setenv("FUNCEQ_MAX_P", "11", 1);
    CHECK(run_cli({"solve", "--prime", "13"}).exit_code == 2);
    CHECK(run_cli({"solve", "--prime", "11"}).exit_code == 0);
    setenv("FUNCEQ_MAX_P", "banana", 1);
    CHECK(run_cli({"solve", "--prime", "5"}).exit_code == 2);
    unsetenv("FUNCEQ_MAX_P");
    CHECK(run_cli({"solve", "--prime", "13"}).exit_code == 0);
}

TEST_CASE("timing lands on stderr, never stdout") {
    const auto result = run_cli({"solve", "--prime", "5"});
    CHECK(result.out.find("ms") == std::string::npos);
    CHECK(result.err.find("finished in") != std::string::npos);
}
