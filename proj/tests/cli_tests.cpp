#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "trk/cli.hpp"

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = trk::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("k subcommand emits the documented JSON document") {
    const CliResult result = run_cli({"k", "--m", "2", "--q", "4", "--json"});
    CHECK(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["command"] == "k");
    CHECK(doc["query"]["m"] == 2);
    CHECK(doc["query"]["q"] == 4);
    CHECK(doc["result"]["rank"] == 0);
    CHECK(doc["result"]["torsion_order"] == "24");
    CHECK(doc["result"]["structure_known"] == "full");
    const nlohmann::json expected_structure = {{2, 3}, {3, 1}};
    CHECK(doc["result"]["structure"] == expected_structure);
    CHECK(doc["result"]["torsion_factored"] == expected_structure);
}

TEST_CASE("JSON output is byte-identical across runs") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"k", "--m", "4", "--q", "6", "--json"},
          std::vector<std::string>{"tr", "--p", "3", "--n", "2", "--q", "9", "--lambda",
                                   "w:1,3", "--json"},
          std::vector<std::string>{"limr", "--m", "2", "--i", "3", "--p", "2", "--json"},
          std::vector<std::string>{"dual", "--i", "5", "--json"}}) {
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("human-readable output carries the computed order") {
    const CliResult tr = run_cli({"tr", "--p", "2", "--n", "2", "--q", "3", "--lambda", "0"});
    CHECK(tr.exit_code == 0);
    CHECK(tr.out.find("order 8") != std::string::npos);

    const CliResult k = run_cli({"k", "--m", "2", "--q", "4"});
    CHECK(k.exit_code == 0);
    CHECK(k.out.find("Z/8 + Z/3") != std::string::npos);

    const CliResult modp = run_cli(
        {"modp", "--p", "2", "--n", "3", "--q", "5", "--lambda", "d:1"});
    CHECK(modp.exit_code == 0);
    CHECK(modp.out.find("Z/2 + Z/2") != std::string::npos);
    CHECK(modp.out.find("length 2") != std::string::npos);

    const CliResult stable = run_cli({"stable", "--m", "2", "--q", "4"});
    CHECK(stable.exit_code == 0);
    CHECK(stable.out.find("60") != std::string::npos);
}

TEST_CASE("usage problems exit with code 2") {
    // Unknown subcommand, missing flag, non-prime p, bad grammar, blown cap.
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"k", "--m", "2"}).exit_code == 2);
    CHECK(run_cli({"tr", "--p", "4", "--n", "2", "--q", "3", "--lambda", "0"}).exit_code ==
          2);
    CHECK(run_cli({"tr", "--p", "2", "--n", "2", "--q", "3", "--lambda", "x:3"})
              .exit_code == 2);
    CHECK(run_cli({"limr", "--m", "100", "--i", "100"}).exit_code == 2);
    CHECK(run_cli({"k", "--m", "0", "--q", "4"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(!run_cli({"k", "--m", "2"}).err.empty());
}

TEST_CASE("domain problems exit with code 3") {
    const CliResult weight_zero =
        run_cli({"modp", "--p", "2", "--n", "2", "--q", "3", "--lambda", "w:0"});
    CHECK(weight_zero.exit_code == 3);
    CHECK(!weight_zero.err.empty());
    // The stable level for very high degrees leaves the 64-bit range.
    CHECK(run_cli({"stable", "--m", "1", "--q", "1000000"}).exit_code == 3);
}

TEST_CASE("verification suites run from the CLI") {
    const CliResult golden = run_cli({"verify", "--suite", "paper"});
    CHECK(golden.exit_code == 0);
    CHECK(golden.out.find("FAIL") == std::string::npos);
    CHECK(golden.out.find("11 of 11 checks passed") != std::string::npos);

    const CliResult identities = run_cli({"verify", "--suite", "identities", "--seed", "3"});
    CHECK(identities.exit_code == 0);
    CHECK(identities.out.find("10 of 10 checks passed") != std::string::npos);

    const CliResult all = run_cli({"verify", "--json"});
    CHECK(all.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(all.out);
    CHECK(doc["result"]["passed"] == true);
    CHECK(doc["result"]["checks"].size() == 21);
}

TEST_CASE("table formats") {
    const CliResult csv =
        run_cli({"table", "--m-max", "2", "--i-max", "2", "--structure", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("m,q,rank,order_decimal,order_factored,structure,structure_known\n",
                        0) == 0);
    CHECK(csv.out.find("2,4,0,24,2^3*3,Z/8+Z/3,full") != std::string::npos);

    const CliResult md =
        run_cli({"table", "--m-max", "2", "--i-max", "2", "--structure"});
    CHECK(md.exit_code == 0);
    CHECK(md.out.find("| 2 | 4 | 0 | 24 | 2^3*3 | Z/8+Z/3 | full |") != std::string::npos);

    const CliResult json_table =
        run_cli({"table", "--m-max", "2", "--i-max", "1", "--format", "json"});
    CHECK(json_table.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json_table.out);
    CHECK(doc["command"] == "table");
    CHECK(doc["result"]["rows"].size() == 8);

    const std::string path = "cli_test_table.csv";
    const CliResult to_file = run_cli({"table", "--m-max", "2", "--i-max", "2",
                                       "--structure", "--format", "csv", "--out", path});
    CHECK(to_file.exit_code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == csv.out);
    file.close();
    std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
    const CliResult top = run_cli({"--help"});
    CHECK(top.exit_code == 0);
    CHECK(top.out.find("k") != std::string::npos);
    CHECK(run_cli({"k", "--help"}).exit_code == 0);
}
