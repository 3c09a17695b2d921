// End-to-end tests of the command line tool: golden output, exit-code
// contract, and JSON schema stability.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the tool with the given arguments, capturing stdout (and stderr when
// merge_stderr).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command = std::string(ALTPERM_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decompose matches the golden worked example byte for byte") {
  const RunResult result = run_cli("decompose --r 6 \"1 2^2 4 5^1 3^3\"");
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        read_file(std::string(ALTPERM_GOLDEN_DIR) +
                  "/decompose_worked_example.txt"));
}

TEST_CASE("decompose soft-fails on non-alternating input") {
  const RunResult result = run_cli("decompose --r 6 \"2 1 3\"");
  CHECK(result.exit_code == 1);
  CHECK(contains(result.output, "s-word (1 letters): s1"));
  CHECK(contains(result.output, "not alternating"));
}

TEST_CASE("stats") {
  const RunResult identity = run_cli("stats --r 6 \"1 2\"");
  CHECK(identity.exit_code == 0);
  CHECK(contains(identity.output, "csum: 0"));
  CHECK(contains(identity.output, "inv_colored: 0"));
  CHECK(contains(identity.output, "is_alternating: true"));
  CHECK(contains(identity.output, "length_a: 0"));

  const RunResult odd = run_cli("stats --r 6 \"1^1 2\"");
  CHECK(odd.exit_code == 0);
  CHECK(contains(odd.output, "is_alternating: false"));
  CHECK(contains(odd.output, "length_a: null"));

  const RunResult worked = run_cli("stats --r 6 \"1 2^2 4 5^1 3^3\"");
  CHECK(worked.exit_code == 0);
  CHECK(contains(worked.output, "length_a: 17"));
  CHECK(contains(worked.output, "csum: 6"));
  CHECK(contains(worked.output, "col_set: {2, 3, 5}"));
}

TEST_CASE("stats json schema") {
  const RunResult result =
      run_cli("stats --r 6 --format json \"1 2^2 4 5^1 3^3\"");
  CHECK(result.exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(result.output);
  CHECK(parsed["r"].is_number_integer());
  CHECK(parsed["length_a"] == 17);
  CHECK(parsed["z"] == nlohmann::json({0, 2, 3, 0, 1}));
  CHECK(parsed["is_alternating"] == true);
  CHECK(parsed["finv_a"] == 9);

  const nlohmann::json odd =
      nlohmann::json::parse(run_cli("stats --r 6 --format json \"1^1 2\"").output);
  CHECK(odd["length_a"].is_null());
  CHECK(odd["is_alternating"] == false);
}

TEST_CASE("project and section") {
  const RunResult projection = run_cli("project --r 6 \"3^0 2^1 4^2 1^3\"");
  CHECK(projection.exit_code == 0);
  CHECK(contains(projection.output, "3 2^2 4^1 1"));

  const RunResult lifted = run_cli("section --r 6 \"2^1 3 4^1 1^2\"");
  CHECK(lifted.exit_code == 0);
  CHECK(contains(lifted.output, "2^2 3 4^2 1^1"));

  // colors must stay below r/2 on section input
  const RunResult bad = run_cli("section --r 6 \"1^4 2\"", true);
  CHECK(bad.exit_code == 2);

  // non-alternating input: the color arithmetic still prints, soft failure
  const RunResult partial = run_cli("project --r 6 \"1^1 2\"");
  CHECK(partial.exit_code == 1);
  CHECK(contains(partial.output, "1^2 2"));
  CHECK(contains(partial.output, "not alternating"));
}

TEST_CASE("fiber of the identity") {
  const RunResult result = run_cli("fiber --r 6 --n 2");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "members (2):"));
  CHECK(contains(result.output, "1^3 2^3"));
  CHECK(contains(result.output, "formula matches: yes"));

  const nlohmann::json parsed = nlohmann::json::parse(
      run_cli("fiber --r 6 --n 2 --format json").output);
  CHECK(parsed["members"].size() == 2);
  CHECK(parsed["formula_poly"] == nlohmann::json({1, 0, 1}));
  CHECK(parsed["formula_matches"] == true);

  CHECK(run_cli("fiber --r 6 \"1^1 2\"", true).exit_code == 1);
  CHECK(run_cli("fiber --r 6", true).exit_code == 2);  // neither element nor --n
}

TEST_CASE("genfun command") {
  const RunResult length = run_cli("genfun --stat length --r 6 --n 1");
  CHECK(length.exit_code == 0);
  CHECK(contains(length.output, "1 + q + q^2"));
  CHECK(contains(length.output, "MATCH"));

  const RunResult rtlmin = run_cli("genfun --stat rtlmin --r 6 --n 1");
  CHECK(rtlmin.exit_code == 0);
  CHECK(contains(rtlmin.output, "1 + 2q"));

  const RunResult finv = run_cli("genfun --stat finv --r 6 --n 2");
  CHECK(finv.exit_code == 0);
  CHECK(contains(finv.output, "MATCH"));

  const nlohmann::json parsed = nlohmann::json::parse(
      run_cli("genfun --stat length --r 6 --n 1 --format json").output);
  CHECK(parsed["formula"] == nlohmann::json({1, 1, 1}));
  CHECK(parsed["match"] == true);
  CHECK(parsed["at_q1"] == 3);

  const RunResult capped =
      run_cli("genfun --stat length --r 6 --n 5 --cap 100", true);
  CHECK(capped.exit_code == 2);
}

TEST_CASE("verify exit codes") {
  const RunResult ok = run_cli("verify --suite presentation --r 10 --n 4");
  CHECK(ok.exit_code == 0);

  const RunResult rejected = run_cli("verify --suite all --r 4 --n 2", true);
  CHECK(rejected.exit_code == 2);
  CHECK(contains(rejected.output, "2 mod 4"));

  const RunResult unknown = run_cli("verify --suite bogus --r 6 --n 2", true);
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("enumerate") {
  const RunResult a61 = run_cli("enumerate --group a --r 6 --n 1");
  CHECK(a61.exit_code == 0);
  CHECK(a61.output == "1\n1^2\n1^4\ncount: 3\n");

  const RunResult g61 = run_cli("enumerate --group g --r 6 --n 1");
  CHECK(g61.exit_code == 0);
  CHECK(contains(g61.output, "count: 6"));

  // machine mode: one JSON record per line, no footer
  const RunResult raw = run_cli("enumerate --group a --r 6 --n 1 --format json");
  CHECK(raw.exit_code == 0);
  std::istringstream lines(raw.output);
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    const nlohmann::json record = nlohmann::json::parse(line);
    CHECK(record["rank"].is_number_integer());
    CHECK(record["window"].is_string());
    ++records;
  }
  CHECK(records == 3);

  const RunResult a62 = run_cli("enumerate --group a --r 6 --n 2");
  CHECK(contains(a62.output, "count: 36"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("stats --r 6 \"1 2 x\"", true).exit_code == 2);
  CHECK(run_cli("stats --r 6 --n 3 \"1 2\"", true).exit_code == 2);
  CHECK(run_cli("stats \"1 2\"", true).exit_code == 2);     // missing --r
  CHECK(run_cli("frobnicate", true).exit_code == 2);        // no such command
  CHECK(run_cli("stats --r 0 \"1 2\"", true).exit_code == 2);
}
