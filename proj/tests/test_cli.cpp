#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out_path = "cli_stdout_" + tag + ".txt";
  const std::string err_path = "cli_stderr_" + tag + ".txt";
  const std::string cmd = std::string(EMM_CLI_PATH) + " " + args + " >" +
                          out_path + " 2>" + err_path;
  int rc = std::system(cmd.c_str());
  RunResult result;
  if (rc >= 0 && WIFEXITED(rc)) result.exit_code = WEXITSTATUS(rc);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("correlator command") {
  RunResult r = run_cli("correlator -g 0 -a 1,1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4*t^2\n");
  CHECK(run_cli("correlator -g 1 -a 1").out == "-1/8\n");
  CHECK(run_cli("correlator -g 0 -a 2").out == "t^3\n");
  CHECK(run_cli("correlator -g 2 -a 3,1").out == "-45/16\n");

  json j = json::parse(run_cli("correlator -g 0 -a 1 --format json").out);
  CHECK(j["g"] == 0);
  CHECK(j["a"] == json::array({1}));
  CHECK(j["value"] == "1/2*t^2");
}

TEST_CASE("table command") {
  RunResult r = run_cli("table -g 0 --bound 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "g,a,value\n"
        "0,1,1/2*t^2\n"
        "0,2,t^3\n"
        "0,3,5/2*t^4\n"
        "0,1 1,t^2\n"
        "0,1 2,4*t^3\n"
        "0,1 1 1,4*t^2\n");

  RunResult r1 = run_cli("table -g 1 --bound 2");
  CHECK(r1.out ==
        "g,a,value\n"
        "1,1,-1/8\n"
        "1,2,-1/4*t\n"
        "1,1 1,-1/4\n");

  json records = json::parse(run_cli("table -g 0 --bound 3 --format json").out);
  REQUIRE(records.is_array());
  REQUIRE(records.size() == 6);
  CHECK(records[0] == json({{"g", 0}, {"a", {1}}, {"value", "1/2*t^2"}}));
  CHECK(records[5] == json({{"g", 0}, {"a", {1, 1, 1}}, {"value", "4*t^2"}}));
}

TEST_CASE("table file output matches stdout") {
  const std::string path = "cli_table_out.csv";
  RunResult direct = run_cli("table -g 1 --bound 3");
  RunResult filed = run_cli("table -g 1 --bound 3 -o " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("sequences command") {
  CHECK(run_cli("sequences catalan 7").out == "1 2 5 14 42 132 429\n");
  CHECK(run_cli("sequences A001791 6").out == "1 4 15 56 210 792\n");
  CHECK(run_cli("sequences A007946 6").out == "2 9 36 140 540 2079\n");
  CHECK(run_cli("sequences a007946 3").out == "2 9 36\n");
}

TEST_CASE("ladders command") {
  RunResult r = run_cli("ladders --kmax 2");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["t"]["3"] == "1/8*s^-1");
  CHECK(j["B"]["(0,0)"] == "-1/8*t^-1");
  CHECK(j["Bhat"].size() == 9);
}

TEST_CASE("verify command and exit codes") {
  RunResult r = run_cli("verify closed-forms");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);

  json j = json::parse(run_cli("verify structure --max 2 --format json").out);
  CHECK(j["suite"] == "structure");
  CHECK(j["all_pass"] == true);
  REQUIRE(j["checks"].is_array());
  REQUIRE(!j["checks"].empty());
  for (const auto& check : j["checks"]) {
    CHECK(check["pass"] == true);
    CHECK(check["millis"].is_number_integer());
    CHECK(check["name"].is_string());
    CHECK(check["detail"].is_string());
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("correlator -g 0").exit_code == 2);          // missing -a
  CHECK(run_cli("correlator -g 0 -a 0").exit_code == 2);     // a_j >= 1
  CHECK(run_cli("correlator -g -1 -a 1").exit_code == 2);    // negative genus
  CHECK(run_cli("verify bogus").exit_code == 2);             // unknown suite
  CHECK(run_cli("sequences fibonacci 5").exit_code == 2);    // unknown name
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                         // subcommand required
  CHECK(run_cli("table -g 0 --bound 0").exit_code == 2);     // bound >= 1
}

TEST_CASE("output is byte-deterministic") {
  CHECK(run_cli("table -g 1 --bound 4").out == run_cli("table -g 1 --bound 4").out);
  CHECK(run_cli("ladders --kmax 3").out == run_cli("ladders --kmax 3").out);
  CHECK(run_cli("correlator -g 2 -a 2,2").out == run_cli("correlator -g 2 -a 2,2").out);
}
