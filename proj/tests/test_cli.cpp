#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(TWOORBIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("pass paths exit 0") {
  CHECK(run("bounds --landau 10").exit_code == 0);
  CHECK(run("two-cycle \"S(5)\"").exit_code == 0);
  CHECK(run("genus0 \"S(4)\" --anchor 2-2").exit_code == 0);
  CHECK(run("monodromy \"Z^2\"").exit_code == 0);
}

TEST_CASE("parse errors exit 2") {
  CHECK(run("two-cycle \"S(0)\"").exit_code == 2);
  CHECK(run("two-cycle \"Nope(3)\"").exit_code == 2);
  CHECK(run("monodromy \"1/0\"").exit_code == 2);
  CHECK(run("monodromy \"Z^\"").exit_code == 2);
  CHECK(run("genus0 \"S(4)\" --anchor 9-9").exit_code == 2);
}

TEST_CASE("json reports carry the schema tag and status") {
  RunResult r = run("--json bounds --landau 10");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("status") == "pass");
  CHECK(j.contains("results"));
  CHECK(j.contains("wall_time"));
  CHECK(j.at("command") == "bounds");

  nlohmann::json m = nlohmann::json::parse(run("--json monodromy \"Z^3\"").output);
  CHECK(m.at("schema") == 1);
  CHECK(m.at("status") == "pass");
}

TEST_CASE("a manifest mismatch exits 1") {
  // point the data directory at a copy whose expected pairs are wrong
  std::string dir = "cli_diff_data";
  std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  {
    std::ofstream out(dir + "/kl_expected.json");
    out << R"json({"schema": 1, "rows": [
      {"spec": "S(5)", "degree": 5, "pairs": [[1, 4]]}
    ]})json";
  }
  {
    std::ofstream out(dir + "/kl_skip.txt");
    out << "# nothing skipped\n";
  }
  std::string cmd = std::string("TWO_ORBIT_DATA=") + dir + " " + TWOORBIT_CLI_PATH +
                    " two-cycle --all-kl 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), got);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
  CHECK(output.find("2,3") != std::string::npos);  // the unexpected pair
  std::system(("rm -rf " + dir).c_str());
}

TEST_CASE("seed option is accepted and deterministic") {
  RunResult a = run("--seed 5 monodromy \"Z^5*(Z-2)/(Z^2-5)^3\"");
  RunResult b = run("--seed 5 monodromy \"Z^5*(Z-2)/(Z^2-5)^3\"");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}
