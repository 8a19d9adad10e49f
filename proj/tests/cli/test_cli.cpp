#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(JK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("jsf command, json output") {
  RunResult r = run_cli("jsf --cartan A2 --p 3 --lambda 1,1 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["lambda"] == nlohmann::json::array({1, 1}));
  CHECK(j["p"] == 3);
  CHECK(j["character"].size() == 1);
  CHECK(j["character"][0]["weight"] == nlohmann::json::array({0, 0}));
  CHECK(j["character"][0]["coeff"] == 1);
  REQUIRE(j.contains("asph"));
  CHECK(j["asph"][0]["word"].empty());
  CHECK(j["asph"][0]["coeff"] == 1);
  CHECK(j["verdict"] == "AGREE");
}

TEST_CASE("jsf command, text output and singular weights") {
  RunResult r = run_cli("jsf --cartan A2 --p 3 --lambda 1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict: AGREE") != std::string::npos);

  RunResult empty = run_cli("jsf --cartan A2 --p 5 --lambda 0,0");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("JSF character: 0") != std::string::npos);
}

TEST_CASE("byte-identical output on identical inputs") {
  const std::string args = "verify --cartan A2 --p 3 --max-length 3 --seed 5 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("jsf --cartan A2 --p 3 --lambda -1,0").exit_code == 2);   // not dominant
  CHECK(run_cli("jsf --cartan A2 --p 3 --lambda 1,2,3").exit_code == 2);  // wrong rank
  CHECK(run_cli("jsf --cartan A2 --p 4 --lambda 1,1").exit_code == 2);    // composite p
  CHECK(run_cli("jsf --cartan D3 --p 7 --lambda 1,1,1").exit_code == 2);  // rejected type
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("asf --cartan A2 --p 3 --x-word 1 --y-word 0").exit_code == 2);  // not minimal
  CHECK(run_cli("bounds --cartan A2 --p 3 --word 1").exit_code == 2);
}

TEST_CASE("verify command") {
  RunResult r = run_cli("verify --cartan A2 --p 3 --max-length 3 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["all_pass"] == true);
  CHECK(j["suites"].size() >= 8);

  RunResult text = run_cli("verify --cartan G2 --p 7 --max-length 2");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("ALL PASS") != std::string::npos);
}

TEST_CASE("example-an command") {
  RunResult r = run_cli("example-an --cartan A2 --p 3 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["pass"] == true);
  CHECK(j["rows"].size() == 2);
  CHECK(run_cli("example-an --cartan C2 --p 5").exit_code == 2);
}

TEST_CASE("asf command") {
  RunResult r = run_cli("asf --cartan A2 --p 3 --x-word e --y-word 0 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["asf_pairing"] == 1);
  CHECK(j["jsf_coefficient"] == 1);
  CHECK(j["verdict"] == "AGREE");

  RunResult same = run_cli("asf --cartan A2 --p 3 --x-word e --y-word e");
  CHECK(same.exit_code == 0);
  CHECK(same.output.find("= 0") != std::string::npos);
  CHECK(same.output.find("AGREE") != std::string::npos);
}

TEST_CASE("bounds command") {
  RunResult r = run_cli("bounds --cartan A2 --p 3 --word e --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["length_bound_sum"] == 0);
  CHECK(j["length_bound_exp"] == 0);
  CHECK(j["per_step"].empty());

  RunResult s0 = run_cli("bounds --cartan A2 --p 3 --word 0");
  CHECK(s0.exit_code == 0);
  CHECK(s0.output.find("1") != std::string::npos);
}
