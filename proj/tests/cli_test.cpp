#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CLF_TOOL_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const char* name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("seq emits exact csv rows") {
  const auto res = run("seq S --max 9 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("0,1\n") != std::string::npos);
  CHECK(res.output.find("4,676\n") != std::string::npos);
  CHECK(res.output.find("9,9593104\n") != std::string::npos);
}

TEST_CASE("seq writes jsonl to a file") {
  const auto path = temp_path("clf_seq_test.jsonl");
  const auto res = run("seq P --max 1 --format jsonl --out " + path);
  CHECK(res.exit_code == 0);
  CHECK(slurp(path) == "{\"n\":0,\"value\":\"1\"}\n{\"n\":1,\"value\":\"8\"}\n");
  std::remove(path.c_str());
}

TEST_CASE("verify runs a small campaign and exits zero") {
  const auto res = run("verify --check check_1_11 --primes 3 --m-max 1 --r-max 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"check\":\"check_1_11\"") != std::string::npos);
  CHECK(res.output.find("\"holds\":true") != std::string::npos);
  CHECK(res.output.find("\"passed\":1") != std::string::npos);
}

TEST_CASE("verify exit code reflects failures") {
  // p = 11 sits outside the mod-8 hypothesis, so these cells fail honestly
  const auto res = run("verify --check check_eq_3_4 --primes 11 --n-max 1");
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("\"holds\":false") != std::string::npos);
}

TEST_CASE("verify accepts a config file and flag overrides") {
  const auto cfg_path = temp_path("clf_cfg_test.json");
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"checks": ["check_cor_3_1"], "primes": [5], "format": "csv-summary"})";
  }
  const auto base = run("verify --config " + cfg_path);
  CHECK(base.exit_code == 0);
  CHECK(base.output.find("check_cor_3_1,5,3,3,0,0") != std::string::npos);

  // flags override file values: swap the prime list
  const auto overridden = run("verify --config " + cfg_path + " --primes 7");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output.find("check_cor_3_1,7,3,3,0,0") != std::string::npos);
  CHECK(overridden.output.find(",5,") == std::string::npos);
  std::remove(cfg_path.c_str());
}

TEST_CASE("verify rejects bad input with exit code 2") {
  CHECK(run("verify --check not_a_check --primes 3").exit_code == 2);
  CHECK(run("verify --check check_1_11 --primes 4").exit_code == 2);
  const auto res = run("verify --check check_1_11 --primes 3 --out /nonexistent-dir/x.jsonl");
  CHECK(res.exit_code == 2);
}

TEST_CASE("scan-1-14 prints valuations") {
  const auto res = run("scan-1-14 --primes 5,7 --r-max 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("p=5 r=1 index=2 ord_S=1 ord_f=1 conjecture_holds=true") !=
        std::string::npos);
  CHECK(res.output.find("p=5 r=2 index=12 ord_S=2 ord_f=2 conjecture_holds=true") !=
        std::string::npos);
  CHECK(res.output.find("p=7 r=2 index=24") != std::string::npos);
}

TEST_CASE("scan-1-14 rejects primes outside the residue classes") {
  CHECK(run("scan-1-14 --primes 3 --r-max 1").exit_code == 2);
}

TEST_CASE("list-checks prints the registry") {
  const auto res = run("verify --list-checks");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("check_kazandzidis") != std::string::npos);
  CHECK(res.output.find("check_thm_3_5") != std::string::npos);
}
