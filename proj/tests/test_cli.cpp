#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "meadowlab/report_json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

std::string binary_path() {
  const char* path = std::getenv("MEADOWLAB_BIN");
  REQUIRE_MESSAGE(path != nullptr, "MEADOWLAB_BIN must point at the CLI binary");
  return path;
}

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
  const std::string cmd = env_prefix + binary_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("residues 19 prints the worked list") {
  const auto r = run("residues 19");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 4 5 6 7 9 11 16 17\n");
}

TEST_CASE("eval examples") {
  CHECK(run("eval \"inv(0)\" --model q0").output == "0\n");
  CHECK(run("eval \"2 * inv(2)\" --model fp:2").output == "0\n");
  CHECK(run("eval \"i*i + 1\" --model qi").output == "0 + 0i\n");
  CHECK(run("eval \"x * inv(x)\" --model q0 --bind x=2").output == "1\n");
  CHECK(run("eval \"inv(1+1)\" --model q0").output == "1/2\n");
}

TEST_CASE("eval failure modes exit nonzero") {
  CHECK(run("eval \"i\" --model q0").exit_code != 0);
  CHECK(run("eval \"x\" --model q0").exit_code != 0);   // unbound variable
  CHECK(run("eval \"x +\" --model q0").exit_code != 0);  // syntax error
  CHECK(run("eval \"x\" --model fp:4").exit_code != 0);  // composite modulus
}

TEST_CASE("f emits n value rows, identically in text and bfile modes") {
  CHECK(run("f 19 19").output == "19 2\n");
  const auto text = run("f 1 30");
  const auto bfile = run("f 1 30 --output bfile");
  CHECK(text.output == bfile.output);
  CHECK(run("--output bfile residues 19").exit_code != 0);
}

TEST_CASE("maxf in both domains") {
  CHECK(run("maxf 100").output == "71 7\n");
  CHECK(run("maxf 4 --first-primes").output == "7 3\n");
}

TEST_CASE("witness") {
  CHECK(run("witness 1,2,3 --bound 100").output == "23\n");
  CHECK(run("witness 1,2,3 --bound 10").output == "none below 10\n");
  CHECK(run("witness 1,2,3 --bound 10").exit_code == 0);
}

TEST_CASE("speccheck JSON round-trips through the shipped validator") {
  const auto r = run("speccheck L:1 --bound 100 --output json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  const auto err = meadowlab::validate_spec_report(doc);
  CHECK_MESSAGE(!err.has_value(), err.value_or(""));
  CHECK(doc["verdict"] == "NotASpec");
  CHECK(doc["witness_prime"] == 3);

  const auto r2 = run("speccheck L:2 --bound 50 --output json");
  const auto doc2 = nlohmann::json::parse(r2.output);
  CHECK_FALSE(meadowlab::validate_spec_report(doc2).has_value());
  CHECK(doc2["verdict"] == "NoWitnessBelow");
  CHECK(doc2["bound"] == 50);

  CHECK(run("speccheck X:1").exit_code != 0);
}

TEST_CASE("hfamily and proposition") {
  const auto r = run("hfamily 1 --output json");
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["witness_prime"] == 7);
  CHECK(doc["per_equation"].size() == 2);

  const auto p = run("proposition 1 --output json");
  const auto pdoc = nlohmann::json::parse(p.output);
  CHECK(pdoc["prime"] == 7);
  CHECK(pdoc["all_satisfied"] == true);
}

TEST_CASE("check-model") {
  const auto fp = run("check-model \"inv(inv(x)) = x\" --model fp:13");
  CHECK(fp.exit_code == 0);
  CHECK(fp.output.find("Satisfied") != std::string::npos);

  const auto q0 =
      run("check-model \"x * inv(x) = 1\" --model q0 --samples 50 --seed 1");
  CHECK(q0.output.find("Falsified") != std::string::npos);  // x = 0
}

TEST_CASE("normalize") {
  const auto r = run("normalize \"inv(2)\" --output json");
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["re"] == "1/2");
  CHECK(doc["im"] == "0");
  const std::string form = doc["normal_form"].get<std::string>();
  const auto again = run("normalize \"" + form + "\"");
  CHECK(again.output == form + "\n");  // idempotent through the CLI

  CHECK(run("normalize \"x + i\"").exit_code != 0);  // open term
}

TEST_CASE("environment variables mirror flags") {
  const auto r = run("witness 1,2,3", "MEADOWLAB_BOUND=10 ");
  CHECK(r.output == "none below 10\n");
  const auto json_via_env = run("residues 7", "MEADOWLAB_OUTPUT=json ");
  const auto doc = nlohmann::json::parse(json_via_env.output);
  CHECK(doc["residues"] == std::vector<uint64_t>{1, 2, 4});
}

TEST_CASE("deterministic output given flags") {
  const std::string cmd = "check-model \"x * y = y * x\" --model q0 --samples 40 --seed 9";
  CHECK(run(cmd).output == run(cmd).output);
}
