#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "sliceball/json_io.hpp"

namespace {

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(SLICEBALL_CLI_PATH) + " " +
                          args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliRun{code, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      lines.push_back(line);
    }
  }
  return lines;
}

}  // namespace

TEST_CASE("constants table contains the headline values") {
  const CliRun run = run_cli("constants");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("0.3552") != std::string::npos);
  CHECK(run.output.find("0.2308") != std::string::npos);
  CHECK(run.output.find("0.0505") != std::string::npos);
}

TEST_CASE("constants JSON carries r_p and R_p") {
  const CliRun run = run_cli("constants --p 2 --json");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("\"r_p\"") != std::string::npos);
  CHECK(run.output.find("\"R_p\"") != std::string::npos);
  CHECK(run.output.find("\"r_B\"") != std::string::npos);
}

TEST_CASE("constants rejects p below 1 with a usage error") {
  CHECK(run_cli("constants --p 0.5").exit_code == 2);
}

TEST_CASE("verify exit-code contract") {
  // pass -> 0
  CHECK(run_cli("verify bonk --fn identity --count 5000").exit_code == 0);
  // genuine failure -> 1
  CHECK(run_cli("verify injective --fn extremal:0.6 --r 0.40 --count 5000")
            .exit_code == 1);
  // hypothesis gate -> 2
  CHECK(run_cli("verify bonk --fn poly:0,0.5 --count 5000").exit_code == 2);
  // usage errors -> 2
  CHECK(run_cli("verify nosuchcheck --fn identity").exit_code == 2);
  CHECK(run_cli("verify covering --fn identity --r 0.5").exit_code == 2);
  CHECK(run_cli("verify injective --fn identity").exit_code == 2);
  CHECK(run_cli("verify injective --fn bogus:1 --r 0.5").exit_code == 2);
  CHECK(run_cli("verify injective --fn identity --r 0.5 --count 1").exit_code == 2);
  // rotation rejects truncated (infinite-tail) builtins
  CHECK(run_cli("verify rotation --fn mobius:0.3,1 --count 2000").exit_code == 2);
  CHECK(run_cli("verify rotation --fn extremal:0.6 --count 2000").exit_code == 2);
}

TEST_CASE("unknown check lists the available ones") {
  const CliRun run = run_cli("verify nope --fn identity");
  CHECK(run.exit_code == 2);
  for (const char* name :
       {"injective", "covering", "bonk", "lindelof", "rotation", "sharpness",
        "algebra"}) {
    CHECK(run.output.find(name) != std::string::npos);
  }
}

TEST_CASE("failed injectivity reports a machine-readable witness") {
  const CliRun run =
      run_cli("verify injective --fn extremal:0.6 --r 0.40 --count 5000 --json");
  CHECK(run.exit_code == 1);
  const auto rep = sliceball::report_from_json(run.output);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first.w < -1.0 / 3.0);
  CHECK(rep.witness->second.w > -1.0 / 3.0);
}

TEST_CASE("verify sharpness passes for alpha 0.6") {
  CHECK(run_cli("verify sharpness --alpha 0.6 --count 50000").exit_code == 0);
  CHECK(run_cli("verify sharpness --count 1000").exit_code == 2);  // missing alpha
}

TEST_CASE("verify algebra runs the random identity suite") {
  CHECK(run_cli("verify algebra --count 60").exit_code == 0);
}

TEST_CASE("verify lindelof picks equality mode for Moebius specs") {
  const CliRun run = run_cli("verify lindelof --fn mobius:0.3,1 --count 2000 --order 128");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("equality defect") != std::string::npos);
}

TEST_CASE("verify covering matches the sharp extremal bound") {
  CHECK(run_cli("verify covering --fn extremal:0.6 --r 0.333333333333333 "
                "--target 0.111110111 --count 20000")
            .exit_code == 0);
}

TEST_CASE("sweep bloch-r emits 99 rows peaking near the constant") {
  const CliRun run = run_cli("sweep bloch-r --step 0.01");
  CHECK(run.exit_code == 0);
  const auto lines = lines_of(run.output);
  REQUIRE(lines.size() == 100);  // header + 99 rows
  CHECK(lines[0] == "r,bloch-r");
  double best_r = 0.0;
  double best_v = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double r = 0.0;
    double v = 0.0;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf", &r, &v) == 2);
    if (v > best_v) {
      best_v = v;
      best_r = r;
    }
  }
  CHECK(best_v == doctest::Approx(0.3552).epsilon(2e-3));
  CHECK(best_r == doctest::Approx(0.70).epsilon(0.05));
}

TEST_CASE("sweep bonk starts at the normalized value 1") {
  const CliRun run = run_cli("sweep bonk --step 0.05");
  CHECK(run.exit_code == 0);
  const auto lines = lines_of(run.output);
  REQUIRE(lines.size() >= 2);
  double r = 1.0;
  double v = 0.0;
  REQUIRE(std::sscanf(lines[1].c_str(), "%lf,%lf", &r, &v) == 2);
  CHECK(r == doctest::Approx(0.0));
  CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("sweep bergman-r rises then falls like the grid oracle") {
  const CliRun run = run_cli("sweep bergman-r --p 2 --step 0.01");
  CHECK(run.exit_code == 0);
  const auto lines = lines_of(run.output);
  REQUIRE(lines.size() > 10);
  std::vector<double> values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double r = 0.0;
    double v = 0.0;
    REQUIRE(std::sscanf(lines[i].c_str(), "%lf,%lf", &r, &v) == 2);
    values.push_back(v);
  }
  const std::size_t peak =
      std::max_element(values.begin(), values.end()) - values.begin();
  CHECK(peak > 0);
  CHECK(peak + 1 < values.size());
  for (std::size_t i = 1; i <= peak; ++i) {
    CHECK(values[i] >= values[i - 1] - 1e-12);
  }
  for (std::size_t i = peak + 1; i < values.size(); ++i) {
    CHECK(values[i] <= values[i - 1] + 1e-12);
  }
}

TEST_CASE("sweep rejects an empty range") {
  CHECK(run_cli("sweep bloch-r --min 0.9 --max 0.1").exit_code == 2);
  CHECK(run_cli("sweep nosuch --step 0.1").exit_code == 2);
}

TEST_CASE("verify-all runs the battery and exits zero") {
  const CliRun run = run_cli("verify-all --count 4000");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("[FAIL]") == std::string::npos);
  CHECK(run.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("manifest replay reproduces identical reports") {
  const std::string manifest = "/tmp/sliceball_manifest_test.json";
  std::remove(manifest.c_str());
  const CliRun record = run_cli(
      "verify injective --fn extremal:0.6 --r 0.33 --count 5000 --manifest " +
      manifest);
  CHECK(record.exit_code == 0);
  const CliRun replay = run_cli("replay " + manifest);
  CHECK(replay.exit_code == 0);
  CHECK(replay.output.find("identical") != std::string::npos);
  std::remove(manifest.c_str());
}

TEST_CASE("reports are stable across thread-count settings") {
  const std::string args =
      "verify injective --fn extremal:0.6 --r 0.40 --count 20000 --json";
  const CliRun one = run_cli(args, "SLICEBALL_THREADS=1");
  const CliRun many = run_cli(args, "SLICEBALL_THREADS=8");
  CHECK(one.exit_code == many.exit_code);
  CHECK(one.output == many.output);
}

TEST_CASE("seeded runs are reproducible and seeds matter") {
  // The boundary minimum of this Moebius map sits off the real axis, so the
  // sampled minimum depends on the lattice phase (hence on the seed).
  const std::string args =
      "verify covering --fn 'mobius:(0,0.5,0,0),(1,0,0,0)' --r 0.3 --target 0.05 "
      "--count 3000 --json";
  const CliRun a = run_cli(args + " --seed 7");
  const CliRun b = run_cli(args + " --seed 7");
  const CliRun c = run_cli(args + " --seed 8");
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
  CHECK(c.exit_code == 0);
  const auto rep_a = sliceball::report_from_json(a.output);
  const auto rep_c = sliceball::report_from_json(c.output);
  CHECK(rep_a.margin != rep_c.margin);
}
