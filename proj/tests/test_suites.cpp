#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>

#include "spinc/errors.hpp"
#include "spinc/suites.hpp"

using namespace spinc;

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(SPINC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Suites, NamesAndUnknownSuite) {
  const auto& names = suite_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "so-obstruction"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "all"), names.end());
  EXPECT_THROW(run_suite("nope", RunConfig{}), Error);
}

TEST(Suites, GammaPassesAndIsSorted) {
  const auto reports = run_suite("gamma", RunConfig{});
  EXPECT_TRUE(all_pass(reports));
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(),
                             [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; }));
}

TEST(Suites, ObstructionReport) {
  const auto reports = run_suite("so-obstruction", RunConfig{});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].pass);
  EXPECT_FALSE(reports[0].residual.has_value());
  EXPECT_EQ(reports[0].params.at("monodromy"), -1);
}

TEST(Suites, ToleranceOverrideApplies) {
  RunConfig cfg;
  cfg.n = 3;
  cfg.tolOverrides["gamma.relations"] = -1.0;
  const auto reports = run_suite("gamma", cfg);
  bool saw = false;
  for (const auto& r : reports) {
    if (r.check.rfind("gamma.relations", 0) == 0) {
      saw = true;
      EXPECT_FALSE(r.pass);
      EXPECT_EQ(r.tol, -1.0);
    }
  }
  EXPECT_TRUE(saw);
}

TEST(Suites, SameSeedSameReports) {
  RunConfig cfg;
  cfg.seed = 1;
  EXPECT_EQ(render_reports(run_suite("spin", cfg), true, false), render_reports(run_suite("spin", cfg), true, false));
}

TEST(Cli, DeterministicOutputAndExitCodes) {
  const CliRun a = run_cli("gamma --seed 3 --json-lines");
  const CliRun b = run_cli("gamma --seed 3 --json-lines");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(run_cli("no-such-suite").status, 2);
  EXPECT_EQ(run_cli("factorize --pprime /nonexistent.json --epsprime /nonexistent.json").status, 2);
  EXPECT_EQ(run_cli("gamma --tol weyl.ccr=abc").status, 2);
}

TEST(Cli, GammaEmitsMatrices) {
  const CliRun r = run_cli("gamma --n 3 --branch -1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("gammas"));
  EXPECT_EQ(j.at("gammas").size(), 3u);
}

TEST(Cli, SoObstructionExitStatus) {
  const CliRun r = run_cli("so-obstruction --json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.at(0).at("params").at("monodromy"), -1);
}
