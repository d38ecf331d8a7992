#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "awvec/suites.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace awvec;
using namespace awvec::testing;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  std::string cmd = std::string(AWVEC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kAW = "--q 1/2 --a 1/3 --b -1/4 --c 1/5 --d 2/3";

RunConfig aw_config(const std::string& target) {
  RunConfig cfg;
  cfg.target = target;
  cfg.q = R("1/2");
  cfg.a = R("1/3");
  cfg.b = R("-1/4");
  cfg.c = R("1/5");
  cfg.d = R("2/3");
  return cfg;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("verify aw " + kAW).code, 0);
  EXPECT_EQ(cli("verify daha " + kAW + " --mutation t1_reflection_sign").code, 1);
  EXPECT_EQ(cli("verify aw --q 0.5 --a 1/3 --b -1/4 --c 1/5 --d 2/3").code, 2);
  EXPECT_EQ(cli("verify aw --q 1/2").code, 2);
  EXPECT_EQ(cli("verify nosuch " + kAW).code, 2);
  EXPECT_EQ(cli("limits aw-to-jacobi --steps 0").code, 2);
  EXPECT_EQ(cli("verify aw " + kAW + " --format yaml").code, 2);
  EXPECT_EQ(cli("verify aw " + kAW + " --mutation nosuch").code, 2);
  EXPECT_EQ(cli("verify jacobi --alpha 1/2 --beta 1/0").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, ComputeEPolyZero) {
  CliRun r = cli("compute e-poly --n 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  nlohmann::json j = nlohmann::json::parse(cli("compute e-poly --n 0 --format json").out);
  EXPECT_EQ(j["coeffs"]["0"], "1");
  EXPECT_EQ(cli("compute e-poly --family lqj --n 1").code, 2);
}

TEST(Cli, DeterministicWithoutTiming) {
  const std::string args = "verify nonsym-aw " + kAW + " --format json --no-timing --seed 7";
  CliRun a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["elapsed_ms"], 0);
  EXPECT_EQ(j["summary"]["fail"], 0);
  std::string prev;
  for (const auto& c : j["checks"]) {
    EXPECT_LE(prev, c["id"].get<std::string>());
    prev = c["id"];
    EXPECT_FALSE(c["paper_ref"].get<std::string>().empty());
  }
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "awvec_cli_out.csv";
  CliRun direct = cli("limits aw-to-jacobi --steps 4 --format csv --no-timing");
  CliRun file = cli("limits aw-to-jacobi --steps 4 --format csv --no-timing --out " + path);
  EXPECT_EQ(file.out, "");
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), direct.out);
  EXPECT_EQ(direct.out.rfind("table,step,param,error,order\n", 0), 0u);
}

TEST(Cli, LimitFailureIsExitOne) {
  CliRun r = cli("limits aw-to-lqj --format json --no-timing");
  EXPECT_EQ(r.code, 1);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tables"].size(), 2u);
  EXPECT_EQ(j["tables"][0]["rows"].size(), 20u);
  EXPECT_TRUE(j["tables"][0]["rows"][0]["order"].is_null());
}

TEST(Suites, VerifyRequiresParameters) {
  RunConfig cfg;
  cfg.target = "jacobi";
  EXPECT_THROW(run_verify(cfg), ConfigError);
  cfg.alpha = R(-2);
  cfg.beta = R(0);
  EXPECT_NO_THROW(run_verify(cfg));
}

TEST(Suites, NotApplicableOutsideRange) {
  RunConfig cfg;
  cfg.target = "jacobi";
  cfg.alpha = R("-3/2");
  cfg.beta = R("1/2");
  cfg.nmax = 2;
  Report r = run_verify(cfg);
  EXPECT_GT(r.count(Status::NotApplicable), 0);
  for (const CheckRecord& c : r.checks) {
    if (c.id.rfind("jacobi.circle", 0) == 0) {
      EXPECT_EQ(c.status, Status::NotApplicable);
    }
  }
}

TEST(Suites, SeedChangesSampledSets) {
  RunConfig a = aw_config("aw"), b = aw_config("aw");
  a.nmax = b.nmax = 2;
  a.seed = 1;
  b.seed = 2;
  std::vector<AWParams<Rational>> sa = detail::sample_aw(1, 5), sb = detail::sample_aw(2, 5);
  EXPECT_FALSE(sa[0].a == sb[0].a && sa[0].b == sb[0].b && sa[0].c == sb[0].c);
  EXPECT_TRUE(run_verify(a).passed());
  EXPECT_TRUE(run_verify(b).passed());
}

TEST(Suites, MutationsAreCaught) {
  RunConfig d = aw_config("daha");
  d.maxdeg = 4;
  d.mutation = Mutation::T1ReflectionSign;
  EXPECT_FALSE(run_verify(d).passed());
  RunConfig n = aw_config("nonsym-aw");
  n.nmax = 2;
  for (Mutation m : {Mutation::Y21PrintedDenominator, Mutation::Y12DroppedFactor}) {
    n.mutation = m;
    EXPECT_FALSE(run_verify(n).passed()) << mutation_name(m);
  }
  n.mutation = Mutation::None;
  EXPECT_TRUE(run_verify(n).passed());
}

TEST(Suites, ComputeObjects) {
  RunConfig cfg;
  cfg.target = "h";
  cfg.family = "jacobi";
  cfg.nmax = 3;
  ComputeOutput h = run_compute(cfg);
  EXPECT_EQ(h.json["h"].size(), 4u);
  EXPECT_EQ(h.json["h"][0], "1");
  cfg.target = "gram";
  cfg.nmax = 2;
  EXPECT_TRUE(run_compute(cfg).json["diagonal"].get<bool>());
  cfg.target = "nosuch";
  EXPECT_THROW(run_compute(cfg), ConfigError);
  cfg.target = "p-poly";
  cfg.n = -1;
  EXPECT_THROW(run_compute(cfg), ConfigError);
}
