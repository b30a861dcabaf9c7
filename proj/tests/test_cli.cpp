// Runs the built command-line tool and checks exit codes and JSON output.

#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(SLANTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, RemarkZbar2) {
  const CliRun r = run("verify remark --variant zbar2");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["lhsConst"], "0");
  EXPECT_EQ(j["rhsConst"], "3/10");
}

TEST(Cli, CommutatorReport) {
  const CliRun r = run("commutator --f \"z + zbar^2\" --g \"z + zbar\" --kmax 6");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["kMax"], 6);
  EXPECT_EQ(j["witness"]["k"], 1);
  EXPECT_EQ(j["witness"]["value"], "-1/2");
}

TEST(Cli, VerifyLemmas) {
  const CliRun r = run("verify lemmas --nmax 200 --count 50 --seed 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(parse(r)["passed"].get<bool>());
}

TEST(Cli, DeterministicOutput) {
  const CliRun a = run("verify identities --seed 9 --count 2");
  const CliRun b = run("verify identities --seed 9 --count 2 --jobs 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MatrixCsv) {
  const CliRun r = run("matrix --word \"B[z + zbar]\" --rows 2 --cols 2 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,1/2\n0,1\n");
}

TEST(Cli, ApplyWord) {
  const CliRun r = run("apply --word \"W*\" --poly \"z^3\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["output"]["text"], "7/4*z^6");
}

TEST(Cli, TheoremStrictInconclusiveExitsOne) {
  EXPECT_EQ(run("theorem --pbar zbar --phi z --psi \"2*z\" --kmax 0 --strict").code, 1);
  EXPECT_EQ(run("theorem --pbar zbar --phi z --psi \"2*z\" --kmax 0").code, 0);
  const CliRun w = run("theorem --pbar zbar --phi z --psi \"2*z\"");
  ASSERT_EQ(w.code, 0);
  EXPECT_EQ(parse(w)["verdict"], "NonCommuteWitness");
}

TEST(Cli, LemmaProportional) {
  const CliRun r = run("lemma --a 3 --b 1 --N 1 --phi \"3*z\" --psi z");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["verdict"], "Commute");
  EXPECT_EQ(parse(r)["ratio"], "3");
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("commutator --f \"z^-1\" --g z").code, 2);
  EXPECT_EQ(run("theorem --pbar \"z + zbar\"").code, 2);
  EXPECT_EQ(run("verify remark --variant zbar9").code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }
