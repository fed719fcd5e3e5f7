#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(AINF_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, CertifyPasses) {
  const CliRun r = run("certify --p 3 --m 1 --max-j 6");
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "1");
  EXPECT_EQ(doc["pass"], true);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("certify --p 4").code, 2);
  EXPECT_EQ(run("certify --p 3 --m 0").code, 2);
  EXPECT_EQ(run("diagonal perm 8").code, 2);
  EXPECT_EQ(run("diagonal cube 2").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("lemma --trials 0").code, 2);
  EXPECT_EQ(run("--format xml lemma").code, 2);
}

TEST(Cli, DiagonalText) {
  const CliRun r = run("--format text diagonal assoc 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6 terms"), std::string::npos);
  EXPECT_NE(r.out.find("(12)34 x 12(34)"), std::string::npos);
  const CliRun one = run("diagonal perm 1");
  EXPECT_EQ(nlohmann::json::parse(one.out)["terms_text"], nlohmann::json::parse("[\"1 x 1\"]"));
}

TEST(Cli, FactorsAndLemma) {
  const CliRun f = run("factors --p 3 --count 2 --certify --max-j 4");
  EXPECT_EQ(f.code, 0);
  const auto doc = nlohmann::json::parse(f.out);
  EXPECT_EQ(doc["factors"][1]["m"], 3);
  EXPECT_EQ(doc["factors"][1]["pass"], true);
  const CliRun l = run("lemma --p 3 --trials 1000 --seed 7");
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(nlohmann::json::parse(l.out)["passed"], 1000);
}

TEST(Cli, ConfigFileMirrorsFlags) {
  const std::string path = ::testing::TempDir() + "ainf_cli_test.conf";
  {
    std::ofstream conf(path);
    conf << "format=text\n[lemma]\np=5\ntrials=20\nseed=3\n";
  }
  const CliRun r = run("--config " + path + " lemma");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lemma p=5 seed=3: 20/20 pass"), std::string::npos) << r.out;
}
