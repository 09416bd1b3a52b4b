#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "fgc/zoo.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
CliRun fgclass(const std::string& args) {
  const std::string cmd = std::string("'") + FGCLASS_PATH + "' " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, AnalyzeNamedGroup) {
  const CliRun r = fgclass("analyze 'PSL(2,7)'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("order 168"), std::string::npos);
  EXPECT_NE(r.out.find("C_pi: member"), std::string::npos);
  EXPECT_NE(r.out.find("A_pi: non-member; order-4 witness"), std::string::npos);
}

TEST(Cli, AnalyzeJsonToStdout) {
  const CliRun r = fgclass("analyze A5 --classes pi --json -");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  const auto& classes = j.at("groups")[0].at("classes");
  EXPECT_EQ(classes.size(), 5u);
  for (const auto& [k, v] : classes.items()) EXPECT_EQ(v, "member") << k;
}

TEST(Cli, AnalyzeGroupFile) {
  const auto path = temp("fgc_cli_s4.grp");
  std::ofstream(path) << "degree 4\n(1,2,3,4)\n(1,2)\n";
  const CliRun r = fgclass("analyze " + path.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("order 24"), std::string::npos);
  std::ofstream(path) << "degree 4\n(1,2\n";
  const CliRun bad = fgclass("analyze " + path.string());
  EXPECT_EQ(bad.code, 2) << bad.out;
  EXPECT_NE(bad.out.find("line 2"), std::string::npos) << bad.out;
  std::filesystem::remove(path);
}

TEST(Cli, CapFlagsYieldUndecided) {
  const CliRun r = fgclass("analyze S3 --cap-element 3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("B: undecided"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(fgclass("").code, 2);
  EXPECT_EQ(fgclass("analyze NotAGroup").code, 2);
  EXPECT_EQ(fgclass("analyze A5 --classes sometimes").code, 2);
  EXPECT_EQ(fgclass("theorems --only T99").code, 2);
  EXPECT_EQ(fgclass("witness B Z").code, 2);
  EXPECT_EQ(fgclass("construct 'PSL(2,17)'").code, 2);
  EXPECT_EQ(fgclass("construct 'PGammaL(2,32)'").code, 2);
  EXPECT_EQ(fgclass("corpus run --manifest /nonexistent/manifest").code, 2);
}

TEST(Cli, Witness) {
  const CliRun found = fgclass("witness A_pi B_pi");
  EXPECT_EQ(found.code, 0);
  EXPECT_NE(found.out.find("SL(2,7) (order 336)"), std::string::npos) << found.out;
  EXPECT_EQ(fgclass("witness B B").code, 1);
}

TEST(Cli, TheoremsSubset) {
  const CliRun r = fgclass("theorems --only T10,T15");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("T10: pass"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("T15: pass"), std::string::npos) << r.out;
  const CliRun list = fgclass("theorems --list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("W-verify"), std::string::npos);
}

TEST(Cli, ConstructRoundTrip) {
  const auto path = temp("fgc_cli_m11.grp");
  EXPECT_EQ(fgclass("construct M11 --emit " + path.string()).code, 0);
  EXPECT_EQ(fgc::ingest(path).order(), 7920u);
  const CliRun big = fgclass("construct 'PGammaL(2,32)' --enable-large");
  EXPECT_EQ(big.code, 0);
  EXPECT_EQ(fgc::parse_group_file(big.out).order(), 163680u);
  std::filesystem::remove(path);
}

TEST(Cli, CorpusRunWithManifest) {
  const auto manifest = temp("fgc_cli_manifest.txt");
  const auto md = temp("fgc_cli_report.md");
  std::ofstream(manifest) << "S3\nQ8\nA5\nSL(2,3) | full_enum=100\n";
  const CliRun r = fgclass("corpus run --manifest " + manifest.string() + " --markdown " + md.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(std::filesystem::exists(md));
  std::filesystem::remove(manifest);
  std::filesystem::remove(md);
}

TEST(Cli, CorpusJsonIsByteIdentical) {
  const CliRun a = fgclass("corpus run --jobs 1 --json -");
  const CliRun b = fgclass("corpus run --jobs 3 --json -");
  ASSERT_EQ(a.code, 0) << a.out.substr(0, 2000);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW((void)nlohmann::json::parse(a.out));
}
