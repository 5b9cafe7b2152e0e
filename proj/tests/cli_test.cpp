#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>
#include <unistd.h>

#include "support.hpp"

namespace ts = testing_support;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;  // stdout and stderr interleaved
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MCYCLE_CLI_PATH) + " " + args + " 2>&1";
  Run r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mcycle_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, InductTenThenVerify) {
  const auto out = path("ten.txt");
  const auto r = run("construct --method induct --n 10 --t 3 --out " + out);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("ok=true window_count=220"), std::string::npos) << r.out;
  const auto seq = mcycle::parse_sequence_file(ts::read_text(out));
  EXPECT_EQ(seq.size(), 220u);
  const auto v = run("verify --in " + out);
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("VALID"), std::string::npos);
}

TEST_F(Cli, VerifyGoldens) {
  EXPECT_EQ(run("verify --in " + ts::golden_path("mcycle_5_3.txt")).code, 0);
  EXPECT_EQ(run("verify --in " + ts::golden_path("ucycle_8_3.txt")).code, 0);
  EXPECT_EQ(run("verify --in " + ts::golden_path("converted_8_3.txt")).code, 0);
  const auto bad = run("verify --in " + ts::golden_path("base10_ST_7_3.txt"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("ok=false"), std::string::npos);
}

TEST_F(Cli, BadPatternExitsTwo) {
  const auto r = run("construct --method transition --n 6 --t 3");
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.out.find("BadPattern"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[2,2,2]"), std::string::npos) << r.out;
}

TEST_F(Cli, NotCoprimeShiftExitsTwo) {
  const auto r = run("construct --method transition --n 5 --t 4");
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.out.find("NotCoprimeShift"), std::string::npos) << r.out;
}

TEST_F(Cli, TransitionToStdout) {
  const auto r = run("construct --method transition --n 5 --t 3 --kind m");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(ts::read_text(ts::golden_path("mcycle_5_3.txt"))), std::string::npos) << r.out;
}

TEST_F(Cli, DirectSmallT) {
  EXPECT_EQ(run("construct --n 5 --t 2 --out " + path("a.txt")).code, 0);
  EXPECT_EQ(run("construct --n 4 --t 1 --out " + path("b.txt")).code, 0);
  EXPECT_EQ(run("verify --in " + path("a.txt")).code, 0);
  EXPECT_EQ(run("construct --n 4 --t 2").code, 2);
}

TEST_F(Cli, ConvertRoundTrip) {
  const auto u = path("u.txt"), m = path("m.txt");
  ASSERT_EQ(run("construct --method transition --n 11 --t 3 --kind u --out " + u).code, 0);
  const auto r = run("construct --method convert --in " + u + " --out " + m);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(mcycle::parse_sequence_file(ts::read_text(m)).size(), 286u);
  const auto x8 = path("x8.txt");
  ASSERT_EQ(run("construct --method convert --in " + ts::golden_path("ucycle_8_3.txt") + " --out " + x8).code, 0);
  EXPECT_EQ(mcycle::parse_sequence_file(ts::read_text(x8)).size(), 120u);
  EXPECT_EQ(run("construct --method convert --in " + ts::golden_path("mcycle_5_3.txt")).code, 3);
  EXPECT_EQ(run("construct --method convert").code, 3);
}

TEST_F(Cli, Search) {
  const auto first = run("search --n 4 --t 3 --first");
  ASSERT_EQ(first.code, 0) << first.out;
  EXPECT_EQ(first.out.rfind("4 3 m\n1 1 1", 0), 0u) << first.out;
  const auto count = run("search --n 4 --t 3 --count --equiv relabel");
  EXPECT_EQ(count.code, 0);
  EXPECT_NE(count.out.find("count=6"), std::string::npos) << count.out;
  EXPECT_NE(run("search --n 4 --t 3 --count --equiv relabel-rotation").out.find("count=2"), std::string::npos);
  EXPECT_NE(run("search --n 3 --t 3 --count").out.find("count=0"), std::string::npos);
  EXPECT_EQ(run("search --n 3 --t 3 --first").code, 2);
  EXPECT_EQ(run("search --n 9 --t 4 --budget 100").code, 2);
  EXPECT_EQ(run("search --n 4 --t 3 --equiv nope").code, 3);
}

TEST_F(Cli, Graph) {
  const auto dot = path("g.dot");
  const auto r = run("graph --n 5 --t 3 --kind m --dot " + dot);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("edges=7 eulerian=true"), std::string::npos) << r.out;
  EXPECT_EQ(ts::read_text(dot).rfind("digraph T_5_3 {", 0), 0u);
}

TEST_F(Cli, InputErrorsExitThree) {
  EXPECT_EQ(run("verify --in /nonexistent/file").code, 3);
  EXPECT_EQ(run("construct --method induct --n 9 --t 3").code, 3);
  EXPECT_EQ(run("construct --n 5").code, 3);
  EXPECT_EQ(run("bogus").code, 3);
  std::FILE* f = std::fopen(path("short.txt").c_str(), "w");
  std::fputs("5 3 m\n1 1 1\n", f);
  std::fclose(f);
  EXPECT_EQ(run("verify --in " + path("short.txt")).code, 3);
}
