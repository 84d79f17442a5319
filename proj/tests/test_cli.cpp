#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "test_support.hpp"

using testing_support::fixture;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + THETAMIRROR_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string f(const std::string& name) { return "\"" + fixture(name) + "\""; }

}  // namespace

TEST(Cli, BlowupPresentation) {
  auto r = run("theta-mult --pair " + f("blowup.json") + " --table " + f("blowup_N.json") + " --bound 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("theta[D1]*theta[D3] = t^C2*theta[0]"), std::string::npos);
  EXPECT_NE(r.out.find("  theta[D1]*theta[D3] - t^C2\n"), std::string::npos);
  EXPECT_NE(r.out.find("  theta[D2]*theta[D4] - t^(C1+C3) - t^C1*theta[D1]\n"), std::string::npos);
}

TEST(Cli, ZerothOrderTable) {
  auto r = run("theta-mult --pair " + f("p2_toric.json") + " --bound 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "theta[D1]*theta[D2] = theta[D1+D2]\n"
            "theta[D1]*theta[D3] = theta[D1+D3]\n"
            "theta[D2]*theta[D3] = theta[D2+D3]\n"
            "relations: none\n");
}

TEST(Cli, PlanarCompletion) {
  auto r = run("scatter-complete --planar " + f("gps2.json") + " --bound 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("wall (-1,-1) [added] 1 + t^(t1+t2)*z^(1,1)"), std::string::npos);
  auto j = thetamirror::io::parse_json(
      run("scatter-complete --planar " + f("gps2.json") + " --format json").out);
  EXPECT_EQ(j["walls"].size(), 3u);
}

TEST(Cli, MissingInvariantsExitThree) {
  auto r = run("theta-mult --pair " + f("blowup.json") + " D2 D4");
  ASSERT_EQ(r.status, 3);
  auto j = thetamirror::io::parse_json(r.out);
  EXPECT_EQ(j["error"], "missing-invariant");
  EXPECT_EQ(j["missing"].size(), 2u);
}

TEST(Cli, ValidationFailuresExitTwo) {
  EXPECT_EQ(run("candidates --pair " + f("blowup.json") + " --bound 0 D1 D3").status, 2);
  EXPECT_EQ(run("candidates --pair " + f("blowup.json") + " D9 D3").status, 2);
  EXPECT_EQ(run("candidates --pair " + f("blowup.json") + " --format xml D1 D3").status, 2);
  EXPECT_EQ(run("candidates --pair " + f("does_not_exist.json") + " D1 D3").status, 2);
  EXPECT_EQ(run("candidates --pair " + f("gps2.json") + " D1 D3").status, 2);  // wrong kind
  EXPECT_EQ(run("consistency --walls " + f("blowup_walls.json")).status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
}

TEST(Cli, MalformedJson) {
  const std::string path = ::testing::TempDir() + "broken.json";
  FILE* out = std::fopen(path.c_str(), "w");
  ASSERT_NE(out, nullptr);
  std::fputs("{\"schema_version\": 1, \"kind\": ", out);
  std::fclose(out);
  EXPECT_EQ(run("tropicalize --pair \"" + path + "\"").status, 2);
}

TEST(Cli, DeterministicForFixedSeed) {
  const std::string args = "theta-product --walls " + f("blowup_walls.json") + " D2 D4 --seed 7 --format json";
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const std::string render = "render --walls " + f("blowup_walls.json") +
                             " --format svg --point D4 --endpoint 1/3,2/3,0,0";
  auto s1 = run(render), s2 = run(render);
  ASSERT_EQ(s1.status, 0);
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_NE(s1.out.find("<svg"), std::string::npos);
  EXPECT_NE(s1.out.find("<polyline"), std::string::npos);
}

TEST(Cli, CandidatesAndAssociativity) {
  auto r = run("candidates --pair " + f("blowup.json") + " D2 D4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "r=D1 beta=t^C1\nr=0 beta=t^(C1+C3)\n");
  auto a = run("assoc-check --pair " + f("blowup.json") + " --table " + f("blowup_N_full.json"));
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, "associative\n");
}

TEST(Cli, TropicalTypeCheck) {
  auto r = run("trop-check --type " + f("p2xa1_line.json") + " --format json");
  ASSERT_EQ(r.status, 0);
  auto j = thetamirror::io::parse_json(r.out);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["balanced"], true);
}

TEST(Cli, TropicalizeAndPoints) {
  auto r = run("tropicalize --pair " + f("blowup.json") + " --format json");
  ASSERT_EQ(r.status, 0);
  auto j = thetamirror::io::parse_json(r.out);
  EXPECT_EQ(j["cones"].size(), 9u);
  EXPECT_EQ(j["maximal"], true);
  auto p = run("points --pair " + f("i3_degeneration.json") + " --height 1 --degree");
  ASSERT_EQ(p.status, 0);
  EXPECT_NE(p.out.find("degree 1"), std::string::npos);
}
