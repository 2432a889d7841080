#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mpendo/cli.hpp"

using mpendo::run_cli;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines_of(const std::string& text)
{
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    out.push_back(Json::parse(line));
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
  const auto path = std::filesystem::temp_directory_path() / ("mpendo_test_" + name);
  std::ofstream(path) << content;
  return path;
}

const char* kPhi = "rho r1 dim=1 duality=orth omega=+1 ; a=2\n"
                   "rho r2 dim=2 duality=sympl omega=-1 ; a=1\n";

} // namespace

TEST(Cli, EnumerateLevisGivesTwoToTheN)
{
  const auto r = run({"enumerate", "levis", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 8u);
  for (const auto& j : lines)
    EXPECT_EQ(j["n"], 3);
}

TEST(Cli, EnumerateEndoscopicAndSplitSeqs)
{
  EXPECT_EQ(lines_of(run({"enumerate", "endoscopic", "--n", "4"}).out).size(), 5u);
  const auto r = run({"enumerate", "split-seqs", "--n", "2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d=(1,1)"), std::string::npos);
}

TEST(Cli, SignLemmaAllPass)
{
  const auto r = run({"verify", "sign-lemma", "--kmax", "8"});
  EXPECT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 81u);
  for (const auto& j : lines) {
    EXPECT_EQ(j["status"], "PASS");
    EXPECT_EQ(j["details"]["direct"], j["details"]["closed_form"]);
  }
}

TEST(Cli, CommutationPassesPerCase)
{
  const auto r = run({"verify", "commutation", "--nmax", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(lines_of(r.out).size(), 1u + 2u + 3u + 4u);
  const auto a = run({"verify", "commutation", "--nmax", "2", "--ambient"});
  EXPECT_EQ(a.code, 0) << a.out;
  for (const auto& j : lines_of(a.out))
    EXPECT_EQ(j["check"], "commutation-ambient");
}

TEST(Cli, FiberSweepSkipsVacuousCasesAndExitsZero)
{
  const auto r = run({"verify", "fiber-bijection", "--nmax", "3", "--p", "7", "--trials", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  bool saw_skip = false;
  for (const auto& j : lines_of(r.out)) {
    if (j["status"] == "SKIP") {
      saw_skip = true;
      EXPECT_EQ(j["params"]["n"], 3);
    } else {
      EXPECT_EQ(j["status"], "PASS");
    }
  }
  EXPECT_TRUE(saw_skip);
}

TEST(Cli, SerialAndParallelReportsAreIdentical)
{
  const std::vector<std::vector<std::string>> sweeps = {
      {"verify", "sign-lemma", "--kmax", "6"},
      {"verify", "levi-preimages", "--nmax", "5"},
      {"verify", "fiber-bijection", "--nmax", "3", "--p", "11", "--p", "13", "--trials", "10", "--seed", "7"},
      {"verify", "commutation", "--nmax", "3"},
      {"verify", "lparam-partition", "--nmax", "4", "--trials", "50", "--seed", "3"},
  };
  for (auto args : sweeps) {
    const auto parallel = run(args);
    args.push_back("--serial");
    const auto serial = run(args);
    EXPECT_EQ(parallel.code, 0);
    EXPECT_EQ(parallel.out, serial.out) << args[1];
  }
}

TEST(Cli, SameSeedIsByteIdentical)
{
  const std::vector<std::string> args = {"verify", "lparam-partition", "--nmax", "5", "--trials", "100", "--seed", "42"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> fiber = {"verify", "fiber-bijection", "--nmax", "2", "--trials", "20", "--seed", "9"};
  EXPECT_EQ(run(fiber).out, run(fiber).out);
}

TEST(Cli, OutFileAndTextFormat)
{
  const auto path = std::filesystem::temp_directory_path() / "mpendo_test_out.jsonl";
  const auto r = run({"verify", "sign-lemma", "--kmax", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(lines_of(buf.str()).size(), 9u);
  std::filesystem::remove(path);

  const auto t = run({"verify", "sign-lemma", "--kmax", "1", "--format", "text"});
  EXPECT_EQ(t.out.rfind("PASS sign-lemma", 0), 0u);
}

TEST(Cli, UsageErrorsExitTwo)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "sign-lemma", "--kmax", "x"}).code, 2);
  EXPECT_EQ(run({"verify", "sign-lemma", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "fiber-bijection", "--p", "9"}).code, 2);
  EXPECT_EQ(run({"lparam", "factor", "--file", "/nonexistent/phi.txt"}).code, 2);
  EXPECT_EQ(run({"verify", "sign-lemma", "--out", "/nonexistent/dir/out"}).code, 2);
}

TEST(Cli, HelpExitsZero)
{
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, NormalizeExpressions)
{
  const auto ok = run({"normalize", "D[MSp(1)] . T[SO(3)xSO(1) -> MSp(1)] - T[SO(3)xSO(1) -> MSp(1)] . D[SO(3)xSO(1)]",
                       "--format", "text"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out, "0\n");

  const auto syntax = run({"normalize", "T[SO(3)xSO(1) -> MSp(1)"});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_FALSE(syntax.err.empty());
  EXPECT_EQ(run({"normalize", "I[MSp(2) -> GL(1)]"}).code, 2);

  const auto stuck =
      run({"normalize", "R[GL(2)xMSp(0) -> GL(1,1)xMSp(0)] . T[(GL(2)xSO(1))xSO(1) -> GL(2)xMSp(0)]"});
  EXPECT_EQ(stuck.code, 1);
  const auto lines = lines_of(stuck.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["status"], "FAIL");
  EXPECT_FALSE(lines[0]["counterexample"].is_null());
}

TEST(Cli, LParamFactorAndCorollary)
{
  const auto path = temp_file("phi.txt", kPhi);
  const auto f = run({"lparam", "factor", "--file", path.string(), "--d", "1,1"});
  EXPECT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(lines_of(f.out).size(), 2u);
  EXPECT_EQ(lines_of(run({"lparam", "factor", "--file", path.string()}).out).size(), 4u);

  const auto c = run({"lparam", "corollary", "--file", path.string(), "--d", "1,1", "--block", "r2,1"});
  EXPECT_EQ(c.code, 0) << c.err;
  for (const auto& j : lines_of(c.out)) {
    EXPECT_EQ(j["block"], "(r2,1)");
    EXPECT_EQ(j["x"], "0");
    const bool primed = j["levi_choice"][0] == 2;
    EXPECT_EQ(j["alpha"], primed ? 1 : -1);
  }
  EXPECT_EQ(run({"lparam", "corollary", "--file", path.string(), "--block", "r9,1"}).code, 2);
  EXPECT_EQ(run({"lparam", "factor", "--file", path.string(), "--d", "2,2"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, InvalidParameterIsAFailWithCounterexample)
{
  const auto path = temp_file("bad_phi.txt", "rho r1 dim=1 duality=orth omega=+1 ; a=1\n"
                                             "rho r1 dim=1 duality=orth omega=+1 ; a=1\n");
  const auto r = run({"lparam", "factor", "--file", path.string()});
  EXPECT_EQ(r.code, 1);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["status"], "FAIL");
  EXPECT_FALSE(lines[0]["counterexample"].empty());

  const auto malformed = temp_file("malformed_phi.txt", "rho r1 dim=one duality=orth omega=+1 ; a=2\n");
  const auto m = run({"lparam", "factor", "--file", malformed.string()});
  EXPECT_EQ(m.code, 2);
  EXPECT_NE(m.err.find("line 1"), std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(malformed);
}
