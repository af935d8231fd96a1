//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace qhl {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qhl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(QHL_GOLDEN_DIR) / name);
  EXPECT_TRUE(in.good()) << name;
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("qhl_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

struct GoldenCase {
  std::vector<std::string> args;
  const char* file;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

std::string case_name(const ::testing::TestParamInfo<GoldenCase>& info) {
  std::string name;
  for (char c : std::string(info.param.file))
    name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return name;
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesCorpus) {
  Result r = run(GetParam().args);
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, golden(GetParam().file));
}

INSTANTIATE_TEST_SUITE_P(
    Corpus, Golden,
    ::testing::Values(GoldenCase{{"phi", "1->2->3->4", "--xi", "4,3,2,1", "--format", "text"}, "phi_a4.txt"},
                      GoldenCase{{"phi", "1->2<-3", "--xi", "2,1,2"}, "phi_a3.txt"},
                      GoldenCase{{"iso", "1->2<-3"}, "iso_a3.txt"},
                      GoldenCase{{"iso", "1->2->3->4"}, "iso_a4.txt"},
                      GoldenCase{{"hl", "1->2->3->4", "--format", "json"}, "hl_a4.json"},
                      GoldenCase{{"hl", "1->2<-3", "--format", "json"}, "hl_a3.json"},
                      GoldenCase{{"bq", "1->2->3->4", "--format", "json"}, "bq_a4.json"},
                      GoldenCase{{"ar", "1->2<-3", "--format", "dot"}, "ar_a3.dot"},
                      GoldenCase{{"roots", "a:1->2; b:3->2; c:4->2", "--format", "json"}, "roots_d4.json"},
                      GoldenCase{{"respath", "a:1->2; b:3->2; c:4->2"}, "respath_d4.txt"},
                      GoldenCase{{"hat", "1->2<-3", "--m", "a13,a22:2"}, "hat_a3.txt"}),
    case_name);

TEST(Cli, DegenerationExample) {
  Result r = run({"deg", "1->2", "--m", "a12:1", "--n", "a11:1,a22:1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "N <= M\n");
  EXPECT_EQ(run({"deg", "1->2", "--m", "a11,a22", "--n", "a12"}).out, "M <= N\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"phi", "1->1"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"phi", "1->2", "--format", "dot"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"phi", "1->2", "--format", "yaml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hat", "1->2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"phi", "1->2", "--xi", "1,1"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"hat", "1->2", "--m", "[2,0]"}).code, cli::kExitUsage);
  Result help = run({"phi", "--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("--xi"), std::string::npos);
}

TEST(Cli, DeterministicAndSeeded) {
  std::vector<std::string> args{"lambda", "1->2<-3->4", "--m", "a24:2,a13", "--seed", "5"};
  Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  setenv("QHL_SEED", "5", 1);
  Result c = run({"lambda", "1->2<-3->4", "--m", "a24:2,a13"});
  unsetenv("QHL_SEED");
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, LambdaResDecomposePipeline) {
  const std::string q = "a:1->2; b:3->2; c:4->2";
  Result lam = run({"lambda", q, "--m", "[1,1,1,0]:2,[0,1,0,0]"});
  ASSERT_EQ(lam.code, cli::kExitOk) << lam.err;
  auto lam_file = temp_file("lambda.json", lam.out);
  Result verify = run({"verify", q, "--input", lam_file.string()});
  EXPECT_EQ(verify.code, cli::kExitOk);
  EXPECT_EQ(verify.out, "relations hold\n");
  Result res = run({"res", q, "--input", lam_file.string()});
  ASSERT_EQ(res.code, cli::kExitOk) << res.err;
  auto res_file = temp_file("res.json", res.out);
  Result dec = run({"decompose", q, "--input", res_file.string()});
  EXPECT_EQ(dec.code, cli::kExitOk) << dec.err;
  EXPECT_EQ(dec.out, "[0,1,0,0]:1,[1,1,1,0]:2\n");
}

TEST(Cli, DeframeAndSelftest) {
  Result df = run({"deframe", "1->2", "--d", "1,1", "--format", "dot"});
  EXPECT_EQ(df.code, cli::kExitOk);
  EXPECT_NE(df.out.find("\"inf\""), std::string::npos);
  Result st = run({"selftest", "--quick", "--criterion", "1", "--criterion", "2"});
  EXPECT_EQ(st.code, cli::kExitOk) << st.out;
  EXPECT_EQ(std::count(st.out.begin(), st.out.end(), '\n'), 2);
}

}  // namespace
}  // namespace qhl
