#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bsfan::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, FanNormalCrossings) {
  const Outcome r = run({"fan", "-n", "2", "-p", "2", "-f", "x1", "-f", "x2", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cones"].size(), 1u);
  EXPECT_EQ(j["skeleton"], (std::vector<std::vector<int>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(j["kappa1"], 0);
}

TEST(Cli, FanSvgFile) {
  const std::string path = ::testing::TempDir() + "bsfan_cli_fan.svg";
  const Outcome r = run({"fan", "-n", "1", "-p", "2", "-g", "dt1+dt2", "--svg", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("<svg"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, DivideExample) {
  const Outcome r = run({"divide", "-n", "1", "-p", "1", "--ring", "dz", "--op", "x1*dx1+z", "--by", "dx1",
                     "--order", "Vh:1", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["quotients"], std::vector<std::string>{"x1"});
  EXPECT_EQ(j["remainder"], "z");
}

TEST(Cli, AssembleNormalCrossings) {
  const Outcome r = run({"assemble-b", "-p", "2", "--v", "1,1", "--bL", "1,0:l+1", "--bL", "0,1:l+1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("(s1+1)*(s2+1)"), std::string::npos);
}

TEST(Cli, KappaOfTheModel) {
  const Outcome r = run({"kappa", "-n", "1", "-p", "2", "-g", "dt1+dt2", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["kappa1"], 1);
}

TEST(Cli, RerunsAreByteIdentical) {
  const std::vector<std::string> args{"sb", "-n", "1", "-p", "1", "-f", "x1^2", "--order", "Vh:1", "--format", "json"};
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  const Outcome parse = run({"nf", "-n", "1", "-p", "1", "-g", "dx1", "--op", "x1 +", "--format", "json"});
  EXPECT_EQ(parse.code, kParseError);
  EXPECT_TRUE(nlohmann::json::parse(parse.out).contains("error"));

  const Outcome budget = run({"sb", "-n", "2", "-p", "2", "-f", "x1", "-f", "x1+x2^2", "--budget-sb", "2",
                          "--format", "json"});
  EXPECT_EQ(budget.code, kBudgetExhausted);
  EXPECT_EQ(nlohmann::json::parse(budget.out)["truncated"], true);

  const Outcome pre = run({"sb", "-n", "1", "-p", "1", "-f", "x1", "--order", "V:1"});
  EXPECT_EQ(pre.code, kPreconditionViolated);

  EXPECT_EQ(run({"bogus"}).code, kParseError);
  EXPECT_EQ(run({"fan", "--help"}).code, kOk);
}

}  // namespace
}  // namespace bsfan::cli
