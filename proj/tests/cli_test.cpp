#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cylint/cli.hpp"

namespace cylint::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

TEST(CliTest, Coeffs) {
  Outcome o = invoke({"coeffs", "--j", "1", "--k", "1"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "{\"j\":1,\"k\":1,\"betas\":[\"1/5\",\"-1/15\",\"-2/15\"]}\n");

  EXPECT_EQ(invoke({"coeffs", "--j", "1", "--k", "1", "--route", "sum"}).out, o.out);

  o = invoke({"coeffs", "--j", "0", "--k", "2", "--format", "csv"});
  EXPECT_EQ(o.out, "l,beta,rho_power\n0,1/5,4\n1,4/15,2\n2,8/15,0\n");
}

TEST(CliTest, Mu) {
  const Outcome o = invoke({"mu", "--max", "3"});
  EXPECT_EQ(o.code, kOk);
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], R"({"m":1,"rho2_coeffs":["1"]})");
  EXPECT_EQ(ls[2], R"({"m":3,"rho2_coeffs":["5/8","1/4","1/8"]})");
}

TEST(CliTest, VerifySweep) {
  Outcome o = invoke({"verify", "--jmax", "6", "--kmax", "6"});
  EXPECT_EQ(o.code, kOk) << o.err;
  EXPECT_TRUE(o.out.empty());

  o = invoke({"verify", "--jmax", "2", "--kmax", "2", "--report", "--jobs", "3"});
  EXPECT_EQ(o.code, kOk);
  const auto ls = lines(o.out);
  // sum over j, k <= 2 of (k + 1) tuples with j <= N <= j + k
  EXPECT_EQ(ls.size(), 18u);
  EXPECT_EQ(ls.front(),
            R"({"j":0,"k":0,"N":0,"residual":{"rho2_coeffs":["1"]},"is_constant":true,)"
            R"("constant":"1","closed_form_constant":"1","holds":true})");
}

TEST(CliTest, VerifyWithLemmas) {
  const Outcome o = invoke({"verify", "--jmax", "1", "--kmax", "1", "--lemmas", "--seed", "5"});
  EXPECT_EQ(o.code, kOk) << o.err;
  EXPECT_NE(o.err.find("lemma1"), std::string::npos);
  EXPECT_NE(o.err.find("lemma2"), std::string::npos);
}

TEST(CliTest, Eval) {
  const Outcome o = invoke({"eval", "--j", "1", "--k", "1", "--rho", "1", "--s", "1/2"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out,
            R"({"j":1,"k":1,"rho":"1","s":"1/2","P":"7/40","rho2_minus_s2":"3/4"})"
            "\n");
  EXPECT_EQ(invoke({"eval", "--j", "1", "--k", "1", "--rho", "1", "--s", "2"}).code, kUsage);
}

TEST(CliTest, Dedup) {
  const auto terms = temp_file(
      "cylint_cli_terms.json",
      R"({"terms":[{"j":0,"k":0,"a":"1"},{"j":0,"k":1,"a":"2/3"},{"j":1,"k":0,"a":"-5"}],)"
      R"("rho_inner":"7/20","rho_outer":"1"})");
  Outcome o = invoke({"dedup", "--terms", terms.string()});
  EXPECT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(o.out,
            R"({"total_rows":4,"rank":3,"redundant_rows":[{"radius":"outer","l":1}],)"
            R"("predicted_independent":3,"rank_status":"equal","witnesses_verified":true})"
            "\n");

  const auto out_path = std::filesystem::temp_directory_path() / "cylint_cli_report.json";
  o = invoke({"dedup", "--terms", terms.string(), "--out", out_path.string(),
              "--rho-inner", "1/2"});
  EXPECT_EQ(o.code, kOk) << o.err;
  std::ifstream in(out_path);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(written.find("\"rank\":3"), std::string::npos);

  // inner radius not below outer
  EXPECT_EQ(invoke({"dedup", "--terms", terms.string(), "--rho-inner", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"dedup", "--terms", "/nonexistent/terms.json"}).code, kUsage);
  const auto broken = temp_file("cylint_cli_broken.json", "{\"terms\": [");
  EXPECT_EQ(invoke({"dedup", "--terms", broken.string()}).code, kUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"coeffs", "--j", "1", "--k", "1", "--bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"coeffs", "--j", "33", "--k", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"coeffs", "--j", "-1", "--k", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"mu", "--max", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--jmax", "40"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(CliTest, MalformedRationalIsPositionAnnotated) {
  const Outcome o = invoke({"eval", "--j", "1", "--k", "1", "--rho", "0.35", "--s", "0"});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.err.find("--rho"), std::string::npos);
  EXPECT_NE(o.err.find("position 1"), std::string::npos);
}

TEST(CliTest, Deterministic) {
  const std::vector<std::string> args{"verify", "--jmax", "3", "--kmax", "3", "--report",
                                      "--lemmas", "--seed", "9", "--jobs", "4"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

TEST(CliTest, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(CYLINT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("verify --jmax 6 --kmax 6"), 0);
  EXPECT_EQ(status("coeffs --j 1"), 2);
  EXPECT_EQ(status("eval --j 0 --k 0 --rho 1/0 --s 0"), 2);
}

}  // namespace
}  // namespace cylint::cli
