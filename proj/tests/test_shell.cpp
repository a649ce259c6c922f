#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wzkit/shell/cli.hpp"

namespace {

using namespace wzkit::shell;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

TEST(Cli, OracleExitCodes) {
  EXPECT_EQ(run({"oracle", "--id", "thm1", "--n-min", "0", "--n-max", "300"}).code, 0);
  const Outcome printed = run({"oracle", "--id", "thm3_printed", "--n-min", "1", "--n-max", "10", "--format", "json"});
  EXPECT_EQ(printed.code, 1);
  const auto reports = json_lines(printed.out);
  ASSERT_EQ(reports.size(), 1u);
  std::vector<std::int64_t> ns;
  for (const auto& f : reports[0]["failures"]) ns.push_back(f["n"].get<std::int64_t>());
  EXPECT_EQ(ns, (std::vector<std::int64_t>{2, 4, 6, 8, 10}));
  EXPECT_EQ(reports[0]["failures"][0]["lhs"], "-6/1");
  EXPECT_EQ(reports[0]["mode"], "literal");
  EXPECT_EQ(reports[0]["errata"].size(), 1u);
}

TEST(Cli, LiteralModeSelectsPrintedVariant) {
  const Outcome r = run({"verify", "--id", "thm1", "--mode", "literal", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = json_lines(r.out).at(0);
  EXPECT_EQ(j["id"], "thm1_literal_wz");
  EXPECT_EQ(j["status"], "fail");
  ASSERT_EQ(j["errata"].size(), 1u);
  EXPECT_NE(j["errata"][0].get<std::string>().find("R = -k(2k+1)"), std::string::npos);
  EXPECT_EQ(run({"verify", "--id", "thm2"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"oracle", "--id", "nope"}).code, 2);
  EXPECT_EQ(run({"oracle", "--id", "thm1", "--n-min", "4", "--n-max", "2"}).code, 2);
  EXPECT_EQ(run({"oracle", "--id", "thm3", "--n-min", "0", "--n-max", "2"}).code, 2);
  EXPECT_EQ(run({"oracle", "--n-max", "x"}).code, 2);
  EXPECT_EQ(run({"oracle", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run({"involution", "--id", "thm9"}).code, 2);
  EXPECT_EQ(run({"oracle", "--spec", "/nonexistent/file.wz"}).code, 2);
  EXPECT_EQ(run({"oracle", "--help"}).code, 0);
}

TEST(Cli, ExtraSpecFile) {
  const std::string path = ::testing::TempDir() + "extra.wz";
  {
    std::ofstream f(path);
    f << "term Pow2(n, k) := binom(n, k)\nsum row(n) := sum(k, 0, n, Pow2) == pow(2, n) for n >= 0\n";
  }
  EXPECT_EQ(run({"oracle", "--spec", path, "--id", "row", "--n-max", "40"}).code, 0);
  {
    std::ofstream f(path);
    f << "term Bad(n, k) := binom(n, k\n";
  }
  const Outcome bad = run({"oracle", "--spec", path, "--id", "row"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("syntax error"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, InvolutionAndDiscover) {
  EXPECT_EQ(run({"involution", "--id", "thm1", "--n-max", "5"}).code, 0);
  EXPECT_EQ(run({"involution", "--id", "thm3", "--n-max", "5"}).code, 0);
  EXPECT_EQ(run({"involution", "--id", "thm3", "--n-min", "6", "--n-max", "6"}).code, 1);
  const Outcome d = run({"discover", "--id", "thm2"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("equal to the bundled certificate"), std::string::npos);
  EXPECT_EQ(run({"discover", "--id", "thm1", "--order", "0"}).code, 1);
}

TEST(Reports, TextAndJsonAgree) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"oracle", "--id", "thm3", "--mode", "literal", "--n-max", "12"},
           {"lemmas", "--n-max", "20"},
           {"involution", "--id", "thm3"}}) {
    auto j = args;
    j.insert(j.end(), {"--format", "json"});
    const Outcome text = run(args);
    const Outcome json = run(j);
    EXPECT_EQ(text.code, json.code);
    for (const auto& rep : json_lines(json.out)) {
      EXPECT_TRUE(validate(rep).empty());
      const std::string status = rep["status"] == "pass" ? "PASS" : "FAIL";
      EXPECT_NE(text.out.find(rep["command"].get<std::string>() + " " + rep["id"].get<std::string>()),
                std::string::npos);
      EXPECT_NE(text.out.find(status), std::string::npos);
      for (const auto& f : rep["failures"]) {
        const std::string line = "n=" + std::to_string(f["n"].get<std::int64_t>()) + ": lhs " +
                                 f["lhs"].get<std::string>() + ", rhs " + f["rhs"].get<std::string>();
        EXPECT_NE(text.out.find(line), std::string::npos) << line;
      }
    }
  }
}

TEST(Schema, RejectsMalformedReports) {
  Report r;
  r.command = "oracle";
  r.id = "x";
  r.fail({2, wzkit::BigRational(-6), wzkit::BigRational(6), ""});
  nlohmann::json j = nlohmann::json::parse(to_json(r).dump());
  EXPECT_TRUE(validate(j).empty());
  auto broken = j;
  broken.erase("ms");
  EXPECT_FALSE(validate(broken).empty());
  broken = j;
  broken["status"] = "maybe";
  EXPECT_FALSE(validate(broken).empty());
  broken = j;
  broken["failures"][0]["lhs"] = "-6.0";
  EXPECT_FALSE(validate(broken).empty());
  broken = j;
  broken["range"] = {1};
  EXPECT_FALSE(validate(broken).empty());
  broken = j;
  broken["extra"] = 1;
  EXPECT_FALSE(validate(broken).empty());
}

}  // namespace
