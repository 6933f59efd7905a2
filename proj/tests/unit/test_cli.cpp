#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out, err;
  json record() const { return json::parse(out.substr(0, out.find('\n'))); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hgm::tools::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CountCurve) {
  const auto r = run({"count", "--a", "1,0", "--b", "3,2", "--m", "4", "--p", "7", "--t", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.record();
  EXPECT_EQ(j["command"], "count");
  EXPECT_EQ(j["outputs"]["count_X"], 6);
  EXPECT_EQ(j["outputs"]["count_X_direct"], 6);
  EXPECT_EQ(j["outputs"]["count_Y"], 4);
  EXPECT_TRUE(j["timing"].is_null());
  for (const char* key : {"command", "inputs", "outputs", "residuals", "timing"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, CountWithDecomposition) {
  const auto r = run({"count", "--a", "1,0", "--b", "3,2", "--m", "4", "--p", "13", "--t", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.record();
  EXPECT_EQ(j["outputs"]["count_X"], 18);
  std::int64_t sum = 0;
  for (const auto& q : j["outputs"]["q_factors"]) sum += q["snapped"].get<std::int64_t>();
  EXPECT_EQ(sum, 18);
  EXPECT_EQ(j["outputs"]["strata"].size(), 4U);
}

TEST(Cli, CountTrivialCover) {
  const auto r = run({"count", "--m", "1", "--a", "0,0", "--b", "0,0", "--p", "5", "--t", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.record()["outputs"]["count_Y"], 2);
}

TEST(Cli, CountOverPrimeRange) {
  const auto r = run({"count", "--a", "1,0", "--b", "3,2", "--m", "4", "--q-max", "20", "--t", "3"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int records = 0;
  while (std::getline(lines, line))
    if (!line.empty()) {
      const auto j = json::parse(line);
      EXPECT_EQ(j["command"], "count");
      ++records;
    }
  EXPECT_GE(records, 4);
}

TEST(Cli, FieldElementT) {
  const auto r = run({"hsum", "--alpha", "1/4,0", "--beta", "3/4,1/2", "--p", "7", "--r", "2", "--t", "2,1"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto H = r.record()["outputs"]["H"];
  EXPECT_NEAR(H["re"].get<double>(), -3, 1e-12);
  EXPECT_NEAR(H["im"].get<double>(), -3, 1e-12);
}

TEST(Cli, GaussAndJacobi) {
  auto r = run({"jacobi", "--alpha", "1/4", "--beta", "-1/2", "--p", "13"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(r.record()["outputs"]["J"]["re"].get<double>(), -3, 1e-12);
  EXPECT_NEAR(r.record()["outputs"]["J"]["im"].get<double>(), 2, 1e-12);
  r = run({"gauss", "--alpha", "1/2", "--p", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(r.record()["outputs"]["g"]["re"].get<double>(), 2.2360679774997896, 1e-12);
}

TEST(Cli, ZetaCurve) {
  const auto r = run({"zeta", "--a", "1,0", "--b", "3,2", "--m", "4", "--p", "5", "--t", "2", "--series-order", "3"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = r.record();
  EXPECT_TRUE(j["outputs"]["series_check"].get<bool>());
  int hyper = 0, torus = 0;
  for (const auto& f : j["outputs"]["factors"]) {
    hyper += f["kind"] == "hypergeometric";
    torus += f["kind"] == "torus_twist";
  }
  EXPECT_EQ(hyper, 1);
  EXPECT_EQ(torus, 1);
}

TEST(Cli, ZetaSurfaceKinds) {
  const auto r = run({"zeta", "--a", "1,3,6", "--b", "3,7,18", "--m", "12", "--p", "13", "--t", "2", "--series-order",
                      "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  for (const auto& f : r.record()["outputs"]["factors"]) {
    const int d = f["d"];
    EXPECT_EQ(f["kind"], d == 2 || d == 4 ? "trivial" : "torus_twist") << d;
  }
}

TEST(Cli, BadPrime) {
  const auto r = run({"zeta", "--a", "1,0", "--b", "3,2", "--m", "4", "--p", "2", "--t", "3"});
  EXPECT_EQ(r.code, hgm::tools::kExitPrecondition);
  const auto j = r.record();
  EXPECT_EQ(j["error"]["kind"], "BadPrime");
  EXPECT_NE(j["error"]["message"].get<std::string>().find("2"), std::string::npos);
}

TEST(Cli, Preconditions) {
  EXPECT_EQ(run({"count", "--a", "1,0", "--b", "3,2", "--m", "4", "--p", "7", "--t", "1"}).code, 2);
  EXPECT_EQ(run({"hsum", "--alpha", "1/4", "--beta", "1/2", "--p", "7", "--t", "2"}).record()["error"]["kind"],
            "BadDenominator");
  EXPECT_EQ(run({"gauss", "--alpha", "1/2", "--p", "9"}).record()["error"]["kind"], "NotPrime");
  EXPECT_EQ(run({"count", "--a", "1,0", "--b", "3,2", "--m", "4", "--p", "7", "--t", "3", "--precision-bits", "200"})
                .code,
            2);
  EXPECT_EQ(run({"verify", "--suite", "nonexistent"}).code, 2);
  EXPECT_NE(run({"frobnicate"}).code, 0);
}

TEST(Cli, SeriesCheck) {
  const auto r = run({"series-check", "--alpha", "1/2,1/2", "--beta", "1,1"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.record();
  EXPECT_EQ(j["outputs"]["F"][1], "1/4");
  EXPECT_EQ(j["outputs"]["F"][2], "9/64");
  EXPECT_EQ(j["outputs"]["F"].size(), 25U);
}

TEST(Cli, VerifySuite) {
  const auto r = run({"verify", "--suite", "point-sum", "--q", "13"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = r.record();
  EXPECT_TRUE(j["outputs"]["passed"].get<bool>());
  EXPECT_GT(j["outputs"]["instances"].get<int>(), 0);
}

TEST(Cli, Reproducible) {
  const std::vector<std::string> args = {"count", "--a", "1,3,6", "--b", "3,7,18", "--m", "12", "--p", "13", "--t", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "hgm_cli_out.jsonl";
  const auto r = run({"gauss", "--alpha", "1/4", "--p", "13", "--out", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(json::parse(line)["command"], "gauss");
  std::remove(path.c_str());
}

TEST(Cli, Timing) {
  const auto r = run({"gauss", "--alpha", "1/4", "--p", "13", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.record()["timing"].is_object());
}

}  // namespace
