#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sdc/cli.hpp"
#include "sdc/dsl_io.hpp"
#include "support/fixtures.hpp"

using namespace sdc;
using sdc::testing::fixture_path;
using sdc::testing::read_fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sdc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliTest, WalkThroughTheSchool) {
  const auto r = run({"walk", fixture_path("school.json"), "--msgs",
                      "GoInside,EnterGym,TakeEmergencyExit"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "Outside\n"
            "GoInside -> Hallway\n"
            "EnterGym -> Gym\n"
            "TakeEmergencyExit -> Outside\n");
}

TEST(CliTest, WalkJson) {
  const auto r = run({"walk", fixture_path("school.sd"), "--msgs", "GoInside,GoInside",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["start"], "Outside");
  EXPECT_EQ(j["final"], "Hallway");
  EXPECT_EQ(j["trace"].size(), 2u);
}

TEST(CliTest, WalkUnknownMessage) {
  const auto r = run({"walk", fixture_path("school.json"), "--msgs", "Fly"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Fly"), std::string::npos);
}

TEST(CliTest, ValidateBrokenFile) {
  const auto r = run({"validate", fixture_path("broken.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("StateTransitionNameClash"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, ValidateGoodFile) {
  const auto r = run({"validate", fixture_path("school.sd")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4 states, 7 transitions"), std::string::npos);
}

TEST(CliTest, InputFormatOverride) {
  const auto tmp = std::filesystem::temp_directory_path() / "sdc_cli_school.txt";
  {
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    const auto text = read_fixture("school.sd");
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  EXPECT_EQ(run({"validate", tmp.string()}).code, 1);  // read as JSON
  EXPECT_EQ(run({"validate", tmp.string(), "--input-format", "sd"}).code, 0);
  std::filesystem::remove(tmp);
}

TEST(CliTest, SyntaxErrorsNameTheLine) {
  const auto tmp = std::filesystem::temp_directory_path() / "sdc_cli_bad.sd";
  {
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    const std::string text = "state A @start\nthis is not valid\n";
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  const auto r = run({"validate", tmp.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(tmp.string() + ":2:"), std::string::npos) << r.err;
  std::filesystem::remove(tmp);
}

TEST(CliTest, StatsFormats) {
  auto r = run({"stats", fixture_path("school.sd"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n_states"], 4);
  EXPECT_EQ(j["n_transitions"], 7);
  EXPECT_EQ(j["n_reachable"], 4);
  r = run({"stats", fixture_path("school.sd")});
  EXPECT_NE(r.out.find("reachable     4"), std::string::npos);
}

TEST(CliTest, GenToStdoutAndFile) {
  auto r = run({"gen", fixture_path("school.sd")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_fixture("school.golden"));

  const auto tmp = std::filesystem::temp_directory_path() / "sdc_cli_school.elm";
  r = run({"gen", fixture_path("school.json"), "--out", tmp.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), read_fixture("school.golden"));
  std::filesystem::remove(tmp);
}

TEST(CliTest, Dot) {
  const auto r = run({"dot", fixture_path("school.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"Outside\" [style=filled, fillcolor=green];"), std::string::npos);
}

TEST(CliTest, SimulateIsDeterministic) {
  const std::vector<std::string> args{"simulate", "--states", "11", "--transitions", "13",
                                      "--samples", "500", "--seed", "4"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run(args).out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["histogram"].size(), 11u);
  EXPECT_EQ(j["n_samples"], 500);

  auto chart = args;
  chart.push_back("--chart");
  EXPECT_NE(run(chart).out.find(" 11 "), std::string::npos);
}

TEST(CliTest, SimulateRejectsImpossibleEdgeCount) {
  const auto r = run({"simulate", "--states", "3", "--transitions", "7"});
  EXPECT_EQ(r.code, 2);
}

TEST(CliTest, AdTestDefaultsRejectTheNull) {
  const auto r = run({"ad-test", "--null", "10000", "--seed", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["p_value"].get<double>(), 0.005);
  EXPECT_EQ(j["u_values"].size(), 5u);
  EXPECT_EQ(j["n_pmf_samples"], 4000);
}

TEST(CliTest, AdTestCustomObservations) {
  const auto r = run({"ad-test", "--obs", "11,13,11", "--obs", "11,21,11", "--null", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["u_values"].size(), 2u);
  EXPECT_EQ(run({"ad-test", "--obs", "11,13"}).code, 2);
  EXPECT_EQ(run({"ad-test", "--obs", "3,2,4"}).code, 2);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"validate"}).code, 2);
  EXPECT_EQ(run({"validate", "/no/such/file.json"}).code, 2);
  EXPECT_EQ(run({"stats", fixture_path("school.sd"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTest, ParseObservation) {
  EXPECT_EQ(parse_observation("11,13,10"), (Observation{11, 13, 10}));
  EXPECT_THROW(parse_observation("11,13"), std::invalid_argument);
  EXPECT_THROW(parse_observation("11,13,10,1"), std::invalid_argument);
  EXPECT_THROW(parse_observation("a,b,c"), std::invalid_argument);
}
