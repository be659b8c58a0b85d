#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "app.hpp"
#include "permstat/parser.hpp"
#include "permstat/patterns.hpp"

namespace permstat::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "permstat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(Cli, MomentText) {
  Outcome r = run_cli({"moment", "exc"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(first_line(r.out), "(n - m1) / 2");
  r = run_cli({"moment", "exc", "--variance", "--lambda", "3,1", "--lambda", "2,2,2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(first_line(r.out), "(n - m1 - 2*m2) / 12");
  EXPECT_NE(r.out.find("at lambda=(3,1): 1/4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("at lambda=(2,2,2): 0"), std::string::npos) << r.out;
}

TEST(Cli, MomentJsonMatchesText) {
  Outcome text = run_cli({"moment", "maj", "-d", "2"});
  Outcome json = run_cli({"moment", "maj", "-d", "2", "--json"});
  ASSERT_EQ(json.code, kOk);
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["command"], "moment");
  EXPECT_EQ(doc["statistic"], "maj");
  EXPECT_EQ(doc["d"], 2);
  for (const char* key : {"power", "shift", "size"}) EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_TRUE(doc["result"]["numerator"].contains("terms"));
  EXPECT_TRUE(doc["result"]["denominator"].is_array());
  EXPECT_EQ(doc["result"]["text"].get<std::string>(), first_line(text.out));
}

TEST(Cli, Limits) {
  Outcome mean = run_cli({"limit", "exc"});
  EXPECT_EQ(mean.code, kOk);
  EXPECT_NE(mean.out.find("f(alpha) = 1/2 - 1/2*alpha"), std::string::npos) << mean.out;
  Outcome var = run_cli({"limit", "exc", "--variance"});
  EXPECT_EQ(var.code, kOk);
  EXPECT_EQ(first_line(var.out), "p=1, V1(alpha) = 1/12 - 1/12*alpha, V2(alpha) = -1/6");
  auto doc = nlohmann::json::parse(run_cli({"limit", "N(12)", "--json"}).out);
  EXPECT_EQ(doc["result"]["f0"], "1/4");
}

TEST(Cli, Verify) {
  Outcome r = run_cli({"verify", "des", "--nmax", "5", "-d", "2"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL d="), std::string::npos);
  EXPECT_NE(r.out.find("verify: "), std::string::npos);
  EXPECT_NE(r.out.find(" 0 FAIL"), std::string::npos);
}

TEST(Cli, ExpandRoundTrips) {
  for (std::string expr : {"maj", "des*exc", "biv(132;A={1};B={2};f=x1;g=x2)"}) {
    Outcome r = run_cli({"expand", expr});
    ASSERT_EQ(r.code, kOk) << expr;
    EXPECT_EQ(parse_statistic(r.out), parse_statistic(expr)) << r.out;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"moment"}).code, kUsage);
  Outcome parse = run_cli({"moment", "exc +"});
  EXPECT_EQ(parse.code, kUsage);
  EXPECT_NE(parse.err.find("position 5"), std::string::npos) << parse.err;
  EXPECT_EQ(run_cli({"moment", "exc", "--lambda", "0,x"}).code, kUsage);
  EXPECT_EQ(run_cli({"moment", "des^2", "--lambda", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"moment", "exc", "-d", "-1"}).code, kUsage);
  EXPECT_EQ(run_cli({"moment", "exc^3", "--bell-cap", "2"}).code, kResource);
  EXPECT_EQ(run_cli({"verify", "exc", "--nmax", "9"}).code, kResource);
  EXPECT_EQ(run_cli({"limit", "exc", "--bell-cap", "40"}).code, kUsage);
}

TEST(Cli, DiskCache) {
  auto path = std::filesystem::temp_directory_path() / "permstat_cli_cache_test.json";
  std::filesystem::remove(path);
  Outcome first = run_cli({"moment", "inv", "-d", "2", "--cache", path.string()});
  ASSERT_EQ(first.code, kOk);
  EXPECT_TRUE(std::filesystem::exists(path));
  Outcome second = run_cli({"moment", "inv", "-d", "2", "--cache", path.string()});
  EXPECT_EQ(second.out, first.out);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace permstat::cli
