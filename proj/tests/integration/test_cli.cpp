#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "dioph/cli/run.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dioph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dioph::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("dioph_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << text;
  return path;
}

const std::string kExampleConfig = std::string(DIOPH_SOURCE_DIR) + "/configs/published_example.toml";

}  // namespace

TEST(Cli, S0PublishedExample) {
  const auto r = run_cli({"s0", "--config", kExampleConfig});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["s0_ours"], 120);
  EXPECT_EQ(j["s0_liwang"], 4120);
  EXPECT_EQ(j["paper_constants"]["C"], "10.0219168340");
  EXPECT_EQ(j["paper_constants"]["nu"], "0.8844472132");
  EXPECT_TRUE(j["system"]["eta_warning"].get<bool>());
}

TEST(Cli, FlagsOverrideConfig) {
  const auto r = run_cli({"s0", "--config", kExampleConfig, "--eta", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["s0_ours"], 126);
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"s0", "--config", kExampleConfig},
           {"search", "--config", kExampleConfig, "--X", "3000"},
           {"constants", "--precision", "30"},
           {"selberg", "--X", "2000", "--h", "10", "100"}}) {
    const auto r = run_cli(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out) << args[0];
  }
}

TEST(Cli, SearchIsDeterministic) {
  const std::vector<std::string> args{"search", "--config", kExampleConfig, "--X", "5000", "--s", "2", "--workers", "1"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SearchEmptyRange) {
  const auto r = run_cli({"search", "--config", kExampleConfig, "--X", "3.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 0);
  EXPECT_NE(std::find(j["flags"].begin(), j["flags"].end(), "empty-range"), j["flags"].end());
}

TEST(Cli, SearchCsvStreamsEveryRecord) {
  const auto json_run = run_cli({"search", "--config", kExampleConfig, "--X", "3000", "--sample", "0"});
  const auto csv_run = run_cli({"search", "--config", kExampleConfig, "--X", "3000", "--format", "csv"});
  ASSERT_EQ(csv_run.code, 0) << csv_run.err;
  const auto count = json::parse(json_run.out)["count"].get<std::size_t>();
  EXPECT_GT(count, 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv_run.out.begin(), csv_run.out.end(), '\n')), count + 1);
  EXPECT_EQ(csv_run.out.rfind("p1,p2,p3,m,form_value,weight\n", 0), 0u);
}

TEST(Cli, WritesToOutPath) {
  const auto path = fs::temp_directory_path() / ("dioph_cli_out_" + std::to_string(::getpid()) + ".json");
  const auto r = run_cli({"s0", "--config", kExampleConfig, "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = json::parse(in);
  EXPECT_EQ(j["s0_ours"], 120);
  fs::remove(path);
}

TEST(Cli, UnknownKeyIsRejectedWithLine) {
  const auto path = write_temp("unknown.toml", "[lambda]\nvalues = [\"-1\", \"1\", \"1\"]\n\n[run]\nbogus = 3\n");
  const auto r = run_cli({"s0", "--config", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":5: unknown key 'bogus'"), std::string::npos) << r.err;
  fs::remove(path);
}

TEST(Cli, UnknownSectionAndMalformedToml) {
  auto path = write_temp("section.toml", "# comment\n[lambdas]\nvalues = 1\n");
  auto r = run_cli({"s0", "--config", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":2: unknown section [lambdas]"), std::string::npos) << r.err;
  fs::remove(path);

  path = write_temp("broken.toml", "[run]\neta = \"1\"\n[lambda\n");
  r = run_cli({"s0", "--config", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;
  fs::remove(path);
}

TEST(Cli, ValidationFailuresExitOne) {
  EXPECT_EQ(run_cli({"s0"}).code, 1);
  EXPECT_EQ(run_cli({"s0", "--lambda", "1", "2", "3"}).code, 1);
  EXPECT_EQ(run_cli({"s0", "--config", kExampleConfig, "--format", "xml"}).code, 1);
  EXPECT_EQ(run_cli({"s0", "--config", kExampleConfig, "--precision", "20"}).code, 1);
  EXPECT_EQ(run_cli({"search", "--lambda", "-1", "1", "1"}).code, 1);
  EXPECT_EQ(run_cli({"nonsense"}).code, 1);
}

TEST(Cli, VerifySubset) {
  const auto r = run_cli({"verify", "--only", "1", "2", "11", "--format", "text"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("outcome: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("outcome: EXCLUDED"), std::string::npos);
}

TEST(Cli, MeasureSweepHasNegativeSlope) {
  const auto r = run_cli({"measure"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["sweep"].size(), 5u);
  EXPECT_LT(j["log2_measure_slope"].get<double>(), 0.0);
}
