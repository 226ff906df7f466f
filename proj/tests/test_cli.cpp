#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using dyckframe::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dyckframe");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("DYCKFRAME_ALLOW_LARGE"); }
};

}  // namespace

TEST_F(Cli, FeetTableCsvMatchesGolden) {
  const auto r = invoke({"feet-table", "--max", "6", "--level", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string golden = std::string(DYCKFRAME_GOLDEN_DIR) + "/feet_table_level0_max6.csv";
  if (std::getenv("DYCKFRAME_REGENERATE_GOLDEN")) std::ofstream(golden) << r.out;
  EXPECT_EQ(r.out, read_file(golden));

  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], "steps,1-ped,2-ped,3-ped,4-ped,5-ped,6-ped");
  EXPECT_EQ(rows[1], "0,1,0,0,0,0,0");
  EXPECT_EQ(rows[6], "10,0,14,14,9,4,1");
  EXPECT_EQ(rows[7], "12,0,42,42,28,14,5");
}

TEST_F(Cli, FeetTableOtherFormats) {
  const auto full = invoke({"feet-table", "--max", "3", "--full", "--format", "csv"});
  ASSERT_EQ(full.code, 0);
  EXPECT_EQ(lines(full.out).back(), "6,0,2,2,1");
  const auto level = invoke({"feet-table", "--max", "2", "--level", "1", "--format", "csv"});
  ASSERT_EQ(level.code, 0);
  EXPECT_EQ(lines(level.out)[0], "steps,0-ped,1-ped,2-ped");
  EXPECT_EQ(lines(level.out)[3], "4,0,0,2");
  const auto doc = json::parse(invoke({"feet-table", "--max", "6", "--format", "json"}).out);
  EXPECT_EQ(doc["rows"][6]["counts"][1], "42");
  EXPECT_EQ(invoke({"feet-table", "--max", "61"}).code, 3);
  EXPECT_EQ(invoke({"--allow-large", "feet-table", "--max", "61", "--format", "csv"}).code, 0);
}

TEST_F(Cli, FrameReport) {
  const auto doc = json::parse(invoke({"frame", "3,4,3,1", "--format", "json"}).out);
  EXPECT_EQ(doc["admissible"], true);
  EXPECT_EQ(doc["cardinality"], "6");
  EXPECT_EQ(doc["canonical"], "UUUDDUDDUD");
  EXPECT_EQ(doc["v"], json::array({2, 2, 1}));

  EXPECT_EQ(json::parse(invoke({"frame", "--frame", "5,8,7,3", "--format", "json"}).out)["cardinality"], "700");
  const auto bad = invoke({"frame", "4,5,2,3,1", "--format", "json"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(json::parse(bad.out)["admissible"], false);

  const auto csv = lines(invoke({"frame", "3,6,6,3,1", "--format", "csv"}).out);
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "frame,admissible,length,degree,cardinality,canonical,v");
  EXPECT_EQ(csv[1], "3;6;6;3;1,true,18,4,100,UUUUDDUDDUDUDUDDUD,2;4;2;1");
}

TEST_F(Cli, CountKinds) {
  auto count = [](std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = invoke(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out)["count"].get<std::string>();
  };
  EXPECT_EQ(count({"count", "dyck", "--n", "3"}), "5");
  EXPECT_EQ(count({"count", "motzkin", "--n", "6"}), "51");
  EXPECT_EQ(count({"count", "k-motzkin", "--n", "3", "--k", "0"}), "3");
  EXPECT_EQ(count({"count", "k-motzkin", "--n", "5", "--k", "0", "--colors-h", "2"}), "74");
  EXPECT_EQ(count({"count", "motzkin", "--n", "4", "--colors-h", "2,1,0"}), "35");
  EXPECT_EQ(count({"count", "dyck", "--n", "2", "--colors-u", "2,1", "--colors-d", "1,1"}), "6");
  EXPECT_EQ(count({"count", "dyck", "--n", "40"}), "2622127042276492108820");
}

TEST_F(Cli, EnumerateWithFrameFilter) {
  const auto r = invoke({"enumerate", "dyck", "--n", "5", "--frame", "3,4,3,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 6u);
  const auto doc = json::parse(invoke({"enumerate", "dyck", "--n", "2", "--show-frame", "--format", "json"}).out);
  EXPECT_EQ(doc["count"], 2);
  EXPECT_EQ(doc["paths"][0]["path"], "UUDD");
  EXPECT_EQ(doc["paths"][0]["frame"], json::array({2, 2, 1}));
  EXPECT_EQ(lines(invoke({"enumerate", "k-motzkin", "--n", "3", "--k", "0"}).out),
            (std::vector<std::string>{"UDH", "HUD", "HHH"}));
}

TEST_F(Cli, VerifyPassesAndDetectsFaults) {
  const auto ok = invoke({"verify", "--max", "5", "--format", "json"});
  EXPECT_EQ(ok.code, 0);
  const auto doc = json::parse(ok.out);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_GT(doc["summary"]["total"].get<int>(), 100);
  EXPECT_EQ(invoke({"verify", "--max", "4", "--inject-fault"}).code, 1);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"frame", "3,x"}).code, 2);
  EXPECT_EQ(invoke({"count", "dyck"}).code, 2);
  EXPECT_EQ(invoke({"count", "trees", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"count", "k-motzkin", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "count", "dyck", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"count", "motzkin", "--n", "4", "--colors-h", "1,1"}).code, 2);
  EXPECT_EQ(invoke({"enumerate", "dyck", "--n", "20"}).code, 3);
  EXPECT_EQ(invoke({"count", "motzkin", "--n", "42"}).code, 3);
  EXPECT_EQ(invoke({"verify", "--max", "17"}).code, 3);
}

TEST_F(Cli, EnvironmentLiftsCaps) {
  setenv("DYCKFRAME_ALLOW_LARGE", "1", 1);
  EXPECT_EQ(invoke({"count", "motzkin", "--n", "42", "--format", "csv"}).code, 0);
  unsetenv("DYCKFRAME_ALLOW_LARGE");
}

TEST_F(Cli, Deterministic) {
  for (const auto& args : {std::vector<std::string>{"verify", "--max", "3", "--format", "json"},
                                              std::vector<std::string>{"enumerate", "motzkin", "--n", "6"},
                                              std::vector<std::string>{"feet-table", "--max", "8", "--level", "2"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}
