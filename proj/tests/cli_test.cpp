#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "cli/commands.hpp"

namespace raag::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RAAG_TEST_DATA_DIR) + "/" + name; }

TEST(CliSplit, StarReportsAmalgamAtCenter) {
  const auto r = run_cli({"split", data("gamma1.txt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "{\"free_split\":false,\"z_split\":\"yes\",\"witness\":{\"kind\":\"amalgam\",\"gamma1\":[\"c\",\"l1\"],"
            "\"gamma2\":[\"c\",\"l2\",\"l3\"],\"v\":\"c\"}}\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliSplit, TriangleCover) {
  const auto r = run_cli({"split", data("triangle.txt")});
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["z_split"], "no");
  EXPECT_EQ(j["witness"]["cover"].size(), 3u);
}

TEST(CliSplit, EdgeIsSmallCase) {
  const auto r = run_cli({"split", "-"}, "a b\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "{\"free_split\":false,\"z_split\":\"hnn_small_case\",\"witness\":{\"kind\":\"small_case\",\"tag\":"
            "\"Z^2\"}}\n");
}

TEST(CliSplit, FreePartitionWhenDisconnected) {
  const auto r = run_cli({"split"}, "a b\nc\n");
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["free_split"], true);
  EXPECT_EQ(j["free_partition"], json::parse(R"([["a","b"],["c"]])"));
}

TEST(CliSplit, ExitCodes) {
  EXPECT_EQ(run_cli({"split"}, "a b c\n").code, kParseError);
  EXPECT_EQ(run_cli({"split"}, "a a\n").code, kParseError);
  EXPECT_EQ(run_cli({"split", data("no-such-file.txt")}).code, kParseError);
  EXPECT_EQ(run_cli({"split"}, "# nothing\n").code, kEmptyGraph);
  const auto r = run_cli({"split"}, "ok\nbad!\n");
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSplit, Graph6Input) {
  const auto r = run_cli({"split", "--g6"}, "Bw\n");
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(json::parse(r.out)["z_split"], "no");
}

TEST(CliJsj, Gamma2ThreeVertexAmalgam) {
  const auto r = run_cli({"jsj", "--stage=j", data("gamma2.txt")});
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["vertices"].size(), 3u);
  ASSERT_EQ(j["edges"].size(), 2u);
  std::vector<std::string> groups;
  for (const auto& v : j["vertices"]) {
    EXPECT_EQ(v["color"], "white");
    std::string label = v["group"]["kind"].get<std::string>() + ":";
    for (const auto& x : v["group"]["vertices"]) label += x.get<std::string>();
    groups.push_back(label);
  }
  EXPECT_EQ(groups, (std::vector<std::string>{"raag:abc", "raag:cd", "raag:def"}));
  EXPECT_EQ(j["edges"][0]["group_vertex"], "c");
  EXPECT_EQ(j["edges"][1]["group_vertex"], "d");
}

TEST(CliJsj, Gamma1StageJ0) {
  const auto r = run_cli({"jsj", "--stage=j0", data("gamma1.txt")});
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 4u);
  std::size_t loops = 0;
  std::size_t tree = 0;
  for (const auto& e : j["edges"]) (e["loop"].get<bool>() ? loops : tree) += 1;
  EXPECT_EQ(tree, 3u);
  EXPECT_EQ(loops, 3u);
}

TEST(CliJsj, SchemaKeys) {
  const auto j = json::parse(run_cli({"jsj", data("p3.txt")}).out);
  for (const auto& v : j["vertices"]) {
    for (const auto* key : {"id", "color", "group", "hanging", "toral"}) EXPECT_TRUE(v.contains(key)) << key;
    EXPECT_TRUE(v["group"].contains("kind"));
    EXPECT_TRUE(v["group"].contains("vertices"));
  }
  for (const auto& e : j["edges"]) {
    for (const auto* key : {"id", "ends", "group_vertex", "loop", "stable_letter"}) EXPECT_TRUE(e.contains(key)) << key;
  }
}

TEST(CliJsj, PreconditionExitCode) {
  const auto r = run_cli({"jsj"}, "a b\n");
  EXPECT_EQ(r.code, kJsjPrecondition);
  EXPECT_NE(r.err.find("at least three vertices"), std::string::npos);
  EXPECT_EQ(run_cli({"jsj"}, "a b\nb c\nx y\n").code, kJsjPrecondition);
  EXPECT_EQ(run_cli({"check"}, "a b\n").code, kJsjPrecondition);
}

TEST(CliJsj, DotOutput) {
  const auto r = run_cli({"jsj", "--stage=j0", "--format=dot", data("gamma2.txt")});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("graph jsj {", 0), 0u);
  EXPECT_NE(r.out.find("fillcolor=black"), std::string::npos);
  EXPECT_NE(r.out.find("\"b0\" -- \"w0\" [label=\"c\"];"), std::string::npos);

  const auto loops = run_cli({"jsj", "--format=dot", data("gamma1.txt")});
  EXPECT_NE(loops.out.find("\"w0\" -- \"w0\" [label=\"l1\"];"), std::string::npos);
}

TEST(CliExportDot, GraphAndStages) {
  const auto g = run_cli({"export-dot", "--stage=graph", data("p3.txt")});
  ASSERT_EQ(g.code, kOk);
  EXPECT_NE(g.out.find("\"b\" [shape=circle, style=filled, fillcolor=black"), std::string::npos);
  EXPECT_EQ(run_cli({"export-dot", data("gamma2.txt")}).out, run_cli({"jsj", "--format=dot", data("gamma2.txt")}).out);
}

TEST(CliCheck, FixturesPass) {
  auto r = run_cli({"check", data("gamma2.txt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("reduced: pass"), std::string::npos);
  EXPECT_NE(r.out.find("euler: pass"), std::string::npos);
  EXPECT_NE(r.out.find("coverage: pass"), std::string::npos);
  EXPECT_NE(r.out.find("abelianization: pass (6,[])"), std::string::npos);

  r = run_cli({"check", data("gamma1.txt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("abelianization: pass (4,[])"), std::string::npos);

  r = run_cli({"check", data("triangle.txt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliCensus, SmallOrders) {
  auto r = run_cli({"census", "--n", "3"});
  ASSERT_EQ(r.code, kOk);
  auto j = json::parse(r.out);
  EXPECT_EQ(j[0]["connected"], 4);
  EXPECT_EQ(j[0]["biconnected"], 1);
  EXPECT_EQ(j[0]["splits_over_Z"], 3);
  EXPECT_EQ(j[0]["oracle_agrees"], true);

  r = run_cli({"census", "--n=4"});
  j = json::parse(r.out);
  EXPECT_EQ(j[0]["connected"], 38);
  EXPECT_EQ(j[0]["biconnected"], 10);
  EXPECT_EQ(j[0]["splits_over_Z"], 28);
}

TEST(CliCensus, RangeErrors) {
  EXPECT_EQ(run_cli({"census", "--n", "7"}).code, kCensusRange);
  EXPECT_EQ(run_cli({"census", "--n", "2"}).code, kCensusRange);
  EXPECT_EQ(run_cli({"census", "--max-n", "9"}).code, kCensusRange);
}

TEST(CliCensus, DisconnectedStream) {
  // Empty graph on three vertices and a single edge plus an isolated vertex.
  const auto r = run_cli({"census", "--g6", "--n", "3"}, "B?\nB_\n");
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["graphs"], 2);
  EXPECT_EQ(j[0]["connected"], 0);
  EXPECT_TRUE(j[0]["jsj_edge_histogram"].empty());
}

TEST(CliCensus, TableFormat) {
  const auto r = run_cli({"census", "--max-n", "4", "--format", "table"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("  4        64         38      28           10      ok"), std::string::npos) << r.out;
}

TEST(CliWitness, Examples) {
  auto j = json::parse(run_cli({"witness", data("c4.txt")}).out);
  EXPECT_EQ(j["witness"]["cover"].size(), 4u);
  EXPECT_EQ(j["verified"], true);

  j = json::parse(run_cli({"witness", data("gamma2.txt")}).out);
  EXPECT_EQ(j["witness"]["kind"], "amalgam");
  EXPECT_EQ(j["witness"]["v"], "c");
  EXPECT_EQ(j["verified"], true);

  j = json::parse(run_cli({"witness", data("p3.txt")}).out);
  EXPECT_EQ(j["witness"]["v"], "b");
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, OutputIsByteStable) {
  for (const auto* cmd : {"split", "jsj", "witness", "check"}) {
    EXPECT_EQ(run_cli({cmd, data("gamma2.txt")}).out, run_cli({cmd, data("gamma2.txt")}).out);
  }
  // Declaration order does not matter.
  EXPECT_EQ(run_cli({"jsj"}, "d f\ne f\nd e\nc d\na c\nb c\na b\n").out, run_cli({"jsj", data("gamma2.txt")}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kFailure);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kFailure);
  EXPECT_EQ(run_cli({"jsj", "--stage=j2"}).code, kFailure);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

}  // namespace
}  // namespace raag::cli
