#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "autequiv/json_io.hpp"

using namespace autequiv;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " AUTEQUIV_CLI_PATH " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string stderr_of(const std::string& args) {
  const std::string cmd = AUTEQUIV_CLI_PATH " " + args + " 2>&1 >/dev/null";
  std::string s;
  FILE* p = popen(cmd.c_str(), "r");
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) s.append(buf, got);
  pclose(p);
  return s;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("autequiv_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SpansetFromGraphFile) {
  const std::string g = write("2k2_A.json", R"({"n": 4, "edges": [[1,2],[3,4]], "loops": []})");
  const CliRun r = run("spanset --graph " + g + " --k 1 --l 1");
  ASSERT_EQ(r.code, 0);
  const Json j = parse_json_text(r.out);
  ASSERT_EQ(j["items"].size(), 3u);
  EXPECT_EQ(j["items"][2]["matrix"]["entries"],
            Json::parse("[[0,1,0,0],[1,0,0,0],[0,0,0,1],[0,0,1,0]]"));
}

TEST_F(CliTest, Dim) {
  const std::string g = write("s2_A.json", R"({"n": 3, "edges": [[1,2]], "loops": []})");
  const CliRun r = run("dim --graph " + g + " --k 2 --l 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_json_text(r.out), Json::parse(R"({"dim": 14})"));
}

TEST_F(CliTest, VerifyEdgeless) {
  const std::string g = write("kbar4.json", R"({"n": 4, "edges": [], "loops": []})");
  const CliRun r = run("verify --graph " + g + " --k 1 --l 1");
  ASSERT_EQ(r.code, 0);
  const Json j = parse_json_text(r.out);
  EXPECT_EQ(j["spanning"], true);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["dim"], 2);
  const CliRun s = run("verify --builtin C4_A --k 2 --l 1 --stream --full-group-check");
  EXPECT_EQ(s.code, 0);
}

TEST_F(CliTest, ExitCodes) {
  const std::string bad = write("bad.json", R"({"n": 3, "edges": [[1,)");
  EXPECT_EQ(run("dim --graph " + bad).code, 2);
  EXPECT_EQ(run("dim").code, 2);
  EXPECT_EQ(run("dim --builtin K4 --frobnicate").code, 2);
  EXPECT_EQ(run("nosuch").code, 2);
  EXPECT_EQ(run("dim --builtin NOPE").code, 1);
  EXPECT_EQ(run("aut --builtin Kbar12").code, 3);
  const Json err = parse_json_text(stderr_of("aut --builtin Kbar12"));
  EXPECT_EQ(err["error"], "policy");
  EXPECT_TRUE(err.contains("message"));
}

TEST_F(CliTest, WeightRoundTrip) {
  const CliRun ss = run("spanset --builtin S2_A --k 1 --l 1 --out " + path("ss.json"));
  ASSERT_EQ(ss.code, 0);
  const CliRun w = run("weight --spanset " + path("ss.json") + " --weights 1,2,3,4,5,6,7");
  ASSERT_EQ(w.code, 0);
  const SpanningSet in_process = build_spanning_set(builtin_graph("S2_A"), 1, 1);
  const std::vector<double> weights{1, 2, 3, 4, 5, 6, 7};
  const RealMatrix x = weight_matrix(in_process, weights);
  const Json j = parse_json_text(w.out);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < x.cols; ++c) EXPECT_EQ(j["entries"][r][c].get<double>(), x(r, c));
  EXPECT_EQ(run("weight --spanset " + path("ss.json") + " --weights 1,2").code, 1);
  EXPECT_EQ(run("weight --spanset " + path("ss.json") + " --weights 1,x").code, 2);
}

TEST_F(CliTest, SeededWeightsAreReproducible) {
  const CliRun a = run("weight --builtin C5 --seed 4");
  const CliRun b = run("weight --builtin C5 --seed 4");
  const CliRun c = run("weight --builtin C5 --seed 5");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, DeterministicAcrossThreadCounts) {
  const std::string args = "spanset --builtin LOOP3 --k 1 --l 2";
  const CliRun one = run(args, "OMP_NUM_THREADS=1");
  const CliRun four = run(args, "OMP_NUM_THREADS=4");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, run(args).out);
}

TEST_F(CliTest, CsvAndPrettyFormats) {
  const CliRun csv = run("spanset --builtin Kbar4 --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\n\n1,1,1,1\n1,1,1,1\n1,1,1,1\n1,1,1,1\n");
  const CliRun pretty = run("spanset --builtin S2_A --format pretty");
  EXPECT_NE(pretty.out.find("# 7"), std::string::npos);
}

TEST_F(CliTest, OtherSubcommands) {
  EXPECT_EQ(parse_json_text(run("trail --builtin C4_A").out)["m"], 4);
  EXPECT_EQ(parse_json_text(run("aut --builtin 2K2_A").out)["order"], 8);
  EXPECT_EQ(parse_json_text(run("diagrams --builtin S2_A --k 2 --l 1").out)["count"], 60);
  EXPECT_EQ(parse_json_text(run("bias --builtin 2K2_A --l 1").out)["count"], 1);
  EXPECT_EQ(parse_json_text(run("features --builtin Kbar3 --dk 2 --dl 3").out)["count"], 12);
}
