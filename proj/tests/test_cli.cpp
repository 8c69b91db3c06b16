#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(IVHINF_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string problem(const std::string& name) { return std::string(IVHINF_PROBLEMS_DIR) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ivhinf_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_F(Cli, VerticesOfDegreeTwoBox) {
  const std::string f = write("box.json", R"({"numerator": [[1,1]], "denominator": [[1,2],[3,4],[5,6]]})");
  const RunResult r = run("vertices " + f);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f11: [1, 3, 6]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("f12: [1, 4, 6]"), std::string::npos);
  EXPECT_NE(r.out.find("f21: [2, 3, 5]"), std::string::npos);
  EXPECT_NE(r.out.find("f22: [2, 4, 5]"), std::string::npos);

  const RunResult m = run("vertices --format machine " + f);
  ASSERT_EQ(m.code, 0);
  const auto doc = nlohmann::json::parse(m.out);
  EXPECT_EQ(doc["denominator"]["21"], nlohmann::json({2.0, 3.0, 5.0}));
}

TEST_F(Cli, VerticesOfPointFamily) {
  const RunResult r = run("vertices " + problem("worked_point_plant.json"));
  ASSERT_EQ(r.code, 0);
  for (const char* key : {"f11", "f12", "f21", "f22"})
    EXPECT_NE(r.out.find(std::string(key) + ": [0, 1, 1]"), std::string::npos) << key;
}

TEST_F(Cli, MalformedBoundsExitTwo) {
  const std::string f = write("bad.json", R"({"numerator": [[1,1]], "denominator": [[1,1],[3,2]]})");
  EXPECT_EQ(run("vertices " + f).code, 2);
  EXPECT_EQ(run("analyze " + f).code, 2);
  EXPECT_EQ(run("analyze /nonexistent.json").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
}

TEST_F(Cli, AnalyzeWorkedExample) {
  const std::string out = (dir_ / "report.json").string();
  const RunResult r = run("analyze --seed 42 --output " + out + " " + problem("worked_point_plant.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("worst-case sensitivity norm: 1.46788983"), std::string::npos) << r.out;
  std::ifstream in(out);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_NEAR(doc["twelve"]["worst_norm"].get<double>(), 1.4678900, 1e-6);
  EXPECT_EQ(doc["options"]["seed"].get<int>(), 42);
}

TEST_F(Cli, AnalyzeUnstableExitThree) {
  const RunResult r = run("analyze " + problem("unstable_family.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("closed-loop family stable: no"), std::string::npos);
  EXPECT_EQ(r.out.find("worst-case"), std::string::npos);
  EXPECT_EQ(run("oracle " + problem("unstable_family.json")).code, 3);
}

TEST_F(Cli, AnalyzeRepeatable) {
  const std::string args = "analyze --seed 42 --samples 300 " + problem("widened_stable_family.json");
  const RunResult a = run(args);
  const RunResult b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, Norm) {
  const RunResult r = run("norm --num 0,1,1 --den 1,1,1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("norm: 1.46788983"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("omega = 1.16877"), std::string::npos);
  EXPECT_NE(r.out.find("grid check: 1.4678898"), std::string::npos);

  const RunResult same = run("norm --num 1,2,1 --den 1,2,1 --grid-points 1000");
  EXPECT_NE(same.out.find("norm: 1\n"), std::string::npos) << same.out;
  EXPECT_NE(same.out.find("omega = 0\n"), std::string::npos);

  const RunResult inf = run("norm --num 1,1 --den 2,1 --grid-points 1000");
  EXPECT_NE(inf.out.find("attained at: infinity"), std::string::npos) << inf.out;

  const RunResult file = run("norm --grid-points 1000 " + problem("worked_point_plant.json"));
  EXPECT_EQ(file.code, 0);
  EXPECT_NE(file.out.find("norm: 1.46788983"), std::string::npos);

  EXPECT_EQ(run("norm --num 1 --den -1,1").code, 3);
  EXPECT_EQ(run("norm --num 1,x --den 1,1").code, 2);
  EXPECT_EQ(run("norm " + problem("widened_stable_family.json")).code, 2);

  const std::string unstable = write("u.json", R"({"numerator": [1], "denominator": [0, -1, 1]})");
  EXPECT_EQ(run("norm " + unstable).code, 3);
}

TEST_F(Cli, ValueSet) {
  const RunResult one = run("valueset --delta 0.5 --theta 1 --omega 1 " + problem("worked_point_plant.json"));
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(count_lines(one.out), 2u) << one.out;
  EXPECT_EQ(one.out.rfind("omega,vertex_index,re,im,provenance\n", 0), 0u);

  const RunResult flat = run("valueset --delta 0.5 --theta 0 --omega 1 " + problem("widened_stable_family.json"));
  ASSERT_EQ(flat.code, 0);
  EXPECT_LE(count_lines(flat.out), 5u);

  const RunResult sweep = run("valueset --delta 0.5 --theta 0.3 --sweep 10:7 " + problem("worked_point_plant.json"));
  ASSERT_EQ(sweep.code, 0);
  EXPECT_EQ(count_lines(sweep.out), 8u);
  EXPECT_NE(sweep.out.find(",margin\n"), std::string::npos);

  const RunResult wide = run("valueset --delta 0.5 --theta 0.3 --sweep 10:5 " + problem("widened_stable_family.json"));
  ASSERT_EQ(wide.code, 0);
  // The middle sweep point is omega = 0, where the hull degenerates to a parallelogram.
  EXPECT_EQ(count_lines(wide.out), 1u + 4u * 8u + 4u) << wide.out;

  EXPECT_EQ(run("valueset --delta 1.5 --omega 1 " + problem("worked_point_plant.json")).code, 2);
  EXPECT_EQ(run("valueset --delta 0.5 " + problem("worked_point_plant.json")).code, 2);
  EXPECT_EQ(run("valueset --delta 0.5 --sweep 10 " + problem("worked_point_plant.json")).code, 2);
}

TEST_F(Cli, Oracle) {
  const RunResult r = run("oracle --samples 0 --seed 3 " + problem("widened_stable_family.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta oracle - twelve: 0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("injected 48"), std::string::npos);

  const RunResult m = run("oracle --format machine --samples 100 --seed 3 " + problem("widened_stable_family.json"));
  ASSERT_EQ(m.code, 0);
  const auto doc = nlohmann::json::parse(m.out);
  EXPECT_GE(doc["delta"].get<double>(), -1e-12);
  EXPECT_EQ(run("oracle --format machine --samples 100 --seed 3 " + problem("widened_stable_family.json")).out, m.out);
}
