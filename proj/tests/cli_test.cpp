#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "becurv/edge_list.hpp"
#include "becurv/tilings.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BECURV_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(BECURV_SAMPLES) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& contents = "") {
  auto p = std::filesystem::temp_directory_path() / ("becurv_cli_test_" + name);
  if (!contents.empty()) std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST(CliCurvature, CompleteGraph) {
  const auto r = run("curvature " + sample("k4.edges") + " --vertex a");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3.000000\n");
}

TEST(CliCurvature, SingleEdge) {
  const auto r = run("curvature " + sample("edge.edges") + " --vertex a");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2.000000\n");
}

TEST(CliCurvature, VerifyReportsBothMethods) {
  const auto r = run("curvature " + sample("icosahedron.edges") + " --vertex w2 --verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("2.145898\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("schur 2.145898"), std::string::npos);
  EXPECT_NE(r.out.find("bisection 2.145898"), std::string::npos);
}

TEST(CliCurvature, JsonFormat) {
  const auto r = run("curvature " + sample("star3.edges") + " --vertex c --verify --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j.at("curvature").get<double>(), 0.0, 1e-12);
  EXPECT_EQ(j.at("method"), "schur");
  EXPECT_TRUE(j.at("agreement").get<bool>());
  EXPECT_EQ(j.at("minimizer").size(), 3u);
}

TEST(CliCurvature, DumpForms) {
  const auto prefix = temp_file("dump_");
  ASSERT_EQ(run("curvature " + sample("k4.edges") + " --vertex a --dump-forms " + prefix.string()).code, 0);
  std::ifstream in(prefix.string() + "gamma2.csv");
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "b,c,d");
  EXPECT_EQ(first.substr(0, 4), "2.5,");
}

TEST(CliCurvature, InputErrorsExitTwo) {
  EXPECT_EQ(run("curvature " + sample("k4.edges") + " --vertex z").code, 2);
  EXPECT_EQ(run("curvature /nonexistent/file --vertex a").code, 2);
  EXPECT_EQ(run("curvature " + temp_file("bad.edges", "a b\nb\n").string() + " --vertex a").code, 2);
  EXPECT_EQ(run("curvature " + temp_file("loop.edges", "a a\n").string() + " --vertex a").code, 2);
  EXPECT_EQ(run("curvature " + sample("k4.edges")).code, 2);
}

TEST(CliCurvature, UnknownVertexMessage) {
  const std::string cmd = std::string(BECURV_CLI) + " curvature " + sample("k4.edges") + " --vertex z 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 512> buf{};
  const std::string msg(buf.data(), fread(buf.data(), 1, buf.size(), pipe));
  pclose(pipe);
  EXPECT_NE(msg.find("unknown vertex"), std::string::npos) << msg;
}

TEST(CliTiling, FlatAndOrderEight) {
  const auto flat = run("tiling --order 6");
  EXPECT_EQ(flat.code, 0);
  EXPECT_NE(flat.out.find("smooth_curvature 0.000\n"), std::string::npos) << flat.out;
  EXPECT_NE(flat.out.find("discrete_curvature 0.000\n"), std::string::npos) << flat.out;

  const auto eight = run("tiling --order 8");
  EXPECT_NE(eight.out.find("smooth_curvature -2.337\n"), std::string::npos) << eight.out;
  EXPECT_NE(eight.out.find("discrete_curvature -3.243\n"), std::string::npos) << eight.out;
  EXPECT_NE(eight.out.find("space hyperbolic"), std::string::npos);

  EXPECT_EQ(run("tiling --order 2").code, 2);
}

TEST(CliTiling, EmitWritesParsableBall) {
  const auto path = temp_file("ball7.edges");
  ASSERT_EQ(run("tiling --order 7 --emit " + path.string()).code, 0);
  std::ifstream in(path);
  const auto g = becurv::read_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 29u);
  EXPECT_EQ(g.edge_count(), becurv::two_ball_of_order(7).edge_count());
}

TEST(CliBall, EmitToStdout) {
  const auto r = run("ball --order 4 --emit -");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(becurv::from_edge_list(r.out).edge_count(), 12u);
  EXPECT_EQ(run("ball --order 1 --emit -").code, 2);
}

TEST(CliTable, CsvRows) {
  const auto r = run("table --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("order,smooth_curvature,discrete_curvature\n", 0), 0u);
  EXPECT_NE(r.out.find("\n5,1.226,2.146\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n9,-3.441,-4.596\n"), std::string::npos);
}

TEST(CliTable, JsonParses) {
  const auto r = run("table --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j[0].at("order"), 3);
  EXPECT_NEAR(j[4].at("discrete_curvature").get<double>(), -1.741, 5e-4);
}

TEST(CliTable, ByteIdenticalAcrossRuns) {
  for (const char* fmt : {"text", "csv", "json"}) {
    const std::string args = std::string("table --format ") + fmt;
    EXPECT_EQ(run(args).out, run(args).out) << fmt;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("table --format xml").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
