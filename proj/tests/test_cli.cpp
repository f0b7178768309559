#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "pocket/commands.hpp"

using namespace pocket;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pocket_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  RunConfig spec(const std::string& f, const std::string& h1, const std::optional<std::string>& h2) {
    RunConfig cfg;
    cfg.f = write("f.txt", f);
    cfg.h1 = write("h1.txt", h1);
    if (h2) cfg.h2 = write("h2.txt", *h2);
    return cfg;
  }

  struct Result {
    int status;
    std::string out;
    std::string err;
  };

  Result run(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int status = run_command(cfg, out, err);
    return {status, out.str(), err.str()};
  }

  fs::path dir_;
};

const std::string k1 = "1 0\n";
const std::string k2 = "2 1\n0 1\n";

int run_binary(const std::string& args) {
  const std::string cmd = std::string(POCKET_KIRCH_BIN) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_F(Cli, BuildP3) {
  RunConfig cfg = spec(k1, k1, k1);
  cfg.command = "build";
  const Result r = run(cfg);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "3 2\n0 1\n1 2\n");
}

TEST_F(Cli, BuildP4) {
  RunConfig cfg = spec(k2, k1, std::nullopt);
  cfg.command = "build";
  cfg.attach = std::vector<Vertex>{0, 1};
  const Result r = run(cfg);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "4 3\n0 1\n0 2\n1 3\n");
}

TEST_F(Cli, BuildDuplicateAttachFails) {
  RunConfig cfg = spec(k2, k1, std::nullopt);
  cfg.command = "build";
  cfg.attach = std::vector<Vertex>{0, 0};
  const Result r = run(cfg);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("duplicate"), std::string::npos) << r.err;
}

TEST_F(Cli, BuildWritesGraphAndLayout) {
  RunConfig cfg = spec(k1, k1, k1);
  cfg.command = "build";
  cfg.format = OutputFormat::Json;
  cfg.out = dir_ / "p3.json";
  ASSERT_EQ(run(cfg).status, 0);
  const auto graph = nlohmann::json::parse(std::ifstream(dir_ / "p3.json"));
  EXPECT_EQ(graph.at("order"), 3);
  const auto layout = nlohmann::json::parse(std::ifstream(dir_ / "p3.json.layout.json"));
  EXPECT_EQ(layout.at("total_order"), 3);
  EXPECT_EQ(layout.at("vertices")[1].at("block"), "H1");
}

TEST_F(Cli, BuildFromWholePocket) {
  RunConfig cfg;
  cfg.command = "build";
  cfg.f = write("f.txt", k1);
  cfg.hv = write("hv.txt", "3 2\n0 1\n1 2\n");
  cfg.v_id = 0;
  const Result r = run(cfg);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "3 2\n0 1\n1 2\n");

  cfg.hv = write("hv4.txt", "4 3\n0 1\n1 2\n2 3\n");
  const Result bad = run(cfg);
  EXPECT_NE(bad.status, 0);
  EXPECT_NE(bad.err.find("structure"), std::string::npos) << bad.err;
}

TEST_F(Cli, BuildDisconnectedF) {
  RunConfig cfg = spec("2 0\n", k1, std::nullopt);
  cfg.command = "build";
  const Result r = run(cfg);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("disconnected"), std::string::npos);
}

TEST_F(Cli, ResistP3) {
  RunConfig cfg = spec(k1, k1, k1);
  cfg.command = "resist";
  const Result r = run(cfg);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "u,v,r\n0,1,1\n0,2,2\n1,2,1\n# kf=4\n");
  cfg.oracle = true;
  EXPECT_EQ(run(cfg).out, r.out);
}

TEST_F(Cli, ResistBackendsAgree) {
  RunConfig cfg = spec("4 4\n0 1\n1 2\n2 3\n3 0\n", "2 1\n0 1\n", "3 1\n0 2\n");
  cfg.command = "resist";
  cfg.format = OutputFormat::Json;
  const auto structured = nlohmann::json::parse(run(cfg).out);
  cfg.oracle = true;
  const auto oracle = nlohmann::json::parse(run(cfg).out);
  EXPECT_EQ(structured.at("backend"), "all_attached");
  EXPECT_EQ(oracle.at("backend"), "oracle");
  const auto& a = structured.at("resistance");
  const auto& b = oracle.at("resistance");
  ASSERT_EQ(a.size(), 4u + 4u * 5u);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      EXPECT_NEAR(a[i][j].get<double>(), b[i][j].get<double>(), 1e-9);
  EXPECT_NEAR(structured.at("kf").get<double>(), oracle.at("kf").get<double>(), 1e-8);
}

TEST_F(Cli, ResistTable) {
  RunConfig cfg = spec(k2, k1, std::nullopt);
  cfg.command = "resist";
  cfg.format = OutputFormat::Table;
  const Result r = run(cfg);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Kf = 10"), std::string::npos) << r.out;
}

TEST_F(Cli, ResistRejectsEmptyPocket) {
  RunConfig cfg = spec(k1, "0 0\n", std::nullopt);
  cfg.command = "resist";
  EXPECT_NE(run(cfg).status, 0);
}

TEST_F(Cli, ResistNonJoinNeedsAllAttached) {
  RunConfig cfg = spec("4 3\n0 1\n1 2\n2 3\n", k1, std::nullopt);
  cfg.command = "resist";
  cfg.attach = std::vector<Vertex>{0};
  EXPECT_NE(run(cfg).status, 0);
  cfg.oracle = true;
  EXPECT_EQ(run(cfg).status, 0);
}

TEST_F(Cli, VerifyDefault) {
  RunConfig cfg;
  cfg.command = "verify";
  const Result r = run(cfg);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report.at("structured_pass"), true);
  EXPECT_EQ(report.at("all_cases_covered"), true);
  const auto& p3 = report.at("instances")[0];
  EXPECT_EQ(p3.at("instance").at("label"), "P3");
  bool flagged = false;
  for (const auto& q : p3.at("quantities"))
    if (q.at("id") == "kf") flagged = q.at("printed") == 1.5 && q.at("oracle") == 4.0 && q.at("printed_pass") == false;
  EXPECT_TRUE(flagged);
}

TEST_F(Cli, VerifyIsByteStable) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.max_n = 6;
  cfg.seed = 42;
  cfg.out = dir_ / "a.json";
  ASSERT_EQ(run(cfg).status, 0);
  cfg.out = dir_ / "b.json";
  ASSERT_EQ(run(cfg).status, 0);
  std::ifstream a(dir_ / "a.json"), b(dir_ / "b.json");
  const std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
}

TEST_F(Cli, VerifySeedChangesSweep) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.count = 4;
  const std::string a = run(cfg).out;
  cfg.seed = 43;
  EXPECT_NE(run(cfg).out, a);
}

TEST_F(Cli, VerifyCorruptInput) {
  RunConfig cfg = spec("3 2\n0 1\n", k1, std::nullopt);
  cfg.command = "verify";
  const Result r = run(cfg);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("parse error"), std::string::npos) << r.err;
}

TEST_F(Cli, VerifySingleSpec) {
  RunConfig cfg = spec(k2, k1, k1);
  cfg.command = "verify";
  cfg.format = OutputFormat::Table;
  const Result r = run(cfg);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("f.txt"), std::string::npos);
}

TEST_F(Cli, BenchSmallSizes) {
  RunConfig cfg;
  cfg.command = "bench";
  cfg.bench_sizes = {{5, 4, 2}, {4, 3, 3}};
  const Result r = run(cfg);
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  EXPECT_EQ(header, "n,m,l,total_order,t_structured,t_oracle,speedup,kf_structured,kf_oracle,agree");
  EXPECT_EQ(row1.rfind("5,4,2,25,", 0), 0u) << row1;
  EXPECT_EQ(row2.rfind("4,3,3,16,", 0), 0u) << row2;
  EXPECT_EQ(row1.substr(row1.rfind(',') + 1), "yes");
  EXPECT_EQ(row2.substr(row2.rfind(',') + 1), "yes");
}

TEST(CliParsing, VertexListsAndSizes) {
  EXPECT_EQ(parse_vertex_list("0, 2,1"), (std::vector<Vertex>{0, 2, 1}));
  EXPECT_THROW(parse_vertex_list("0,,1"), std::invalid_argument);
  EXPECT_THROW(parse_vertex_list("-1"), std::invalid_argument);
  const auto sizes = parse_bench_sizes("5:4:2,10:3:3");
  ASSERT_EQ(sizes.size(), 2u);
  EXPECT_EQ(sizes[1].l, 3u);
  EXPECT_THROW(parse_bench_sizes("5:4"), std::invalid_argument);
  EXPECT_THROW(parse_bench_sizes("5:2:3"), std::invalid_argument);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_NE(run_binary(""), 0);
  EXPECT_NE(run_binary("frobnicate"), 0);
  EXPECT_NE(run_binary("verify --max-n 0"), 0);
  EXPECT_NE(run_binary("verify --tol-r -1"), 0);
  EXPECT_NE(run_binary("resist --f /nonexistent --h1 /nonexistent"), 0);
  EXPECT_NE(run_binary("build --attach 0,x --f /nonexistent"), 0);
  EXPECT_EQ(run_binary("verify --count 2"), 0);
  EXPECT_EQ(run_binary("--help"), 0);
}
