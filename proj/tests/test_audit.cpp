#include <gtest/gtest.h>

#include "pocket/audit.hpp"

using namespace pocket;

namespace {

const Graph k1 = Graph::complete(1);
const Graph k2 = Graph::complete(2);

}  // namespace

TEST(Verify, P3) {
  const DiscrepancyReport r = verify_construction(PocketSpec{k1, {0}, k1, k1}, {}, true, "P3");
  EXPECT_TRUE(r.structured_ok());
  EXPECT_DOUBLE_EQ(r.find("r(0,1)")->structured, 1.0);
  EXPECT_DOUBLE_EQ(r.find("r(0,2)")->structured, 2.0);
  EXPECT_DOUBLE_EQ(r.find("r(1,2)")->structured, 1.0);
  const QuantityRecord* kf = r.find("kf");
  ASSERT_NE(kf, nullptr);
  EXPECT_DOUBLE_EQ(kf->structured, 4.0);
  EXPECT_NEAR(kf->oracle, 4.0, 1e-12);
  EXPECT_EQ(kf->printed, 1.5);
  EXPECT_EQ(kf->printed_pass, false);
  EXPECT_EQ(kf->printed_case, PrintedCase::AllKf);
}

TEST(Verify, P4) {
  const DiscrepancyReport r = verify_construction(PocketSpec{k2, {0, 1}, k1, Graph()}, {}, true);
  EXPECT_TRUE(r.structured_ok());
  EXPECT_NEAR(r.find("kf")->structured, 10.0, 1e-8);
  EXPECT_NEAR(r.find("kf_spectral")->structured, 10.0, 1e-8);
}

TEST(Verify, SeededJoinSpec) {
  // n = 4, k = 2, l = 2, m = 3
  Rng rng(2024);
  const Graph f = join(random_graph(2, 0.5, rng), random_graph(2, 0.5, rng));
  const PocketSpec spec{f, {0, 1}, random_graph(2, 0.5, rng), k1};
  const DiscrepancyReport r = verify_construction(spec, {}, true);
  EXPECT_EQ(r.instance.path, StructuredPath::JoinAttached);
  EXPECT_TRUE(r.structured_ok());
  EXPECT_LE(r.max_structured_error(QuantityKind::Resistance), 1e-9);
}

TEST(Verify, WithoutPrinted) {
  const DiscrepancyReport r = verify_construction(PocketSpec{k1, {0}, k1, k1}, {}, false);
  EXPECT_TRUE(r.covered_cases.empty());
  for (const auto& q : r.quantities) EXPECT_FALSE(q.printed_case.has_value());
}

TEST(Verify, RejectsBadStructure) {
  EXPECT_THROW(verify_construction(PocketSpec{Graph::path(4), {0}, k1, k1}, {}, true), StructureError);
  EXPECT_THROW(verify_construction(PocketSpec{Graph(2), {0}, k1, k1}, {}, true), DisconnectedError);
}

TEST(Verify, TightToleranceFails) {
  Tolerances tight;
  tight.resistance = 1e-300;
  // the K2vK1 pockets carry ~1e-14 rounding in the structured resistances
  const NamedSpec s = builtin_fixtures().at(4);
  ASSERT_EQ(s.label, "P3+K2vK1-pockets");
  EXPECT_FALSE(verify_construction(s, tight, false).structured_ok());
  EXPECT_TRUE(verify_construction(s, {}, false).structured_ok());
}

TEST(Verify, FixturesCoverEveryCase) {
  std::vector<DiscrepancyReport> reports;
  for (const auto& s : builtin_fixtures()) reports.push_back(verify_construction(s, {}, true));
  const VerifySummary summary = summarize(std::move(reports));
  EXPECT_TRUE(summary.structured_ok());
  for (const auto& [c, count] : summary.coverage) EXPECT_GT(count, 0u) << to_string(c);
  EXPECT_TRUE(summary.all_cases_covered());
}

TEST(Verify, LatticePasses) {
  std::vector<DiscrepancyReport> reports;
  for (const auto& s : random_sweep(60, 42, {})) reports.push_back(verify_construction(s, {}, true));
  for (const auto& r : reports) {
    EXPECT_TRUE(r.structured_ok()) << r.instance.label;
    EXPECT_LE(r.max_structured_error(QuantityKind::Kirchhoff), 1e-8);
    EXPECT_LE(r.find("metric.structured")->structured, 1e-9);
  }
}

TEST(Verify, JsonIsDeterministic) {
  const auto specs = random_sweep(8, 9, {});
  auto run = [&] {
    std::vector<DiscrepancyReport> reports;
    for (const auto& s : specs) reports.push_back(verify_construction(s, {}, true));
    return to_json(summarize(std::move(reports))).dump();
  };
  EXPECT_EQ(run(), run());
}

TEST(Verify, JsonShape) {
  const DiscrepancyReport r = verify_construction(PocketSpec{k1, {0}, k1, k1}, {}, true, "P3");
  const auto j = to_json(r);
  EXPECT_EQ(j.at("instance").at("label"), "P3");
  EXPECT_EQ(j.at("instance").at("path"), "all_attached");
  EXPECT_EQ(j.at("instance").at("seed"), nullptr);
  EXPECT_EQ(j.at("structured_pass"), true);
  bool saw_kf = false;
  for (const auto& q : j.at("quantities")) {
    if (q.at("id") != "kf") continue;
    saw_kf = true;
    EXPECT_EQ(q.at("printed"), 1.5);
    EXPECT_EQ(q.at("oracle"), 4.0);
    EXPECT_EQ(q.at("printed_pass"), false);
  }
  EXPECT_TRUE(saw_kf);
}

TEST(Verify, TableMentionsEveryInstance) {
  std::vector<DiscrepancyReport> reports;
  for (const auto& s : builtin_fixtures()) reports.push_back(verify_construction(s, {}, true));
  const std::string table = to_table(summarize(std::move(reports)));
  for (const auto& s : builtin_fixtures()) EXPECT_NE(table.find(s.label), std::string::npos) << s.label;
  EXPECT_NE(table.find("structured vs oracle: PASS"), std::string::npos);
}

TEST(Sweep, ReproducibleAndBounded) {
  const SweepBounds bounds{5, 3, 2};
  const auto a = random_sweep(30, 77, bounds);
  const auto b = random_sweep(30, 77, bounds);
  ASSERT_EQ(a.size(), 30u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].spec.f, b[i].spec.f);
    EXPECT_EQ(a[i].spec.attach, b[i].spec.attach);
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_LE(a[i].spec.n(), 5u);
    EXPECT_LE(a[i].spec.l(), 3u);
    EXPECT_LE(a[i].spec.m() - a[i].spec.l(), 2u);
    a[i].spec.validate();
  }
  EXPECT_NE(random_sweep(1, 78, bounds)[0].seed, a[0].seed);
}
