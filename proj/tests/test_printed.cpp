#include <gtest/gtest.h>

#include "pocket/fixtures.hpp"
#include "pocket/geninv.hpp"
#include "pocket/printed.hpp"
#include "pocket/resistance.hpp"

using namespace pocket;

namespace {

const Graph k1 = Graph::complete(1);
const Graph k2 = Graph::complete(2);

struct Instance {
  PocketSpec spec;
  StructuredOneInverse structured;
  PrintedFormulas printed;

  explicit Instance(PocketSpec s)
      : spec(std::move(s)), structured(structured_one_inverse(spec)), printed(spec, structured) {}
};

}  // namespace

TEST(PrintedKf, AllAttachedByHand) {
  // P3: 3 (0 + 1 + 0.5) - 3
  EXPECT_DOUBLE_EQ(all_attached_printed_kf(0, {{0}}, {{0}}, 1, 2, 1), 1.5);
  // P4: 4 (1 + 2 + 2) - 1
  EXPECT_DOUBLE_EQ(all_attached_printed_kf(1, {{0}}, {}, 2, 1, 1), 19.0);
}

TEST(PrintedKf, JoinByHand) {
  // K2 with one pendant: 3 (0 + 1 + 1 + 1 + 1) - 1
  EXPECT_DOUBLE_EQ(join_attached_printed_kf({{0}}, {{0}}, {{0}}, {}, 2, 1, 1, 1), 11.0);
}

TEST(PrintedKf, FromInstances) {
  EXPECT_DOUBLE_EQ(Instance({k1, {0}, k1, k1}).printed.kirchhoff(), 1.5);
  EXPECT_NEAR(Instance({k2, {0, 1}, k1, Graph()}).printed.kirchhoff(), 19.0, 1e-12);
  EXPECT_NEAR(Instance({k2, {0}, k1, Graph()}).printed.kirchhoff(), 11.0, 1e-12);
}

TEST(PrintedCases, AllAttachedExamples) {
  const Instance p4({k2, {0, 1}, k1, Graph()});
  EXPECT_NEAR(*p4.printed.resistance(PrintedCase::AllFF, 0, 1), 1.0, 1e-12);

  const Instance p3({k1, {0}, k1, k1});
  EXPECT_NEAR(*p3.printed.resistance(PrintedCase::AllFH1, 0, 1), 1.0, 1e-12);
  EXPECT_NEAR(*p3.printed.resistance(PrintedCase::AllFH1, 1, 0), 1.0, 1e-12);
  EXPECT_NEAR(*p3.printed.resistance(PrintedCase::AllH1H2, 1, 2), 1.0, 1e-12);
}

TEST(PrintedCases, JoinExamples) {
  // K2-pendant: F1 = {0}, F2 = {1}, pocket vertex 2 on 0
  const Instance inst({k2, {0}, k1, Graph()});
  EXPECT_EQ(*inst.printed.resistance(PrintedCase::JoinF2F2, 1, 1), 0.0);
  EXPECT_NEAR(*inst.printed.resistance(PrintedCase::JoinFH1, 0, 2), 1.0, 1e-12);
}

TEST(PrintedCases, MismatchedBlocksThrow) {
  const Instance p3({k1, {0}, k1, k1});
  EXPECT_THROW(p3.printed.resistance(PrintedCase::AllFF, 0, 1), CaseMismatchError);
  EXPECT_THROW(p3.printed.resistance(PrintedCase::AllH1H2, 2, 1), CaseMismatchError);
  EXPECT_THROW(p3.printed.resistance(PrintedCase::JoinFH1, 0, 1), CaseMismatchError);
  EXPECT_THROW(p3.printed.resistance(PrintedCase::AllKf, 0, 1), CaseMismatchError);
}

TEST(PrintedCases, PairsMapToCases) {
  const Instance p3({k1, {0}, k1, k1});
  auto cases = p3.printed.cases_for_pair(2, 1);
  ASSERT_EQ(cases.size(), 2u);
  EXPECT_EQ(cases[0].which, PrintedCase::AllH1H2);
  EXPECT_EQ(cases[0].first, 1u);
  EXPECT_EQ(cases[1].which, PrintedCase::AllH2H1);
  EXPECT_EQ(cases[1].first, 2u);

  // H1-H1 pairs have no printed case in the all-attached family
  const Instance wide({k2, {0, 1}, k2, k1});
  const Vertex a = wide.structured.layout.global({Block::H1, 0, 0});
  const Vertex b = wide.structured.layout.global({Block::H1, 1, 1});
  EXPECT_TRUE(wide.printed.cases_for_pair(a, b).empty());
}

TEST(PrintedCases, FamiliesAndLabels) {
  std::set<std::string_view> names;
  for (PrintedCase c : all_printed_cases()) names.insert(to_string(c));
  EXPECT_EQ(names.size(), all_printed_cases().size());
  EXPECT_EQ(all_printed_cases().size(), 15u);
  EXPECT_EQ(family_of(PrintedCase::AllH2H1), StructuredPath::AllAttached);
  EXPECT_EQ(family_of(PrintedCase::JoinF2F2), StructuredPath::JoinAttached);
  EXPECT_TRUE(is_kirchhoff_case(PrintedCase::JoinKf));
  EXPECT_FALSE(is_kirchhoff_case(PrintedCase::JoinFH2));
}

// Pockets do not change resistances inside F, and the printed F-F case
// says exactly that.
TEST(PrintedCases, FInternalCaseMatchesOracle) {
  auto specs = builtin_fixtures();
  for (auto& s : random_sweep(60, 77, {})) specs.push_back(std::move(s));
  for (const auto& s : specs) {
    const Instance inst(s.spec);
    if (inst.printed.family() != StructuredPath::AllAttached) continue;
    const OracleResult oracle = oracle_resistance(build_pocket_graph(s.spec).graph);
    for (Vertex u = 0; u < s.spec.n(); ++u)
      for (Vertex v = 0; v < s.spec.n(); ++v) {
        if (u == v) continue;
        EXPECT_NEAR(*inst.printed.resistance(PrintedCase::AllFF, u, v), oracle.resistances(u, v), 1e-9) << s.label;
      }
  }
}

TEST(PrintedCases, Deterministic) {
  for (const auto& s : random_sweep(10, 5, {})) {
    const Instance a(s.spec), b(s.spec);
    EXPECT_EQ(a.printed.kirchhoff(), b.printed.kirchhoff());
    for (Vertex u = 0; u < s.spec.total_order(); ++u)
      for (Vertex v = u + 1; v < s.spec.total_order(); ++v)
        for (const auto& c : a.printed.cases_for_pair(u, v))
          EXPECT_EQ(a.printed.resistance(c.which, c.first, c.second),
                    b.printed.resistance(c.which, c.first, c.second));
  }
}
