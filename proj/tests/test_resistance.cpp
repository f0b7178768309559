#include <gtest/gtest.h>

#include <cstdlib>
#include <thread>

#include "pocket/fixtures.hpp"
#include "pocket/geninv.hpp"
#include "pocket/resistance.hpp"

using namespace pocket;

namespace {

const Matrix n_p3{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};

}  // namespace

TEST(Resistance, FromOneInverse) {
  EXPECT_EQ(resistance_from_one_inverse(n_p3, 1, 1), 0.0);
  EXPECT_DOUBLE_EQ(resistance_from_one_inverse(n_p3, 0, 2), 2.0);
  const Matrix k2 = pseudo_inverse_laplacian(laplacian(Graph::complete(2)));
  EXPECT_DOUBLE_EQ(resistance_from_one_inverse(k2, 0, 1), 1.0);
  EXPECT_THROW(resistance_from_one_inverse(n_p3, 0, 3), std::out_of_range);
}

TEST(Resistance, MatrixExamples) {
  EXPECT_EQ(resistance_matrix(n_p3).values(), (Matrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  const ResistanceMatrix k3 = resistance_matrix(pseudo_inverse_laplacian(laplacian(Graph::complete(3))));
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) EXPECT_NEAR(k3(u, v), u == v ? 0.0 : 2.0 / 3, 1e-12);
  EXPECT_EQ(resistance_matrix(Matrix{{0}}).values(), Matrix{{0}});
}

TEST(Resistance, ThreadCountDoesNotChangeResult) {
  Rng rng(3);
  const Matrix x = pseudo_inverse_laplacian(laplacian(random_connected_graph(40, 0.1, rng)));
  const Matrix one = resistance_matrix(x, 1).values();
  EXPECT_EQ(resistance_matrix(x, 3).values(), one);
  EXPECT_EQ(resistance_matrix(x, 8).values(), one);
}

TEST(Kirchhoff, FromOneInverse) {
  EXPECT_DOUBLE_EQ(kirchhoff_from_one_inverse(n_p3).value, 4.0);
  EXPECT_DOUBLE_EQ(kirchhoff_from_one_inverse(pseudo_inverse_laplacian(laplacian(Graph::complete(2)))).value, 1.0);
  EXPECT_EQ(kirchhoff_from_one_inverse(Matrix{{0}}).value, 0.0);
  EXPECT_EQ(kirchhoff_from_one_inverse(n_p3, KirchhoffMethod::Oracle).method, KirchhoffMethod::Oracle);
}

TEST(Kirchhoff, Spectral) {
  EXPECT_NEAR(kirchhoff_spectral({{0, 2}}, 2).value, 1.0, 1e-15);
  EXPECT_NEAR(kirchhoff_spectral({{0, 1, 3}}, 3).value, 4.0, 1e-15);
  EXPECT_NEAR(kirchhoff_spectral({{0, 3, 3}}, 3).value, 2.0, 1e-15);
  EXPECT_THROW(kirchhoff_spectral({{0, 0, 2}}, 3), DisconnectedError);
  EXPECT_EQ(kirchhoff_spectral({{0, 2}}, 2).method, KirchhoffMethod::Spectral);
}

TEST(Oracle, Examples) {
  const OracleResult p4 = oracle_resistance(Graph::path(4));
  EXPECT_NEAR(p4.kirchhoff.value, 10.0, 1e-12);
  EXPECT_NEAR(p4.resistances(0, 3), 3.0, 1e-12);
  EXPECT_NEAR(oracle_resistance(Graph::complete(2)).kirchhoff.value, 1.0, 1e-12);
  EXPECT_NEAR(oracle_resistance(Graph::star(3)).kirchhoff.value, 9.0, 1e-12);
  EXPECT_EQ(p4.kirchhoff.method, KirchhoffMethod::Oracle);
  EXPECT_THROW(oracle_resistance(Graph(2)), DisconnectedError);
}

TEST(Oracle, CycleClosedForm) {
  // Kf(C_n) = (n^3 - n) / 12
  for (std::size_t n = 3; n <= 12; ++n) {
    const double nd = static_cast<double>(n);
    EXPECT_NEAR(oracle_resistance(Graph::cycle(n)).kirchhoff.value, (nd * nd * nd - nd) / 12, 1e-9);
  }
}

TEST(Kirchhoff, ThreeRoutesAgree) {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 14;
    const Matrix l = laplacian(random_connected_graph(n, 0.25, rng));
    const Matrix x = pseudo_inverse_laplacian(l);
    const double kf = kirchhoff_from_one_inverse(x).value;
    EXPECT_NEAR(resistance_matrix(x).pair_sum(), kf, 1e-8);
    EXPECT_NEAR(kirchhoff_spectral(eigenvalues_sym(l), n).value, kf, 1e-8);
    // 1^T L# 1 = 0, so n tr(L#) alone is Kf
    EXPECT_NEAR(static_cast<double>(n) * x.trace(), kf, 1e-8);
  }
}

TEST(Resistance, IndependentOfOneInverse) {
  auto specs = builtin_fixtures();
  for (auto& s : random_sweep(40, 55, {})) specs.push_back(std::move(s));
  for (const auto& s : specs) {
    const Matrix n = structured_one_inverse(s.spec).matrix;
    const Matrix pinv = pseudo_inverse_laplacian(laplacian(build_pocket_graph(s.spec).graph));
    EXPECT_FALSE(max_abs_diff(n, pinv) < 1e-6 && s.spec.total_order() > 1) << "expected a different {1}-inverse";
    EXPECT_LE(max_abs_diff(resistance_matrix(n).values(), resistance_matrix(pinv).values()), 1e-9) << s.label;
  }
}

TEST(Metric, HoldsOnResistanceMatrices) {
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_connected_graph(1 + rng() % 12, 0.3, rng);
    const MetricCheck c = oracle_resistance(g).resistances.check_metric();
    EXPECT_TRUE(c.holds(1e-9));
  }
}

TEST(Metric, DetectsViolations) {
  const ResistanceMatrix bad(Matrix{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
  const MetricCheck c = bad.check_metric();
  EXPECT_NEAR(c.worst_triangle_excess, 3.0, 1e-15);
  EXPECT_FALSE(c.holds(1e-9));
  EXPECT_LT(ResistanceMatrix(Matrix{{0, -1}, {-1, 0}}).check_metric().most_negative, 0);
  EXPECT_GT(ResistanceMatrix(Matrix{{0, 1}, {2, 0}}).check_metric().max_asymmetry, 0);
  EXPECT_GT(ResistanceMatrix(Matrix{{1, 1}, {1, 0}}).check_metric().max_abs_diagonal, 0);
}

TEST(Workers, EnvironmentCap) {
  ::setenv("POCKET_KIRCH_THREADS", "1", 1);
  EXPECT_EQ(worker_count_from_env(), 1u);
  ::setenv("POCKET_KIRCH_THREADS", "garbage", 1);
  EXPECT_EQ(worker_count_from_env(), 1u);
  ::setenv("POCKET_KIRCH_THREADS", "100000", 1);
  EXPECT_GE(worker_count_from_env(), 1u);
  EXPECT_LE(worker_count_from_env(), std::max(1u, std::thread::hardware_concurrency()));
  ::unsetenv("POCKET_KIRCH_THREADS");
  EXPECT_EQ(worker_count_from_env(), 1u);
}
