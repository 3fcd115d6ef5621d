#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geospin/connection.hpp"
#include "geospin/error.hpp"
#include "geospin/geospin_matrix.hpp"
#include "support/oracles.hpp"

namespace geospin {
namespace {

const double kQuarterPi = std::numbers::pi / 4;

TEST(Christoffel, EuclideanVanishes) {
  const MetricField f = builtin_manifold("euclidean", {{{"n", 3}}, {}});
  const ChristoffelAtPoint c = christoffel_at(f, {1, -2, 3});
  for (double g : c.gamma) EXPECT_EQ(g, 0.0);
  EXPECT_EQ(c.log_volume_gradient.norm(), 0.0);
}

TEST(Christoffel, HalfPlaneMatchesOracle) {
  const MetricField f = builtin_manifold("poincare_half_plane");
  const ChartPoint p{0.7, 1.6};
  const double y = p[1];
  const ChristoffelAtPoint c = christoffel_at(f, p);
  const auto fd = testing::fd_christoffel(f, p);
  EXPECT_NEAR(c(0, 0, 1), -1 / y, 1e-14);
  EXPECT_NEAR(c(0, 1, 0), -1 / y, 1e-14);
  EXPECT_NEAR(c(1, 0, 0), 1 / y, 1e-14);
  EXPECT_NEAR(c(1, 1, 1), -1 / y, 1e-14);
  EXPECT_EQ(c(0, 0, 0), 0.0);
  EXPECT_EQ(c(0, 1, 1), 0.0);
  EXPECT_EQ(c(1, 0, 1), 0.0);
  for (std::size_t q = 0; q < fd.size(); ++q) EXPECT_NEAR(c.gamma[q], fd[q], 1e-6);
}

TEST(Christoffel, UnitSphereMatchesOracle) {
  const MetricField f = builtin_manifold("sphere");
  const ChartPoint p{kQuarterPi, 0.4};
  const ChristoffelAtPoint c = christoffel_at(f, p);
  const auto fd = testing::fd_christoffel(f, p);
  EXPECT_NEAR(c(0, 1, 1), -0.5, 1e-15);
  EXPECT_NEAR(c(1, 0, 1), 1.0, 1e-15);
  EXPECT_NEAR(c(1, 1, 0), 1.0, 1e-15);
  EXPECT_NEAR(fd[(0 * 2 + 1) * 2 + 1], -0.5, 1e-8);
  EXPECT_NEAR(fd[(1 * 2 + 0) * 2 + 1], 1.0, 1e-8);
}

TEST(Christoffel, Errors) {
  EXPECT_THROW(christoffel_at(builtin_manifold("poincare_half_plane"), {0, -1}), DomainError);
  EXPECT_THROW(christoffel_at(builtin_manifold("sphere"), {1, 2, 3}), DimensionError);
}

TEST(LogVolumeGradient, Examples) {
  EXPECT_EQ(log_volume_gradient(builtin_manifold("euclidean"), {3, 4}).norm(), 0.0);
  const Eigen::VectorXd a = log_volume_gradient(builtin_manifold("poincare_half_plane"), {0, 2});
  EXPECT_NEAR(a(0), 0.0, 1e-15);
  EXPECT_NEAR(a(1), -1.0, 1e-15);
  const Eigen::VectorXd s = log_volume_gradient(builtin_manifold("sphere"), {kQuarterPi, 1});
  EXPECT_NEAR(s(0), 1.0, 1e-15);
  EXPECT_NEAR(s(1), 0.0, 1e-15);
}

TEST(LogVolumeGradient, JacobiPathForLargeNonDiagonalMetric) {
  // 6x6 with a coupling term: no symbolic determinant, so the trace path runs.
  std::vector<std::string> c;
  for (int i = 1; i <= 6; ++i) c.push_back("x" + std::to_string(i));
  std::vector<std::vector<Expr>> g(6, std::vector<Expr>(6));
  for (std::size_t i = 0; i < 6; ++i) g[i][i] = parse_expr("2 + sin(x1) * x" + std::to_string(i + 1), c);
  g[0][1] = g[1][0] = parse_expr("0.3 * cos(x3)", c);
  const MetricField f("coupled", c, g);
  EXPECT_FALSE(f.determinant().has_value());
  const ChartPoint p{0.2, 0.1, -0.4, 0.3, 0.5, -0.2};
  const Eigen::VectorXd a = log_volume_gradient(f, p);
  for (std::size_t j = 0; j < 6; ++j) {
    const double h = 1e-6;
    ChartPoint plus = p, minus = p;
    plus[j] += h;
    minus[j] -= h;
    const double fd = (metric_at(f, plus).log_sqrt_det - metric_at(f, minus).log_sqrt_det) / (2 * h);
    EXPECT_NEAR(a(static_cast<Eigen::Index>(j)), fd, 1e-7);
  }
}

TEST(ConnectionOneForm, EqualsGeospinMatrix) {
  EXPECT_EQ(connection_one_form_coeffs(christoffel_at(builtin_manifold("euclidean"), {1, 1}), {2, 3})
                .norm(),
            0.0);
  const ChristoffelAtPoint c = christoffel_at(builtin_manifold("poincare_half_plane"), {0, 1});
  const Eigen::MatrixXd w = connection_one_form_coeffs(c, {1, 0});
  Eigen::Matrix2d expected;
  expected << 0, -1, 1, 0;
  EXPECT_TRUE(w.isApprox(expected));
  EXPECT_EQ(w, geospin_matrix(c, {1, 0}).w);
  EXPECT_THROW(connection_one_form_coeffs(c, {1, 0, 0}), DimensionError);
}

TEST(ConnectionProperties, ZooInvariants) {
  std::mt19937_64 rng(11);
  for (const auto& zc : testing::zoo_cases()) {
    const MetricField f = builtin_manifold(zc.name, zc.params);
    const std::size_t n = f.dimension();
    for (int trial = 0; trial < 100; ++trial) {
      const ChartPoint p = testing::sample_point(f, rng);
      const ChristoffelAtPoint c = christoffel_at(f, p);
      const MetricAtPoint m = metric_at(f, p);
      const auto dg = testing::fd_metric_partials(f, p);
      const auto dg_exact = metric_partials_at(f, p);
      for (std::size_t k = 0; k < n; ++k) {
        double trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
          trace += c(i, i, k);
          for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(c(k, i, j), c(k, j, i)) << zc.label;
            // ∂_k g_ij = Γ^l_ki g_lj + Γ^l_kj g_il
            double compat = dg_exact[k](i, j);
            for (std::size_t l = 0; l < n; ++l) {
              compat -= c(l, k, i) * m.g(l, j) + c(l, k, j) * m.g(i, l);
            }
            EXPECT_NEAR(compat, 0.0, 1e-9 * (1 + std::abs(dg[k](i, j)))) << zc.label;
          }
        }
        const double a = c.log_volume_gradient(static_cast<Eigen::Index>(k));
        EXPECT_NEAR(trace, a, 1e-9 * (1 + std::abs(a))) << zc.label;
      }
    }
  }
}

TEST(ConnectionProperties, SymbolicMatchesFiniteDifferenceOracle) {
  std::mt19937_64 rng(12);
  for (const auto& zc : testing::zoo_cases()) {
    const MetricField f = builtin_manifold(zc.name, zc.params);
    for (int trial = 0; trial < 20; ++trial) {
      const ChartPoint p = testing::sample_point(f, rng);
      const auto exact = christoffel_at(f, p).gamma;
      const auto fd = testing::fd_christoffel(f, p);
      for (std::size_t q = 0; q < fd.size(); ++q) EXPECT_NEAR(exact[q], fd[q], 1e-6) << zc.label;
    }
  }
}

}  // namespace
}  // namespace geospin
