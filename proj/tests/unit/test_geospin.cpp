#include <gtest/gtest.h>

#include <random>

#include "geospin/error.hpp"
#include "geospin/geospin_matrix.hpp"
#include "support/oracles.hpp"

namespace geospin {
namespace {

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(GeospinMatrix, Euclidean) {
  const GeospinMatrix w = geospin_matrix(builtin_manifold("euclidean"), {1, 2}, {3, -4});
  EXPECT_EQ(w.w.norm(), 0.0);
  EXPECT_EQ(w.trace_w, 0.0);
}

TEST(GeospinMatrix, HalfPlaneHorizontal) {
  const GeospinMatrix w = geospin_matrix(builtin_manifold("poincare_half_plane"), {0, 1}, {1, 0});
  EXPECT_TRUE(w.w.isApprox(mat2(0, -1, 1, 0)));
  EXPECT_EQ(w.trace_w, 0.0);
  EXPECT_EQ(w.log_volume_rate, 0.0);
}

TEST(GeospinMatrix, HalfPlaneVertical) {
  const GeospinMatrix w = geospin_matrix(builtin_manifold("poincare_half_plane"), {0, 1}, {0, 1});
  EXPECT_TRUE(w.w.isApprox(mat2(-1, 0, 0, -1)));
  EXPECT_DOUBLE_EQ(w.trace_w, -2.0);
  EXPECT_DOUBLE_EQ(w.log_volume_rate, -2.0);
}

TEST(GeospinMatrix, ContractionOracle) {
  const MetricField f = builtin_manifold("poincare_disk");
  const ChartPoint p{0.2, -0.3};
  const TangentVector v{0.7, 0.4};
  const ChristoffelAtPoint c = christoffel_at(f, p);
  const GeospinMatrix w = geospin_matrix(c, v);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < 2; ++k) s += c(i, j, k) * v[k];
      EXPECT_EQ(w.w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), s);
    }
}

TEST(GeospinMatrix, Errors) {
  const ChristoffelAtPoint c = christoffel_at(builtin_manifold("poincare_half_plane"), {0, 1});
  EXPECT_THROW(geospin_matrix(c, {1, 0, 0}), DimensionError);
  EXPECT_THROW(geospin_matrix(c, TangentVector({1, 0}, IndexPosition::Lower)), InvalidArgument);
  EXPECT_THROW(geospin_lowered(c, {1, 0}), InvalidArgument);
}

TEST(GeospinLowered, Examples) {
  const ChristoffelAtPoint e = christoffel_at(builtin_manifold("euclidean"), {0, 0});
  EXPECT_EQ(geospin_lowered(e, TangentVector({1, 2}, IndexPosition::Lower)).w_low.norm(), 0.0);

  const MetricField h = builtin_manifold("poincare_half_plane");
  const ChristoffelAtPoint c = christoffel_at(h, {0, 1});
  const TangentVector v_low = lower_index(h, {0, 1}, {1, 0});
  EXPECT_TRUE(geospin_lowered(c, v_low).w_low.isApprox(mat2(0, -1, -1, 0)));
}

TEST(Split, Examples) {
  const GeospinSplit a = split_diag_offdiag(mat2(0, -1, 1, 0));
  EXPECT_EQ(a.diagonal.norm(), 0.0);
  EXPECT_EQ(a.hollow, mat2(0, -1, 1, 0));
  const GeospinSplit b = split_diag_offdiag(mat2(-1, 0, 0, -1));
  EXPECT_EQ(b.diagonal, mat2(-1, 0, 0, -1));
  EXPECT_EQ(b.hollow.norm(), 0.0);

  std::mt19937_64 rng(4);
  Eigen::MatrixXd m(3, 3);
  for (Eigen::Index i = 0; i < 9; ++i) m(i) = testing::uniform(rng, -5, 5);
  const GeospinSplit s = split_diag_offdiag(m);
  EXPECT_EQ(s.diagonal + s.hollow, m);
  EXPECT_EQ(s.hollow.diagonal().norm(), 0.0);
  EXPECT_TRUE(s.diagonal.isDiagonal(0.0));
}

TEST(CovariantDerivative, Examples) {
  const GeospinMatrix flat = geospin_matrix(builtin_manifold("euclidean"), {0, 0}, {1, 1});
  EXPECT_EQ(covariant_derivative(Eigen::MatrixXd::Zero(2, 2), flat).norm(), 0.0);
  // v^j = x^j: jacobian is the identity
  const GeospinMatrix radial = geospin_matrix(builtin_manifold("euclidean"), {0.5, 2}, {0.5, 2});
  EXPECT_EQ(covariant_derivative(Eigen::MatrixXd::Identity(2, 2), radial),
            Eigen::MatrixXd::Identity(2, 2));

  const GeospinMatrix w = geospin_matrix(builtin_manifold("poincare_half_plane"), {0, 1}, {1, 0});
  const Eigen::MatrixXd nabla = covariant_derivative(Eigen::MatrixXd::Zero(2, 2), w);
  // ∇_k v^j = W^j_k
  for (Eigen::Index k = 0; k < 2; ++k)
    for (Eigen::Index j = 0; j < 2; ++j) EXPECT_EQ(nabla(k, j), w.w(j, k));

  EXPECT_THROW(covariant_derivative(Eigen::MatrixXd::Zero(3, 3), w), DimensionError);
}

TEST(CovariantDerivative, LoweredMatchesIndexGymnastics) {
  // ∇_k v_j computed two ways: lower the upper result, or use the lowered form
  // with ∂_k v_j = ∂_k(g_jl v^l).
  const MetricField f = builtin_manifold("poincare_half_plane");
  const ChartPoint p{0.3, 1.4};
  const TangentVector v{0.8, -0.5};
  Eigen::MatrixXd jac(2, 2);  // jac(k, j) = ∂_k v^j
  jac << 0.2, -0.1, 0.4, 0.3;
  const MetricAtPoint m = metric_at(f, p);
  const auto dg = metric_partials_at(f, p);
  Eigen::MatrixXd jac_low(2, 2);
  for (Eigen::Index k = 0; k < 2; ++k) {
    const Eigen::VectorXd row = dg[static_cast<std::size_t>(k)] * v.as_eigen() +
                                m.g * jac.row(k).transpose();
    jac_low.row(k) = row.transpose();
  }
  const ChristoffelAtPoint c = christoffel_at(f, p);
  const Eigen::MatrixXd up = covariant_derivative(jac, geospin_matrix(c, v));
  const Eigen::MatrixXd low =
      covariant_derivative_lowered(jac_low, geospin_lowered(c, lower_index(f, p, v)));
  EXPECT_TRUE((up * m.g).isApprox(low, 1e-12));
}

TEST(GeospinProperties, ZooInvariants) {
  std::mt19937_64 rng(21);
  for (const auto& zc : testing::zoo_cases()) {
    const MetricField f = builtin_manifold(zc.name, zc.params);
    const std::size_t n = f.dimension();
    for (int trial = 0; trial < 100; ++trial) {
      const ChartPoint p = testing::sample_point(f, rng);
      const TangentVector v = testing::sample_velocity(n, rng);
      const TangentVector u = testing::sample_velocity(n, rng);
      const ChristoffelAtPoint c = christoffel_at(f, p);
      const GeospinMatrix wv = geospin_matrix(c, v);

      const double av = log_volume_gradient(f, p).dot(v.as_eigen());
      EXPECT_NEAR(wv.w.trace(), av, 1e-9 * (1 + std::abs(av))) << zc.label;
      EXPECT_NEAR(wv.trace_residual(), 0.0, 1e-9 * (1 + std::abs(av))) << zc.label;

      const double a = testing::uniform(rng, -2, 2);
      const double b = testing::uniform(rng, -2, 2);
      TangentVector mix{std::vector<double>(n)};
      for (std::size_t i = 0; i < n; ++i) mix[i] = a * v[i] + b * u[i];
      const Eigen::MatrixXd lin = a * wv.w + b * geospin_matrix(c, u).w;
      EXPECT_LE((geospin_matrix(c, mix).w - lin).cwiseAbs().maxCoeff(),
                1e-12 * (1 + lin.cwiseAbs().maxCoeff()))
          << zc.label;

      const TangentVector v_low = lower_index(f, p, v);
      const Eigen::MatrixXd wl = geospin_lowered(c, v_low).w_low;
      EXPECT_LE((wl - wl.transpose()).cwiseAbs().maxCoeff(), 1e-12) << zc.label;

      const Eigen::VectorXd wvv = wv.w * v.as_eigen();
      for (std::size_t i = 0; i < n; ++i) {
        double quad = 0;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) quad += c(i, j, k) * v[j] * v[k];
        EXPECT_NEAR(wvv(static_cast<Eigen::Index>(i)), quad, 1e-12 * (1 + std::abs(quad)));
      }
    }
  }
}

}  // namespace
}  // namespace geospin
