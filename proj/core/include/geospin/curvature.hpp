#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

#include "geospin/manifold.hpp"

namespace geospin {

/// Riemann, Ricci and scalar curvature at a point.
///
/// Conventions: R^i_jkl = ∂_k Γ^i_lj − ∂_l Γ^i_kj + Γ^i_km Γ^m_lj − Γ^i_lm Γ^m_kj,
/// R_jl = R^i_jil, R = g^jl R_jl. The unit sphere has R = +2.
struct CurvatureBundle {
  std::size_t dimension = 0;
  std::vector<double> riemann;  // [i][j][k][l]
  Eigen::MatrixXd ricci;
  double scalar = 0.0;
  ChartPoint point;

  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    const std::size_t n = dimension;
    return riemann[((i * n + j) * n + k) * n + l];
  }
};

/// ∂_m Γ^k_ij, flattened as [m][k][i][j]. Exact: built from the symbolic first
/// and second partials of g by the product rule, with ∂g⁻¹ = −g⁻¹ (∂g) g⁻¹.
std::vector<double> christoffel_partials(const MetricField& field, const ChartPoint& p);

CurvatureBundle curvature_at(const MetricField& field, const ChartPoint& p);

/// w^(r) = ½ g^im ġ_im = ½ tr(g⁻¹ ġ).
double w_r_from_metric_rate(const Eigen::MatrixXd& g, const Eigen::MatrixXd& g_dot);

enum class FlowMode {
  /// Einstein metric at p (Ric = ρ g0): g(t) = c(t) g0 with ċ = −2ρ exactly.
  Homothetic,
  /// Any metric: g(t) = c(t) g0 at p with ċ = −2 tr(g0⁻¹ Ric(c g0)) / n,
  /// Ricci recomputed on the scaled field at every RK4 stage. An
  /// approximation of the full flow unless the metric is Einstein.
  Pointwise,
};

struct RicciFlowOptions {
  FlowMode mode = FlowMode::Homothetic;
  /// The flow stops once c ≤ this value.
  double extinction_threshold = 1e-6;
  /// Homothetic mode requires ‖Ric − ρ g0‖_max ≤ einstein_tol · (1 + |ρ|).
  double einstein_tol = 1e-9;
};

struct RicciFlowSample {
  double t = 0.0;
  double scale = 1.0;        // c(t)
  Eigen::MatrixXd g;         // c(t) g0 at p
  Eigen::MatrixXd g_dot;     // ċ(t) g0, the rate the integrator used
  Eigen::MatrixXd ricci;     // Ric of the scaled metric, computed independently
  double w_r = 0.0;          // ½ tr(g⁻¹ ġ)
  double scalar = 0.0;       // R(t)
  double residual = 0.0;     // |w_r + R|
  double flow_residual = 0.0;  // max |ġ + 2 Ric|
};

struct RicciFlowTrajectory {
  std::vector<RicciFlowSample> samples;
  double step = 0.0;
  FlowMode mode = FlowMode::Homothetic;
  double einstein_constant = 0.0;  // ρ with Ric(g0) = ρ g0 (trace estimate in pointwise mode)
  std::optional<double> extinction_time;
};

/// Evolves dg/dt = −2 Ric at p by RK4 on the scale factor.
RicciFlowTrajectory ricci_flow_integrate(const MetricField& field, const ChartPoint& p,
                                         double t_end, double h,
                                         const RicciFlowOptions& options = {});

/// Compares H = −iħ w^(r) against H' = iħ R sample by sample.
struct CorollaryReport {
  struct Row {
    double t = 0.0;
    std::complex<double> h_geospin;    // −iħ w^(r)
    std::complex<double> h_curvature;  // iħ R
  };
  std::vector<Row> rows;
  double hbar = 1.0;
  double max_deviation = 0.0;  // max |H − H'|
  double max_abs_scalar = 0.0;
  double tolerance = 0.0;      // 1e-6 ħ (1 + max|R|)
  bool pass = false;
};

CorollaryReport corollary_check(const RicciFlowTrajectory& traj, double hbar);

}  // namespace geospin
