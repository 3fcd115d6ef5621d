#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "geospin/error.hpp"
#include "geospin/manifold.hpp"

namespace geospin {

/// Phase point (x, v) at curve parameter t; v is contravariant.
struct GeodesicState {
  double t = 0.0;
  ChartPoint x;
  TangentVector v;
};

/// Samples of an integrated geodesic, strictly increasing in t. All steps
/// have size `step` except possibly the last, which lands on t_end.
struct GeodesicTrajectory {
  std::vector<GeodesicState> samples;
  double step = 0.0;
  MetricField manifold;
};

struct PhaseRate {
  Eigen::VectorXd dx;
  Eigen::VectorXd dv;
};

/// dx/dt = v, dv/dt = −W(x, v) v.
PhaseRate geodesic_rhs(const MetricField& field, const GeodesicState& s);

/// Raised when integration cannot continue. `partial()` holds every accepted
/// sample, ending with the last valid state.
class IntegrationError : public Error {
 public:
  enum class Kind { DomainExit, NonFinite };

  IntegrationError(Kind kind, const std::string& what, GeodesicTrajectory partial)
      : Error(what), kind_(kind), partial_(std::move(partial)) {}

  Kind kind() const noexcept { return kind_; }
  const GeodesicTrajectory& partial() const noexcept { return partial_; }
  const GeodesicState& last_valid() const { return partial_.samples.back(); }

 private:
  Kind kind_;
  GeodesicTrajectory partial_;
};

/// Classical fixed-step RK4 on the joint (x, v) state from s0.t to t_end.
GeodesicTrajectory integrate_geodesic(const MetricField& field, const GeodesicState& s0,
                                      double t_end, double h);

/// ‖v‖_g = √(g_ij v^i v^j).
double speed(const MetricField& field, const GeodesicState& s);

/// w^(r) = tr W at each sample.
std::vector<double> geospin_function_along(const GeodesicTrajectory& traj);

/// Max over interior samples of |d/dt ln√g(x(t)) − w^(r)(x(t), v(t))|, with
/// the time derivative taken by (non-uniform) central differences.
double logdet_rate_residual(const GeodesicTrajectory& traj);

/// A scalar function sampled on a uniform grid t0, t0+dt, ...
struct SampledFunction {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> values;

  double t_end() const noexcept {
    return values.empty() ? t0 : t0 + dt * static_cast<double>(values.size() - 1);
  }
};

/// w^(r) on the uniform part of a trajectory (drops a short final step).
SampledFunction geospin_function_samples(const GeodesicTrajectory& traj);

struct ModeState {
  double t = 0.0;
  std::vector<double> psi;
};

struct ComplexModeState {
  double t = 0.0;
  std::vector<std::complex<double>> psi;
};

/// Integrates dψ^i/dt + w^(r)(t) ψ^i = 0 with RK4 over the whole sample
/// range. `h` must be an even multiple of the sample spacing so the RK4
/// midpoints fall on samples, and psi0.t must lie on the grid.
std::vector<ModeState> evolve_mode(const SampledFunction& w_r, const ModeState& psi0, double h);

/// Same equation written as iħ dψ/dt = H ψ with H = −iħ w^(r), integrated in
/// complex arithmetic.
std::vector<ComplexModeState> evolve_mode_schrodinger(const SampledFunction& w_r,
                                                      const ModeState& psi0, double h,
                                                      double hbar);

}  // namespace geospin
