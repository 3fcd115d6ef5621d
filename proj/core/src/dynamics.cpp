#include "geospin/dynamics.hpp"

#include <cmath>

#include "geospin/connection.hpp"
#include "geospin/geospin_matrix.hpp"

namespace geospin {

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.begin(), v.end()}; }

Eigen::VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

bool finite_state(const GeodesicState& s) {
  for (double x : s.x.coords) {
    if (!std::isfinite(x)) return false;
  }
  for (double v : s.v.components) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

PhaseRate geodesic_rhs(const MetricField& field, const GeodesicState& s) {
  if (s.v.size() != field.dimension()) {
    throw DimensionError("velocity has dimension " + std::to_string(s.v.size()) +
                         ", manifold has dimension " + std::to_string(field.dimension()));
  }
  const GeospinMatrix w = geospin_matrix(field, s.x, s.v);
  const Eigen::VectorXd v = s.v.as_eigen();
  return {v, -(w.w * v)};
}

GeodesicTrajectory integrate_geodesic(const MetricField& field, const GeodesicState& s0,
                                      double t_end, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidArgument("step size must be positive, got " + format_number(h));
  }
  if (!(t_end > s0.t)) {
    throw InvalidArgument("t_end (" + format_number(t_end) + ") must exceed the start time (" +
                          format_number(s0.t) + ")");
  }
  field.require_in_domain(s0.x);
  if (s0.v.size() != field.dimension() || !s0.v.is_upper()) {
    throw DimensionError("initial velocity must be an upper-index vector of dimension " +
                         std::to_string(field.dimension()));
  }

  GeodesicTrajectory traj{{s0}, h, field};
  const double span = t_end - s0.t;
  const auto steps = static_cast<std::size_t>(std::ceil(span / h - 1e-9));
  traj.samples.reserve(steps + 1);

  auto state_at = [&](double t, const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    return GeodesicState{t, ChartPoint(to_std(x)), TangentVector(to_std(v))};
  };

  for (std::size_t k = 0; k < steps; ++k) {
    const GeodesicState& cur = traj.samples.back();
    const double t_next = k + 1 == steps ? t_end : s0.t + static_cast<double>(k + 1) * h;
    const double dt = t_next - cur.t;
    const Eigen::VectorXd x = to_eigen(cur.x.span());
    const Eigen::VectorXd v = cur.v.as_eigen();

    GeodesicState next;
    try {
      const PhaseRate k1 = geodesic_rhs(field, cur);
      const PhaseRate k2 =
          geodesic_rhs(field, state_at(cur.t + dt / 2, x + dt / 2 * k1.dx, v + dt / 2 * k1.dv));
      const PhaseRate k3 =
          geodesic_rhs(field, state_at(cur.t + dt / 2, x + dt / 2 * k2.dx, v + dt / 2 * k2.dv));
      const PhaseRate k4 = geodesic_rhs(field, state_at(t_next, x + dt * k3.dx, v + dt * k3.dv));
      next = state_at(t_next, x + dt / 6 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx),
                      v + dt / 6 * (k1.dv + 2 * k2.dv + 2 * k3.dv + k4.dv));
    } catch (const DomainError& e) {
      std::string msg = "geodesic left the chart domain after t = " + format_number(cur.t) +
                        ": " + e.what();
      throw IntegrationError(IntegrationError::Kind::DomainExit, msg, std::move(traj));
    } catch (const DegenerateMetricError& e) {
      std::string msg = "geodesic reached a degenerate metric after t = " +
                        format_number(cur.t) + ": " + e.what();
      throw IntegrationError(IntegrationError::Kind::DomainExit, msg, std::move(traj));
    }
    if (!finite_state(next)) {
      std::string msg = "non-finite state after t = " + format_number(cur.t);
      throw IntegrationError(IntegrationError::Kind::NonFinite, msg, std::move(traj));
    }
    if (!field.contains(next.x)) {
      std::string msg = "geodesic left the chart domain at t = " + format_number(t_next);
      throw IntegrationError(IntegrationError::Kind::DomainExit, msg, std::move(traj));
    }
    traj.samples.push_back(std::move(next));
  }
  return traj;
}

double speed(const MetricField& field, const GeodesicState& s) { return norm(field, s.x, s.v); }

std::vector<double> geospin_function_along(const GeodesicTrajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.samples.size());
  for (const auto& s : traj.samples) {
    out.push_back(geospin_matrix(traj.manifold, s.x, s.v).trace_w);
  }
  return out;
}

double logdet_rate_residual(const GeodesicTrajectory& traj) {
  const auto& s = traj.samples;
  if (s.size() < 3) {
    throw InvalidArgument("logdet_rate_residual needs at least 3 samples, got " +
                          std::to_string(s.size()));
  }
  std::vector<double> log_vol(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    log_vol[i] = metric_at(traj.manifold, s[i].x).log_sqrt_det;
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double h1 = s[i].t - s[i - 1].t;
    const double h2 = s[i + 1].t - s[i].t;
    const double rate = (h1 * h1 * log_vol[i + 1] - h2 * h2 * log_vol[i - 1] +
                         (h2 * h2 - h1 * h1) * log_vol[i]) /
                        (h1 * h2 * (h1 + h2));
    const double w_r = geospin_matrix(traj.manifold, s[i].x, s[i].v).trace_w;
    worst = std::max(worst, std::abs(rate - w_r));
  }
  return worst;
}

SampledFunction geospin_function_samples(const GeodesicTrajectory& traj) {
  SampledFunction f{traj.samples.empty() ? 0.0 : traj.samples.front().t, traj.step, {}};
  const std::vector<double> w = geospin_function_along(traj);
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const double expected = f.t0 + static_cast<double>(i) * f.dt;
    if (std::abs(traj.samples[i].t - expected) > 1e-9 * std::max(1.0, std::abs(expected))) break;
    f.values.push_back(w[i]);
  }
  return f;
}

namespace {

struct ModeGrid {
  std::size_t start = 0;   // sample index of psi0.t
  std::size_t stride = 0;  // samples per RK4 step (even)
  std::size_t steps = 0;
};

ModeGrid align(const SampledFunction& w, double t0, double h) {
  if (!(w.dt > 0.0) || w.values.size() < 3) {
    throw InvalidArgument("mode equation needs at least 3 samples on a positive grid");
  }
  if (!(h > 0.0)) throw InvalidArgument("mode step must be positive");
  const double ratio = h / w.dt;
  const double stride = std::round(ratio);
  if (stride < 2.0 || std::fmod(stride, 2.0) != 0.0 || std::abs(ratio - stride) > 1e-9 * stride) {
    throw InvalidArgument("grid misalignment: mode step " + format_number(h) +
                          " is not an even multiple of the sample spacing " +
                          format_number(w.dt));
  }
  const double offset = (t0 - w.t0) / w.dt;
  const double start = std::round(offset);
  if (start < 0.0 || std::abs(offset - start) > 1e-9 * std::max(1.0, start)) {
    throw InvalidArgument("grid misalignment: initial time " + format_number(t0) +
                          " is not a sample time");
  }
  ModeGrid g;
  g.start = static_cast<std::size_t>(start);
  g.stride = static_cast<std::size_t>(stride);
  if (g.start >= w.values.size()) throw InvalidArgument("initial time lies past the samples");
  g.steps = (w.values.size() - 1 - g.start) / g.stride;
  return g;
}

template <class Scalar, class Rate>
std::vector<std::vector<Scalar>> rk4_linear(const SampledFunction& w, const ModeGrid& g,
                                            std::vector<Scalar> psi, double h, Rate rate) {
  std::vector<std::vector<Scalar>> out{psi};
  out.reserve(g.steps + 1);
  const std::size_t half = g.stride / 2;
  for (std::size_t k = 0; k < g.steps; ++k) {
    const std::size_t i = g.start + k * g.stride;
    const double w0 = w.values[i];
    const double wm = w.values[i + half];
    const double w1 = w.values[i + g.stride];
    for (Scalar& y : psi) {
      const Scalar k1 = rate(w0, y);
      const Scalar k2 = rate(wm, y + h / 2 * k1);
      const Scalar k3 = rate(wm, y + h / 2 * k2);
      const Scalar k4 = rate(w1, y + h * k3);
      y += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    out.push_back(psi);
  }
  return out;
}

}  // namespace

std::vector<ModeState> evolve_mode(const SampledFunction& w_r, const ModeState& psi0, double h) {
  const ModeGrid g = align(w_r, psi0.t, h);
  const auto rows = rk4_linear<double>(w_r, g, psi0.psi, h,
                                       [](double w, double y) { return -w * y; });
  std::vector<ModeState> out;
  out.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out.push_back({w_r.t0 + static_cast<double>(g.start + k * g.stride) * w_r.dt, rows[k]});
  }
  return out;
}

std::vector<ComplexModeState> evolve_mode_schrodinger(const SampledFunction& w_r,
                                                      const ModeState& psi0, double h,
                                                      double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  using C = std::complex<double>;
  const ModeGrid g = align(w_r, psi0.t, h);
  const C ih(0.0, hbar);
  // iħ dψ/dt = H ψ  with  H = −iħ w^(r)
  const auto rate = [ih](double w, C y) {
    const C hamiltonian = -ih * w;
    return hamiltonian * y / ih;
  };
  const auto rows = rk4_linear<C>(w_r, g, std::vector<C>(psi0.psi.begin(), psi0.psi.end()), h,
                                  rate);
  std::vector<ComplexModeState> out;
  out.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out.push_back({w_r.t0 + static_cast<double>(g.start + k * g.stride) * w_r.dt, rows[k]});
  }
  return out;
}

}  // namespace geospin
