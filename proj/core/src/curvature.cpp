#include "geospin/curvature.hpp"

#include <cmath>

#include "geospin/connection.hpp"
#include "geospin/error.hpp"

namespace geospin {

std::vector<double> christoffel_partials(const MetricField& field, const ChartPoint& p) {
  const MetricAtPoint m = metric_at(field, p);
  const auto dg = metric_partials_at(field, p);
  const std::size_t n = field.dimension();
  const auto idx3 = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };

  // ∂_m ∂_a g_bc
  std::vector<double> ddg(n * n * n * n);
  for (std::size_t mm = 0; mm < n; ++mm) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = b; c < n; ++c) {
          const double v = evaluate(field.second_partial(mm, a, b, c), p.span());
          ddg[((mm * n + a) * n + b) * n + c] = ddg[((mm * n + a) * n + c) * n + b] = v;
        }
      }
    }
  }
  const auto dd = [&](std::size_t mm, std::size_t a, std::size_t b, std::size_t c) {
    return ddg[((mm * n + a) * n + b) * n + c];
  };

  std::vector<double> first(n * n * n);  // Γ_lij
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        first[idx3(l, i, j)] = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
      }
    }
  }

  std::vector<double> out(n * n * n * n, 0.0);
  for (std::size_t mm = 0; mm < n; ++mm) {
    const Eigen::MatrixXd d_inv = -m.g_inv * dg[mm] * m.g_inv;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          double sum = 0.0;
          for (std::size_t l = 0; l < n; ++l) {
            const double d_first = 0.5 * (dd(mm, i, j, l) + dd(mm, j, i, l) - dd(mm, l, i, j));
            sum += d_inv(k, l) * first[idx3(l, i, j)] + m.g_inv(k, l) * d_first;
          }
          out[((mm * n + k) * n + i) * n + j] = out[((mm * n + k) * n + j) * n + i] = sum;
        }
      }
    }
  }
  return out;
}

CurvatureBundle curvature_at(const MetricField& field, const ChartPoint& p) {
  const ChristoffelAtPoint gamma = christoffel_at(field, p);
  const std::vector<double> dgamma = christoffel_partials(field, p);
  const MetricAtPoint m = metric_at(field, p);
  const std::size_t n = field.dimension();
  const auto dG = [&](std::size_t mm, std::size_t k, std::size_t i, std::size_t j) {
    return dgamma[((mm * n + k) * n + i) * n + j];
  };

  CurvatureBundle out;
  out.dimension = n;
  out.point = p;
  out.riemann.assign(n * n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          double v = dG(k, i, l, j) - dG(l, i, k, j);
          for (std::size_t mm = 0; mm < n; ++mm) {
            v += gamma(i, k, mm) * gamma(mm, l, j) - gamma(i, l, mm) * gamma(mm, k, j);
          }
          out.riemann[((i * n + j) * n + k) * n + l] = v;
          out.riemann[((i * n + j) * n + l) * n + k] = -v;
        }
      }
    }
  }

  const auto ni = static_cast<Eigen::Index>(n);
  out.ricci = Eigen::MatrixXd::Zero(ni, ni);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += out(i, j, i, l);
      out.ricci(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = sum;
    }
  }
  out.scalar = (m.g_inv.cwiseProduct(out.ricci)).sum();
  return out;
}

double w_r_from_metric_rate(const Eigen::MatrixXd& g, const Eigen::MatrixXd& g_dot) {
  if (g.rows() != g.cols() || g_dot.rows() != g.rows() || g_dot.cols() != g.cols()) {
    throw DimensionError("metric and metric rate must be square of the same size");
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(g);
  const double det = lu.determinant();
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw DegenerateMetricError("metric is degenerate (det = " + format_number(det) + ")");
  }
  return 0.5 * lu.solve(g_dot).trace();
}

namespace {

// Trace-projected Einstein constant: tr(g⁻¹ Ric) / n = R / n.
double einstein_constant(const MetricField& field, const ChartPoint& p) {
  return curvature_at(field, p).scalar / static_cast<double>(field.dimension());
}

}  // namespace

RicciFlowTrajectory ricci_flow_integrate(const MetricField& field, const ChartPoint& p,
                                         double t_end, double h,
                                         const RicciFlowOptions& options) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidArgument("step size must be positive, got " + format_number(h));
  }
  if (!(t_end > 0.0)) throw InvalidArgument("t_end must be positive");

  const MetricAtPoint g0 = metric_at(field, p);
  const CurvatureBundle k0 = curvature_at(field, p);
  const double n = static_cast<double>(field.dimension());

  RicciFlowTrajectory traj;
  traj.step = h;
  traj.mode = options.mode;
  traj.einstein_constant = k0.scalar / n;

  if (options.mode == FlowMode::Homothetic) {
    const double rho = traj.einstein_constant;
    const double defect = (k0.ricci - rho * g0.g).cwiseAbs().maxCoeff();
    if (defect > options.einstein_tol * (1.0 + std::abs(rho))) {
      throw InvalidArgument("homothetic Ricci flow needs an Einstein metric at the point; " +
                            field.name() + " has |Ric - rho g| = " + format_number(defect) +
                            " (use pointwise mode)");
    }
  }

  // ċ as a function of c
  const auto rate = [&](double c) {
    if (options.mode == FlowMode::Homothetic) return -2.0 * traj.einstein_constant;
    return -2.0 * c * einstein_constant(field.scaled(c), p);
  };

  const auto record = [&](double t, double c) {
    RicciFlowSample s;
    s.t = t;
    s.scale = c;
    s.g = c * g0.g;
    s.g_dot = rate(c) * g0.g;
    const CurvatureBundle k = curvature_at(field.scaled(c), p);
    s.ricci = k.ricci;
    s.scalar = k.scalar;
    s.w_r = w_r_from_metric_rate(s.g, s.g_dot);
    s.residual = std::abs(s.w_r + s.scalar);
    s.flow_residual = (s.g_dot + 2.0 * s.ricci).cwiseAbs().maxCoeff();
    traj.samples.push_back(std::move(s));
  };

  const double threshold = options.extinction_threshold;
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / h - 1e-9));
  double c = 1.0;
  double t = 0.0;
  record(t, c);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t_next = k + 1 == steps ? t_end : static_cast<double>(k + 1) * h;
    const double dt = t_next - t;

    // Stages that would evaluate a collapsed metric mean the flow goes
    // extinct inside this step; extrapolate linearly from the current rate.
    const double k1 = rate(c);
    double c_next = 0.0;
    const double c2 = c + dt / 2 * k1;
    if (options.mode == FlowMode::Pointwise && c2 <= threshold) {
      traj.extinction_time = t + c / -k1;
      return traj;
    }
    const double k2 = rate(c2);
    const double c3 = c + dt / 2 * k2;
    if (options.mode == FlowMode::Pointwise && c3 <= threshold) {
      traj.extinction_time = t + c / -k1;
      return traj;
    }
    const double k3 = rate(c3);
    const double c4 = c + dt * k3;
    if (options.mode == FlowMode::Pointwise && c4 <= threshold) {
      traj.extinction_time = t + c / -k1;
      return traj;
    }
    const double k4 = rate(c4);
    c_next = c + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);

    if (c_next <= threshold) {
      traj.extinction_time = t + dt * c / (c - c_next);
      return traj;
    }
    c = c_next;
    t = t_next;
    record(t, c);
  }
  return traj;
}

CorollaryReport corollary_check(const RicciFlowTrajectory& traj, double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive, got " + format_number(hbar));
  CorollaryReport rep;
  rep.hbar = hbar;
  for (const auto& s : traj.samples) {
    CorollaryReport::Row row;
    row.t = s.t;
    row.h_geospin = {0.0, -hbar * s.w_r};
    row.h_curvature = {0.0, hbar * s.scalar};
    rep.max_deviation = std::max(rep.max_deviation, std::abs(row.h_geospin - row.h_curvature));
    rep.max_abs_scalar = std::max(rep.max_abs_scalar, std::abs(s.scalar));
    rep.rows.push_back(row);
  }
  rep.tolerance = 1e-6 * hbar * (1.0 + rep.max_abs_scalar);
  rep.pass = !rep.rows.empty() && rep.max_deviation <= rep.tolerance;
  return rep;
}

}  // namespace geospin
