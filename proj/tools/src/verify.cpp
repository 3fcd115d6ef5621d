#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "geospin/cli.hpp"
#include "geospin/geospin.hpp"
#include "parallel.hpp"

namespace geospin::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Subject {
  std::string label;
  MetricField field;
  std::optional<double> scalar;  // known constant scalar curvature
};

std::vector<Subject> subjects(const VerifyConfig& config) {
  const auto b = [](std::string name, ManifoldParams params = {}) {
    return builtin_manifold(name, params);
  };
  std::vector<Subject> out{
      {"euclidean", b("euclidean"), 0.0},
      {"euclidean_3d", b("euclidean", {{{"n", 3}}, {}}), 0.0},
      {"sphere", b("sphere"), 2.0},
      {"sphere_r2", b("sphere", {{{"radius", 2.0}}, {}}), 0.5},
      {"poincare_half_plane", b("poincare_half_plane"), -2.0},
      {"poincare_disk", b("poincare_disk"), -2.0},
      {"flat_torus_3d", b("flat_torus", {{{"n", 3}}, {}}), 0.0},
      {"warped_product", b("warped_product"), -2.0},
  };
  if (config.extra) out.push_back({config.extra->name(), *config.extra, std::nullopt});
  return out;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

/// Interior points away from coordinate singularities for the built-in
/// charts; rejection sampling in a box for anything else.
ChartPoint sample_point(const MetricField& f, std::mt19937_64& rng) {
  const std::string& name = f.name();
  if (name == "sphere") return {uniform(rng, 0.3, std::numbers::pi - 0.3), uniform(rng, -3, 3)};
  if (name == "poincare_half_plane") return {uniform(rng, -2, 2), uniform(rng, 0.3, 3)};
  if (name == "poincare_disk") {
    const double r = uniform(rng, 0.0, 0.8);
    const double a = uniform(rng, 0.0, 2 * std::numbers::pi);
    return {r * std::cos(a), r * std::sin(a)};
  }
  if (name == "warped_product") return {uniform(rng, -1.5, 1.5), uniform(rng, -2, 2)};
  if (name == "euclidean" || name == "flat_torus") {
    std::vector<double> xs(f.dimension());
    for (double& x : xs) x = uniform(rng, -2, 2);
    return ChartPoint(std::move(xs));
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<double> xs(f.dimension());
    for (double& x : xs) x = uniform(rng, -1.5, 1.5);
    ChartPoint p(std::move(xs));
    if (!f.contains(p)) continue;
    try {
      metric_at(f, p);
      return p;
    } catch (const Error&) {
    }
  }
  throw Error("could not sample an interior point of " + name);
}

TangentVector sample_velocity(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, -1, 1);
  return TangentVector(std::move(v));
}

GeodesicState sample_geodesic_start(const MetricField& f, std::mt19937_64& rng) {
  ChartPoint x = sample_point(f, rng);
  TangentVector v = sample_velocity(f.dimension(), rng);
  if (f.name() == "sphere") {
    x = {uniform(rng, 1.2, 1.94), uniform(rng, -3, 3)};
    v = {uniform(rng, -0.3, 0.3), uniform(rng, 0.5, 1.0)};
  }
  const double s = norm(f, x, v);
  const double target = uniform(rng, 0.5, 1.5);
  if (s > 0) {
    for (double& c : v.components) c *= target / s;
  }
  return {0.0, std::move(x), std::move(v)};
}

CheckResult make(std::string name, std::string group, std::string manifold, double tol,
                 double observed) {
  CheckResult r;
  r.name = std::move(name);
  r.group = std::move(group);
  r.manifold = std::move(manifold);
  r.tolerance = tol;
  r.observed = observed;
  r.pass = std::isfinite(observed) && observed <= tol;
  return r;
}

using Checks = std::vector<CheckResult>;

// ---------------------------------------------------------------------------
// Per-manifold checks

Checks trace_checks(const Subject& s, std::mt19937_64& rng) {
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const ChartPoint p = sample_point(s.field, rng);
    const TangentVector v = sample_velocity(s.field.dimension(), rng);
    const double av = log_volume_gradient(s.field, p).dot(v.as_eigen());
    const double tr = geospin_matrix(s.field, p, v).w.trace();
    worst = std::max(worst, std::abs(tr - av) / (1 + std::abs(av)));
  }
  return {make("trace_identity", "trace", s.label, 1e-9, worst)};
}

Checks christoffel_checks(const Subject& s, std::mt19937_64& rng) {
  const MetricField& f = s.field;
  const std::size_t n = f.dimension();
  double fd_worst = 0, torsion = 0, compat = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ChartPoint p = sample_point(f, rng);
    const ChristoffelAtPoint c = christoffel_at(f, p);
    const MetricAtPoint m = metric_at(f, p);
    std::vector<Eigen::MatrixXd> dg;
    for (std::size_t q = 0; q < n; ++q) {
      const double h = 1e-6 * std::max(1.0, std::abs(p[q]));
      ChartPoint plus = p, minus = p;
      plus[q] += h;
      minus[q] -= h;
      dg.push_back((metric_at(f, plus).g - metric_at(f, minus).g) / (2 * h));
    }
    const Eigen::MatrixXd ginv = m.g.inverse();
    const auto dg_exact = metric_partials_at(f, p);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double g = 0;
          for (std::size_t l = 0; l < n; ++l) {
            g += 0.5 * ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
          }
          fd_worst = std::max(fd_worst, std::abs(g - c(k, i, j)));
          torsion = std::max(torsion, std::abs(c(k, i, j) - c(k, j, i)));
          double r = dg_exact[k](i, j);
          for (std::size_t l = 0; l < n; ++l) r -= c(l, k, i) * m.g(l, j) + c(l, k, j) * m.g(i, l);
          compat = std::max(compat, std::abs(r) / (1 + std::abs(dg_exact[k](i, j))));
        }
  }
  return {make("christoffel_fd", "christoffel", s.label, 1e-6, fd_worst),
          make("torsion_free", "christoffel", s.label, 0.0, torsion),
          make("metric_compatibility", "christoffel", s.label, 1e-9, compat)};
}

Checks geodesic_checks(const Subject& s, std::mt19937_64& rng) {
  double drift = 0;
  for (int run = 0; run < 2; ++run) {
    const GeodesicTrajectory t = integrate_geodesic(s.field, sample_geodesic_start(s.field, rng),
                                                    2.0, 1e-3);
    const double s0 = speed(s.field, t.samples.front());
    for (const auto& st : t.samples) {
      drift = std::max(drift, std::abs(speed(s.field, st) - s0) / (1 + s0));
    }
  }
  return {make("speed_drift", "geodesic", s.label, 1e-6, drift)};
}

Checks logdet_checks(const Subject& s, std::mt19937_64& rng) {
  double worst = 0;
  for (int run = 0; run < 2; ++run) {
    const GeodesicTrajectory t = integrate_geodesic(s.field, sample_geodesic_start(s.field, rng),
                                                    2.0, 1e-3);
    worst = std::max(worst, logdet_rate_residual(t));
  }
  return {make("logdet_rate", "logdet", s.label, 1e-5, worst)};
}

Checks mode_checks(const Subject& s, std::mt19937_64& rng) {
  const GeodesicTrajectory t =
      integrate_geodesic(s.field, sample_geodesic_start(s.field, rng), 2.0, 1e-3);
  const SampledFunction w = geospin_function_samples(t);
  const auto modes = evolve_mode(w, {0.0, {1.0}}, 2e-3);
  const double l0 = metric_at(s.field, t.samples.front().x).log_sqrt_det;
  double worst = 0;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const double l = metric_at(s.field, t.samples[2 * k].x).log_sqrt_det;
    worst = std::max(worst, std::abs(modes[k].psi[0] * std::exp(l - l0) - 1.0));
  }
  return {make("mode_closed_form", "mode", s.label, 1e-6, worst)};
}

Checks spectrum_checks(const Subject& s, std::mt19937_64& rng, double hbar) {
  double mismatch = 0, trace = 0, residual = 0, map = 0;
  for (int k = 0; k < 20; ++k) {
    const ChartPoint p = sample_point(s.field, rng);
    const GeospinMatrix w = geospin_matrix(s.field, p, sample_velocity(s.field.dimension(), rng));
    const ComplexSpectrum sp = geometric_spectrum(w.w, hbar);
    mismatch = std::max(mismatch, sp.hamiltonian_mismatch);
    Complex sum = 0;
    for (const Complex& l : sp.eigenvalues) sum += l;
    trace = std::max(trace, std::abs(sum - w.trace_w) / (1 + std::abs(w.trace_w)));
    const double wn = w.w.norm();
    for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) {
      if (sp.reliable[i] && wn > 0) residual = std::max(residual, sp.residuals[i] / wn);
      const Complex expect = Complex(0, -hbar) * sp.eigenvalues[i];
      map = std::max(map, std::abs(sp.hamiltonian_eigenvalues[i] - expect) /
                              (1 + std::abs(expect)));
    }
  }
  return {make("hamiltonian_eigenvalues", "spectrum", s.label, 1e-9, mismatch),
          make("eigen_trace", "spectrum", s.label, 1e-9, trace),
          make("eigenpair_residual", "spectrum", s.label, 1e-8, residual),
          make("map_consistency", "spectrum", s.label, 1e-12, map)};
}

double fd_scalar_curvature(const MetricField& f, const ChartPoint& p) {
  const std::size_t n = f.dimension();
  const ChristoffelAtPoint g0 = christoffel_at(f, p);
  std::vector<std::vector<double>> d(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double h = 1e-5 * std::max(1.0, std::abs(p[m]));
    ChartPoint plus = p, minus = p;
    plus[m] += h;
    minus[m] -= h;
    const auto gp = christoffel_at(f, plus).gamma;
    const auto gm = christoffel_at(f, minus).gamma;
    for (std::size_t q = 0; q < gp.size(); ++q) d[m].push_back((gp[q] - gm[q]) / (2 * h));
  }
  const auto D = [&](std::size_t m, std::size_t k, std::size_t i, std::size_t j) {
    return d[m][(k * n + i) * n + j];
  };
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      double r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        r += D(i, i, l, j) - D(l, i, i, j);
        for (std::size_t m = 0; m < n; ++m) {
          r += g0(i, i, m) * g0(m, l, j) - g0(i, l, m) * g0(m, i, j);
        }
      }
      ric(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = r;
    }
  return metric_at(f, p).g_inv.cwiseProduct(ric).sum();
}

Checks curvature_checks(const Subject& s, std::mt19937_64& rng) {
  const MetricField& f = s.field;
  const std::size_t n = f.dimension();
  double fd = 0, scaling = 0, sym = 0, anti = 0, constant = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ChartPoint p = sample_point(f, rng);
    const CurvatureBundle k = curvature_at(f, p);
    fd = std::max(fd, std::abs(k.scalar - fd_scalar_curvature(f, p)));
    const double c = uniform(rng, 0.5, 2.0);
    scaling = std::max(scaling, std::abs(curvature_at(f.scaled(c), p).scalar - k.scalar / c) /
                                    (1 + std::abs(k.scalar)));
    sym = std::max(sym, (k.ricci - k.ricci.transpose()).cwiseAbs().maxCoeff());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            anti = std::max(anti, std::abs(k(i, j, a, b) + k(i, j, b, a)));
          }
    if (s.scalar) constant = std::max(constant, std::abs(k.scalar - *s.scalar));
  }
  Checks out{make("scalar_fd", "curvature", s.label, 1e-5, fd),
             make("scaling_law", "curvature", s.label, 1e-9, scaling),
             make("ricci_symmetry", "curvature", s.label, 1e-9, sym),
             make("riemann_antisymmetry", "curvature", s.label, 1e-9, anti)};
  if (s.scalar) out.push_back(make("scalar_constant", "curvature", s.label, 1e-6, constant));
  return out;
}

Checks corollary_checks(const Subject& s, std::mt19937_64& rng, double hbar) {
  const ChartPoint p = sample_point(s.field, rng);
  RicciFlowTrajectory t;
  try {
    t = ricci_flow_integrate(s.field, p, 3.0, 1e-2);
  } catch (const InvalidArgument&) {
    RicciFlowOptions opts;
    opts.mode = FlowMode::Pointwise;
    t = ricci_flow_integrate(s.field, p, 3.0, 1e-2, opts);
  }
  double max_r = 0, wr = 0, flow = 0, scale = 0;
  for (const auto& x : t.samples) {
    max_r = std::max(max_r, std::abs(x.scalar));
    wr = std::max(wr, x.residual);
    flow = std::max(flow, x.flow_residual / (1 + x.ricci.cwiseAbs().maxCoeff()));
  }
  const CorollaryReport report = corollary_check(t, hbar);
  Checks out{make("wr_plus_scalar", "corollary", s.label, 1e-6, wr / (1 + max_r)),
             make("hamiltonian_equals_i_hbar_r", "corollary", s.label, 1e-6,
                  report.max_deviation / (hbar * (1 + report.max_abs_scalar)))};
  if (t.mode == FlowMode::Homothetic) {
    out.push_back(make("ricci_flow_equation", "corollary", s.label, 1e-9, flow));
  }
  if (s.scalar) {
    const double rho = *s.scalar / static_cast<double>(s.field.dimension());
    for (const auto& x : t.samples) scale = std::max(scale, std::abs(x.scale - (1 - 2 * rho * x.t)));
    out.push_back(make("scale_factor", "corollary", s.label, 1e-9, scale));
    if (rho > 0) {
      const double expected = 1 / (2 * rho);
      const double err = t.extinction_time ? std::abs(*t.extinction_time - expected) : kInf;
      out.push_back(make("extinction_time", "corollary", s.label, 1e-6, err));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed-configuration checks

GeodesicTrajectory semicircle(double h = 1e-3) {
  return integrate_geodesic(builtin_manifold("poincare_half_plane"), {0.0, {0, 1}, {1, 0}}, 1.0, h);
}

Checks fixed_geodesic_checks() {
  const GeodesicTrajectory t = semicircle();
  const MetricField& f = t.manifold;
  double circle = 0, drift = 0;
  const double s0 = speed(f, t.samples.front());
  for (const auto& s : t.samples) {
    circle = std::max(circle, std::abs(s.x[0] * s.x[0] + s.x[1] * s.x[1] - 1));
    drift = std::max(drift, std::abs(speed(f, s) - s0));
  }
  const MetricField e = builtin_manifold("euclidean");
  const GeodesicTrajectory line = integrate_geodesic(e, {0.0, {0, 0}, {1, 0}}, 1.0, 1e-3);
  double straight = 0;
  for (const auto& s : line.samples) {
    straight = std::max({straight, std::abs(s.x[0] - s.t), std::abs(s.x[1]),
                         std::abs(s.v[0] - 1), std::abs(s.v[1])});
  }
  const MetricField sp = builtin_manifold("sphere");
  const double pi = std::numbers::pi;
  const GeodesicTrajectory eq = integrate_geodesic(sp, {0.0, {pi / 2, 0}, {0, 1}}, pi, 1e-3);
  double equator = std::abs(eq.samples.back().x[1] - pi);
  for (const auto& s : eq.samples) equator = std::max(equator, std::abs(s.x[0] - pi / 2));
  return {make("semicircle", "geodesic", "poincare_half_plane", 1e-6, circle),
          make("semicircle_speed_drift", "geodesic", "poincare_half_plane", 1e-6, drift),
          make("straight_line", "geodesic", "euclidean", 1e-12, straight),
          make("equator", "geodesic", "sphere", 1e-8, equator)};
}

Checks fixed_logdet_checks() {
  return {make("semicircle_logdet_rate", "logdet", "poincare_half_plane", 1e-5,
               logdet_rate_residual(semicircle()))};
}

Checks fixed_mode_checks(double hbar) {
  const SampledFunction w = geospin_function_samples(semicircle());
  const auto modes = evolve_mode(w, {0.0, {1.0}}, 2e-3);
  const auto schr = evolve_mode_schrodinger(w, {0.0, {1.0}}, 2e-3, hbar);
  double sech = 0, agree = 0;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const double c = 1 / std::cosh(modes[k].t);
    sech = std::max(sech, std::abs(modes[k].psi[0] - c * c));
    agree = std::max(agree, std::abs(schr[k].psi[0] - modes[k].psi[0]));
  }
  return {make("sech_squared_amplitude", "mode", "poincare_half_plane", 1e-6, sech),
          make("schrodinger_agreement", "mode", "poincare_half_plane", 1e-12, agree)};
}

Checks fixed_spectrum_checks(std::mt19937_64& rng, double hbar) {
  Eigen::MatrixXd rot(2, 2);
  rot << 0, -1, 1, 0;
  const auto ev = eigenvalues_real_nonsymmetric(rot);
  const double rotation = std::max(std::abs(ev[0] - Complex(0, -1)), std::abs(ev[1] - Complex(0, 1)));

  double similar = 0;
  for (int k = 0; k < 20; ++k) {
    Eigen::MatrixXd w(4, 4), s(4, 4);
    for (Eigen::Index i = 0; i < 16; ++i) w(i) = uniform(rng, -1, 1);
    for (Eigen::Index i = 0; i < 16; ++i) s(i) = uniform(rng, -1, 1);
    s += 2 * Eigen::MatrixXd::Identity(4, 4);
    const auto a = eigenvalues_real_nonsymmetric(w);
    const auto b = eigenvalues_real_nonsymmetric(s.inverse() * w * s);
    similar = std::max(similar, multiset_distance(a, b));
  }

  const GeospinMatrix hw =
      geospin_matrix(builtin_manifold("poincare_half_plane"), {0, 1}, {1, 0});
  const ComplexSpectrum sp = geometric_spectrum(hw.w, hbar);
  const std::vector<Complex> expect{Complex(-hbar), Complex(hbar)};
  return {make("rotation_generator", "spectrum", "matrix", 1e-10, rotation),
          make("similarity_invariance", "spectrum", "matrix", 1e-8, similar),
          make("half_plane_energies", "spectrum", "poincare_half_plane", 1e-12,
               multiset_distance(sp.hamiltonian_eigenvalues, expect))};
}

Checks fixed_rk4_checks() {
  const MetricField f = builtin_manifold("poincare_half_plane");
  const GeodesicState s0{0.0, {0, 1}, {1, 0.5}};
  const auto endpoint = [&](double h) {
    const GeodesicTrajectory t = integrate_geodesic(f, s0, 1.0, h);
    return Eigen::Vector2d(t.samples.back().x[0], t.samples.back().x[1]);
  };
  const Eigen::Vector2d ref = endpoint(1e-5);
  const double factor = (endpoint(0.1) - ref).norm() / (endpoint(0.05) - ref).norm();
  CheckResult r = make("convergence_factor", "rk4", "poincare_half_plane", 4.0,
                       std::abs(factor - 16.0));
  r.note = "step-halving error ratio " + format_number(factor) + ", expected 16 +/- 4";
  return {r};
}

struct Task {
  std::string group;
  std::function<Checks(std::mt19937_64&)> run;
  std::string label;
  std::uint64_t stream = 0;
};

}  // namespace

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups{"trace", "christoffel", "geodesic",
                                               "logdet", "mode", "spectrum",
                                               "curvature", "corollary", "rk4"};
  return groups;
}

VerificationReport run_verify(const VerifyConfig& config) {
  const auto subs = subjects(config);
  const double hbar = config.hbar;
  std::vector<Task> tasks;
  const auto& groups = check_groups();
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::string& g = groups[gi];
    if (!config.only.empty() && !config.only.count(g)) continue;
    const auto stream = [&](std::size_t si) { return (gi + 1) * 1000 + si; };
    if (g == "geodesic") tasks.push_back({g, [](auto&) { return fixed_geodesic_checks(); }, "", 0});
    if (g == "logdet") tasks.push_back({g, [](auto&) { return fixed_logdet_checks(); }, "", 0});
    if (g == "mode") {
      tasks.push_back({g, [hbar](auto&) { return fixed_mode_checks(hbar); }, "", 0});
    }
    if (g == "spectrum") {
      tasks.push_back({g, [hbar](auto& r) { return fixed_spectrum_checks(r, hbar); }, "",
                       stream(999)});
    }
    if (g == "rk4") {
      tasks.push_back({g, [](auto&) { return fixed_rk4_checks(); }, "", 0});
      continue;
    }
    for (std::size_t si = 0; si < subs.size(); ++si) {
      const Subject& s = subs[si];
      std::function<Checks(std::mt19937_64&)> fn;
      if (g == "trace") fn = [&s](auto& r) { return trace_checks(s, r); };
      if (g == "christoffel") fn = [&s](auto& r) { return christoffel_checks(s, r); };
      if (g == "geodesic") fn = [&s](auto& r) { return geodesic_checks(s, r); };
      if (g == "logdet") fn = [&s](auto& r) { return logdet_checks(s, r); };
      if (g == "mode") fn = [&s](auto& r) { return mode_checks(s, r); };
      if (g == "spectrum") fn = [&s, hbar](auto& r) { return spectrum_checks(s, r, hbar); };
      if (g == "curvature") fn = [&s](auto& r) { return curvature_checks(s, r); };
      if (g == "corollary") fn = [&s, hbar](auto& r) { return corollary_checks(s, r, hbar); };
      tasks.push_back({g, fn, s.label, stream(si)});
    }
  }

  const auto results = parallel_map(tasks.size(), config.jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    // each task draws from its own stream, so filtering never shifts samples
    std::mt19937_64 rng(config.seed ^ (0x9E3779B97F4A7C15ULL * (t.stream + 1)));
    try {
      return t.run(rng);
    } catch (const Error& e) {
      CheckResult r = make(t.group + "_run", t.group, t.label.empty() ? "fixed" : t.label, 0.0,
                           kInf);
      r.note = e.what();
      return Checks{r};
    }
  });

  VerificationReport report;
  report.seed = config.seed;
  report.hbar = hbar;
  for (const auto& cs : results) report.checks.insert(report.checks.end(), cs.begin(), cs.end());
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return report;
}

std::string VerificationReport::to_json() const {
  using nlohmann::ordered_json;
  const auto num = [](double x) -> ordered_json {
    if (!std::isfinite(x)) return nullptr;
    return x == 0.0 ? 0.0 : x;
  };
  ordered_json list = ordered_json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    ordered_json j;
    j["name"] = c.name;
    j["group"] = c.group;
    j["manifold"] = c.manifold;
    j["tolerance"] = num(c.tolerance);
    j["observed"] = num(c.observed);
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    list.push_back(std::move(j));
    passed += c.pass ? 1 : 0;
  }
  ordered_json doc;
  doc["seed"] = seed;
  doc["hbar"] = num(hbar);
  doc["checks"] = std::move(list);
  doc["summary"] = {{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}};
  doc["pass"] = pass;
  return doc.dump(2) + "\n";
}

}  // namespace geospin::cli
