#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "geospin/cli.hpp"
#include "geospin/geospin.hpp"
#include "parallel.hpp"

namespace geospin::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string manifold;
  std::string manifest;
  std::optional<double> dim;
  std::optional<double> radius;
  std::string profile;
  std::string point;
  std::string velocity;
  double hbar = 1.0;
  double h = 1e-3;
  double t_end = 1.0;
  std::string format;
  std::uint64_t seed = 42;
  std::string output;
  std::string only;
  std::string sweep;
  unsigned jobs = 1;
  std::string plot_data;
  std::string save_manifest;
  std::string mode = "homothetic";
  std::string summary;
};

double clean(double x) { return x == 0.0 ? 0.0 : x; }

ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return clean(x);
}

ordered_json vector_json(std::span<const double> xs) {
  ordered_json a = ordered_json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json complex_json(std::span<const Complex> zs) {
  ordered_json a = ordered_json::array();
  for (const Complex& z : zs) a.push_back({{"re", number(z.real())}, {"im", number(z.imag())}});
  return a;
}

std::string csv_number(double x) { return format_number(clean(x)); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw Error("cannot write '" + path + "'");
}

std::vector<double> parse_reals(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      out.push_back(evaluate(parse_expr(item, {}), {}));
    } catch (const Error& e) {
      throw UsageError(flag + ": cannot read '" + item + "' as a number (" + e.what() + ")");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

MetricField load_field(const Options& o) {
  if (!o.manifest.empty()) {
    const std::string text = read_text(o.manifest);
    try {
      return load_manifest(text);
    } catch (const InvalidArgument& e) {
      throw LoadError(o.manifest + ": " + e.what());
    }
  }
  if (o.manifold.empty()) throw UsageError("one of --manifold or --manifest is required");
  ManifoldParams params;
  if (o.dim) params.values["n"] = *o.dim;
  if (o.radius) params.values["radius"] = *o.radius;
  if (!o.profile.empty()) params.expressions["profile"] = o.profile;
  try {
    return builtin_manifold(o.manifold, params);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

ChartPoint point_of(const MetricField& f, const Options& o) {
  if (o.point.empty()) throw UsageError("--point is required");
  std::vector<double> xs = parse_reals(o.point, "--point");
  if (xs.size() != f.dimension()) {
    throw UsageError("--point has " + std::to_string(xs.size()) + " values but " + f.name() +
                     " is " + std::to_string(f.dimension()) + "-dimensional");
  }
  return ChartPoint(std::move(xs));
}

TangentVector vector_of(const MetricField& f, const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  std::vector<double> xs = parse_reals(text, flag);
  if (xs.size() != f.dimension()) {
    throw UsageError(flag + " has " + std::to_string(xs.size()) + " values but " + f.name() +
                     " is " + std::to_string(f.dimension()) + "-dimensional");
  }
  return TangentVector(std::move(xs));
}

std::string format_or(const Options& o, const std::string& fallback,
                      std::initializer_list<std::string> allowed, const std::string& command) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const auto& a : allowed) {
    if (a == f) return f;
  }
  throw UsageError(command + " does not support --format " + f);
}

void write_plot(const Options& o, const std::string& file,
                const std::vector<std::pair<double, double>>& xy) {
  std::filesystem::create_directories(o.plot_data);
  std::string text;
  for (const auto& [x, y] : xy) text += csv_number(x) + " " + csv_number(y) + "\n";
  write_text((std::filesystem::path(o.plot_data) / file).string(), text);
}

struct Emitted {
  std::string text;
  int code = kExitOk;
};

// ---------------------------------------------------------------------------

Emitted cmd_list(const Options& o) {
  const std::string fmt = format_or(o, "text", {"text", "json"}, "list-manifolds");
  std::string text;
  if (fmt == "json") {
    ordered_json a = ordered_json::array();
    for (const auto& z : manifold_zoo()) {
      a.push_back({{"name", z.name}, {"dimension", z.dimension}, {"description", z.description}});
    }
    text = a.dump(2) + "\n";
  } else {
    for (const auto& z : manifold_zoo()) {
      text += z.name + "\t" + std::to_string(z.dimension) + "\t" + z.description + "\n";
    }
  }
  return {text};
}

Emitted cmd_christoffel(const MetricField& f, const Options& o) {
  format_or(o, "json", {"json"}, "christoffel");
  const ChartPoint p = point_of(f, o);
  const ChristoffelAtPoint c = christoffel_at(f, p);
  const std::size_t n = f.dimension();
  ordered_json gamma = ordered_json::array();
  for (std::size_t k = 0; k < n; ++k) {
    ordered_json slab = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(number(c(k, i, j)));
      slab.push_back(std::move(row));
    }
    gamma.push_back(std::move(slab));
  }
  ordered_json doc;
  doc["manifold"] = f.name();
  doc["coordinates"] = std::vector<std::string>(f.coordinates().begin(), f.coordinates().end());
  doc["point"] = vector_json(p.span());
  doc["index_order"] = "gamma[k][i][j] = Gamma^k_ij (k upper, i and j lower)";
  doc["gamma"] = std::move(gamma);
  const Eigen::VectorXd& a = c.log_volume_gradient;
  doc["log_volume_gradient"] = vector_json({a.data(), static_cast<std::size_t>(a.size())});
  return {doc.dump(2) + "\n"};
}

Emitted cmd_geospin(const MetricField& f, const Options& o) {
  format_or(o, "json", {"json"}, "geospin");
  const ChartPoint p = point_of(f, o);
  const TangentVector v = vector_of(f, o.velocity, "--velocity");
  const ChristoffelAtPoint c = christoffel_at(f, p);
  const GeospinMatrix w = geospin_matrix(c, v);
  const GeospinSplit split = split_diag_offdiag(w);
  const LoweredGeospin low = geospin_lowered(c, lower_index(f, p, v));
  ordered_json doc;
  doc["manifold"] = f.name();
  doc["point"] = vector_json(p.span());
  doc["velocity"] = vector_json(v.components);
  doc["layout"] = "W[i][j] = W^i_j = Gamma^i_jk v^k (row = upper index i)";
  doc["W"] = matrix_json(w.w);
  doc["W_r"] = matrix_json(split.diagonal);
  doc["W_a"] = matrix_json(split.hollow);
  doc["W_lowered"] = matrix_json(low.w_low);
  doc["trace"] = number(w.trace_w);
  doc["log_volume_rate"] = number(w.log_volume_rate);
  return {doc.dump(2) + "\n"};
}

Emitted cmd_spectrum(const MetricField& f, const Options& o) {
  format_or(o, "json", {"json"}, "spectrum");
  const ChartPoint p = point_of(f, o);
  const TangentVector v = vector_of(f, o.velocity, "--velocity");
  const GeospinMatrix w = geospin_matrix(f, p, v);
  const ComplexSpectrum s = geometric_spectrum(w.w, o.hbar);
  ordered_json doc;
  doc["manifold"] = f.name();
  doc["point"] = vector_json(p.span());
  doc["velocity"] = vector_json(v.components);
  doc["hbar"] = number(o.hbar);
  doc["W"] = matrix_json(w.w);
  doc["trace"] = number(w.trace_w);
  doc["eig_W"] = complex_json(s.eigenvalues);
  doc["lambda_re"] = complex_json(s.hamiltonian_eigenvalues);
  doc["residuals"] = vector_json(s.residuals);
  doc["reliable"] = s.reliable;
  doc["hamiltonian_mismatch"] = number(s.hamiltonian_mismatch);
  doc["hamiltonian_check"] = s.hamiltonian_check_passed;
  if (!o.plot_data.empty()) {
    std::vector<std::pair<double, double>> a, b;
    for (const Complex& z : s.eigenvalues) a.emplace_back(z.real(), z.imag());
    for (const Complex& z : s.hamiltonian_eigenvalues) b.emplace_back(z.real(), z.imag());
    write_plot(o, "spectrum_eig_W.dat", a);
    write_plot(o, "spectrum_lambda_re.dat", b);
  }
  return {doc.dump(2) + "\n", s.hamiltonian_check_passed ? kExitOk : kExitFailure};
}

struct GeodesicRun {
  TangentVector v0;
  std::vector<GeodesicState> samples;
  std::vector<double> speed;
  std::vector<double> w_r;
  std::optional<double> logdet_residual;
  std::string error;
};

GeodesicRun run_geodesic(const MetricField& f, const ChartPoint& p, const TangentVector& v,
                         const Options& o) {
  GeodesicRun run{v, {}, {}, {}, std::nullopt, {}};
  std::optional<GeodesicTrajectory> result;
  try {
    result = integrate_geodesic(f, {0.0, p, v}, o.t_end, o.h);
  } catch (const IntegrationError& e) {
    result = e.partial();
    const GeodesicState& last = e.last_valid();
    std::string state;
    for (double x : last.x.coords) state += (state.empty() ? "" : ",") + csv_number(x);
    run.error = std::string(e.what()) + "; last valid state t = " + csv_number(last.t) +
                ", x = (" + state + ")";
  }
  const GeodesicTrajectory& traj = *result;
  run.samples = traj.samples;
  for (const auto& s : traj.samples) run.speed.push_back(speed(f, s));
  run.w_r = geospin_function_along(traj);
  if (traj.samples.size() >= 3) run.logdet_residual = logdet_rate_residual(traj);
  return run;
}

ordered_json geodesic_json(const GeodesicRun& r) {
  ordered_json samples = ordered_json::array();
  for (std::size_t k = 0; k < r.samples.size(); ++k) {
    const auto& s = r.samples[k];
    samples.push_back({{"t", number(s.t)},
                       {"x", vector_json(s.x.coords)},
                       {"v", vector_json(s.v.components)},
                       {"speed", number(r.speed[k])},
                       {"w_r", number(r.w_r[k])}});
  }
  ordered_json doc;
  doc["initial_velocity"] = vector_json(r.v0.components);
  doc["logdet_rate_residual"] = r.logdet_residual ? number(*r.logdet_residual) : nullptr;
  if (!r.error.empty()) doc["error"] = r.error;
  doc["samples"] = std::move(samples);
  return doc;
}

std::string geodesic_csv(const GeodesicRun& r, std::optional<std::size_t> run_index) {
  std::string text;
  for (std::size_t k = 0; k < r.samples.size(); ++k) {
    const auto& s = r.samples[k];
    if (run_index) text += std::to_string(*run_index) + ",";
    text += csv_number(s.t);
    for (double x : s.x.coords) text += "," + csv_number(x);
    for (double v : s.v.components) text += "," + csv_number(v);
    text += "," + csv_number(r.speed[k]) + "," + csv_number(r.w_r[k]) + "\n";
  }
  return text;
}

void geodesic_plots(const GeodesicRun& r, const Options& o, const std::string& suffix) {
  std::vector<std::pair<double, double>> xy, sp, wr;
  for (std::size_t k = 0; k < r.samples.size(); ++k) {
    const auto& s = r.samples[k];
    xy.emplace_back(s.x.size() >= 2 ? s.x[0] : s.t, s.x.size() >= 2 ? s.x[1] : s.x[0]);
    sp.emplace_back(s.t, r.speed[k]);
    wr.emplace_back(s.t, r.w_r[k]);
  }
  write_plot(o, "geodesic_xy" + suffix + ".dat", xy);
  write_plot(o, "geodesic_speed" + suffix + ".dat", sp);
  write_plot(o, "geodesic_w_r" + suffix + ".dat", wr);
}

Emitted cmd_geodesic(const MetricField& f, const Options& o, std::ostream& err) {
  const std::string fmt = format_or(o, "csv", {"csv", "json"}, "geodesic");
  const ChartPoint p = point_of(f, o);
  std::vector<TangentVector> velocities;
  const bool sweep = !o.sweep.empty();
  if (sweep) {
    std::size_t start = 0;
    while (true) {
      const std::size_t semi = o.sweep.find(';', start);
      velocities.push_back(vector_of(
          f, o.sweep.substr(start, semi == std::string::npos ? semi : semi - start), "--sweep"));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  } else {
    velocities.push_back(vector_of(f, o.velocity, "--velocity"));
  }
  f.require_in_domain(p);

  const auto runs = parallel_map(velocities.size(), o.jobs, [&](std::size_t i) {
    return run_geodesic(f, p, velocities[i], o);
  });

  int code = kExitOk;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].error.empty()) continue;
    err << "error: " << (sweep ? "run " + std::to_string(i) + ": " : "") << runs[i].error << "\n";
    code = kExitFailure;
  }
  if (!o.plot_data.empty()) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      geodesic_plots(runs[i], o, sweep ? "_run" + std::to_string(i) : "");
    }
  }

  const std::size_t n = f.dimension();
  if (fmt == "csv") {
    std::string text = sweep ? "run,t" : "t";
    for (std::size_t i = 1; i <= n; ++i) text += ",x" + std::to_string(i);
    for (std::size_t i = 1; i <= n; ++i) text += ",v" + std::to_string(i);
    text += ",speed,w_r\n";
    for (std::size_t i = 0; i < runs.size(); ++i) {
      text += geodesic_csv(runs[i], sweep ? std::optional<std::size_t>(i) : std::nullopt);
    }
    return {text, code};
  }
  ordered_json doc;
  doc["manifold"] = f.name();
  doc["point"] = vector_json(p.span());
  doc["h"] = number(o.h);
  doc["t_end"] = number(o.t_end);
  if (sweep) {
    ordered_json list = ordered_json::array();
    for (const auto& r : runs) list.push_back(geodesic_json(r));
    doc["runs"] = std::move(list);
  } else {
    const ordered_json single = geodesic_json(runs.front());
    for (const auto& [k, v] : single.items()) doc[k] = v;
  }
  return {doc.dump(2) + "\n", code};
}

Emitted cmd_ricci(const MetricField& f, const Options& o) {
  const std::string fmt = format_or(o, "csv", {"csv", "json"}, "ricci-flow");
  const ChartPoint p = point_of(f, o);
  RicciFlowOptions opts;
  opts.mode = o.mode == "pointwise" ? FlowMode::Pointwise : FlowMode::Homothetic;
  RicciFlowTrajectory traj;
  try {
    traj = ricci_flow_integrate(f, p, o.t_end, o.h, opts);
  } catch (const InvalidArgument& e) {
    // not an Einstein metric, or bad step: a property of the input, not a crash
    throw Error(e.what());
  }
  const CorollaryReport report = corollary_check(traj, o.hbar);

  double max_residual = 0;
  for (const auto& s : traj.samples) max_residual = std::max(max_residual, s.residual);
  ordered_json summary;
  summary["manifold"] = f.name();
  summary["point"] = vector_json(p.span());
  summary["mode"] = o.mode;
  summary["h"] = number(o.h);
  summary["t_end"] = number(o.t_end);
  summary["hbar"] = number(o.hbar);
  summary["einstein_constant"] = number(traj.einstein_constant);
  summary["extinction_time"] = traj.extinction_time ? number(*traj.extinction_time) : nullptr;
  summary["sample_count"] = traj.samples.size();
  summary["max_residual"] = number(max_residual);
  summary["corollary"] = {{"max_deviation", number(report.max_deviation)},
                          {"max_abs_scalar", number(report.max_abs_scalar)},
                          {"tolerance", number(report.tolerance)},
                          {"pass", report.pass}};
  if (!o.summary.empty()) write_text(o.summary, summary.dump(2) + "\n");

  if (!o.plot_data.empty()) {
    std::vector<std::pair<double, double>> c, r, w;
    for (const auto& s : traj.samples) {
      c.emplace_back(s.t, s.scale);
      r.emplace_back(s.t, s.scalar);
      w.emplace_back(s.t, s.w_r);
    }
    write_plot(o, "ricci_scale.dat", c);
    write_plot(o, "ricci_scalar.dat", r);
    write_plot(o, "ricci_w_r.dat", w);
  }

  const int code = report.pass ? kExitOk : kExitFailure;
  if (fmt == "csv") {
    std::string text = "t,c,R,w_r,residual\n";
    for (const auto& s : traj.samples) {
      text += csv_number(s.t) + "," + csv_number(s.scale) + "," + csv_number(s.scalar) + "," +
              csv_number(s.w_r) + "," + csv_number(s.residual) + "\n";
    }
    return {text, code};
  }
  ordered_json samples = ordered_json::array();
  for (const auto& s : traj.samples) {
    samples.push_back({{"t", number(s.t)},
                       {"c", number(s.scale)},
                       {"R", number(s.scalar)},
                       {"w_r", number(s.w_r)},
                       {"residual", number(s.residual)}});
  }
  summary["samples"] = std::move(samples);
  return {summary.dump(2) + "\n", code};
}

Emitted cmd_verify(const Options& o) {
  format_or(o, "json", {"json"}, "verify");
  VerifyConfig config;
  config.seed = o.seed;
  config.hbar = o.hbar;
  config.jobs = o.jobs;
  if (!o.only.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = o.only.find(',', start);
      const std::string g = o.only.substr(start, comma == std::string::npos ? comma : comma - start);
      const auto& groups = check_groups();
      if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
        std::string known;
        for (const auto& x : groups) known += (known.empty() ? "" : ", ") + x;
        throw UsageError("--only: unknown check group '" + g + "' (known: " + known + ")");
      }
      config.only.insert(g);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (!o.manifest.empty() || !o.manifold.empty()) config.extra = load_field(o);
  const VerificationReport report = run_verify(config);
  return {report.to_json(), report.pass ? kExitOk : kExitFailure};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Geospin differential-geometry toolkit", "geospin");
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  const auto manifold_opts = [&](CLI::App* s) {
    auto* m = s->add_option("--manifold", o.manifold, "built-in manifold (see list-manifolds)");
    auto* f = s->add_option("--manifest", o.manifest, "manifold manifest JSON file");
    m->excludes(f);
    s->add_option("--dim", o.dim, "dimension n for euclidean / flat_torus");
    s->add_option("--radius", o.radius, "sphere radius");
    s->add_option("--profile", o.profile, "warped_product profile f(r)");
    s->add_option("--save-manifest", o.save_manifest, "write the loaded manifold as a manifest");
  };
  const auto point_opts = [&](CLI::App* s) {
    s->add_option("--point", o.point, "chart point, comma-separated");
  };
  const auto velocity_opts = [&](CLI::App* s) {
    s->add_option("--velocity", o.velocity, "tangent vector (upper index), comma-separated");
  };
  const auto common_opts = [&](CLI::App* s) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--output", o.output, "write the primary output to this file");
  };
  const auto hbar_opt = [&](CLI::App* s) {
    s->add_option("--hbar", o.hbar, "reduced Planck constant (default 1)")->check(CLI::PositiveNumber);
  };
  const auto step_opts = [&](CLI::App* s) {
    s->add_option("--h", o.h, "step size (default 1e-3)")->check(CLI::PositiveNumber);
    s->add_option("--t-end", o.t_end, "final time (default 1)")->check(CLI::PositiveNumber);
    s->add_option("--plot-data", o.plot_data, "directory for gnuplot two-column files");
  };
  const auto jobs_opt = [&](CLI::App* s) {
    s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* list = app.add_subcommand("list-manifolds", "list the built-in manifolds");
  common_opts(list);

  auto* chr = app.add_subcommand("christoffel", "Christoffel symbols at a point");
  manifold_opts(chr);
  point_opts(chr);
  common_opts(chr);

  auto* geo = app.add_subcommand("geospin", "geospin matrix, its split, and trace");
  manifold_opts(geo);
  point_opts(geo);
  velocity_opts(geo);
  common_opts(geo);

  auto* gd = app.add_subcommand("geodesic", "integrate a geodesic with RK4");
  manifold_opts(gd);
  point_opts(gd);
  velocity_opts(gd);
  common_opts(gd);
  step_opts(gd);
  jobs_opt(gd);
  gd->add_option("--sweep", o.sweep, "initial velocities 'v;v;...', one trajectory each");

  auto* sp = app.add_subcommand("spectrum", "eigenvalues of W and the Hamiltonian map");
  manifold_opts(sp);
  point_opts(sp);
  velocity_opts(sp);
  common_opts(sp);
  hbar_opt(sp);
  sp->add_option("--plot-data", o.plot_data, "directory for gnuplot two-column files");

  auto* rf = app.add_subcommand("ricci-flow", "Ricci flow of the metric at a point");
  manifold_opts(rf);
  point_opts(rf);
  common_opts(rf);
  step_opts(rf);
  hbar_opt(rf);
  rf->add_option("--mode", o.mode, "homothetic (Einstein metrics) or pointwise")
      ->check(CLI::IsMember({"homothetic", "pointwise"}));
  rf->add_option("--summary", o.summary, "write the JSON summary to this file");

  auto* vf = app.add_subcommand("verify", "run the seeded verification suite");
  manifold_opts(vf);
  common_opts(vf);
  hbar_opt(vf);
  jobs_opt(vf);
  vf->add_option("--seed", o.seed, "random seed (default 42)");
  vf->add_option("--only", o.only, "comma-separated check groups");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Emitted result;
    if (list->parsed()) {
      result = cmd_list(o);
    } else if (vf->parsed()) {
      result = cmd_verify(o);
    } else {
      const MetricField f = load_field(o);
      if (!o.save_manifest.empty()) write_text(o.save_manifest, manifest_json(f));
      if (chr->parsed()) result = cmd_christoffel(f, o);
      if (geo->parsed()) result = cmd_geospin(f, o);
      if (gd->parsed()) result = cmd_geodesic(f, o, err);
      if (sp->parsed()) result = cmd_spectrum(f, o);
      if (rf->parsed()) result = cmd_ricci(f, o);
    }
    if (o.output.empty()) {
      out << result.text;
    } else {
      write_text(o.output, result.text);
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace geospin::cli
