// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "geospin/geospin.hpp"
#include "support/oracles.hpp"

namespace {

using namespace geospin;
using geospin::testing::uniform;
using C = std::complex<double>;

const double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// "name observed <= tol" fragment and the combined pass flag.
struct Ledger {
  bool pass = true;
  std::string text;
  void add(const std::string& what, double observed, double tol) {
    const bool ok = std::isfinite(observed) && observed <= tol;
    pass = pass && ok;
    if (!text.empty()) text += "; ";
    text += what + " " + sci(observed) + (ok ? " <= " : " > ") + sci(tol);
  }
  void require(const std::string& what, bool ok) {
    pass = pass && ok;
    if (!text.empty()) text += "; ";
    text += what + (ok ? " ok" : " FAILED");
  }
  Outcome done() const { return {pass, text}; }
};

std::vector<MetricField> zoo() {
  std::vector<MetricField> out;
  for (const auto& z : testing::zoo_cases()) out.push_back(builtin_manifold(z.name, z.params));
  return out;
}

Outcome trace_identity() {
  std::mt19937_64 rng(101);
  double worst = 0;
  for (const MetricField& f : zoo()) {
    for (int k = 0; k < 100; ++k) {
      const ChartPoint p = testing::sample_point(f, rng);
      const TangentVector v = testing::sample_velocity(f.dimension(), rng);
      const double av = log_volume_gradient(f, p).dot(v.as_eigen());
      const double tr = geospin_matrix(f, p, v).w.trace();
      worst = std::max(worst, std::abs(tr - av) / (1 + std::abs(av)));
    }
  }
  Ledger l;
  l.add("max |tr W - A.v|/(1+|A.v|)", worst, 1e-9);
  return l.done();
}

Outcome christoffel_oracle() {
  std::mt19937_64 rng(102);
  double worst = 0;
  for (const MetricField& f : zoo()) {
    for (int k = 0; k < 20; ++k) {
      const ChartPoint p = testing::sample_point(f, rng);
      const auto exact = christoffel_at(f, p).gamma;
      const auto fd = testing::fd_christoffel(f, p, 1e-6);
      for (std::size_t q = 0; q < fd.size(); ++q) worst = std::max(worst, std::abs(exact[q] - fd[q]));
    }
  }
  Ledger l;
  l.add("max |Gamma - Gamma_fd|", worst, 1e-6);
  return l.done();
}

double speed_drift(const MetricField& f, const GeodesicTrajectory& t) {
  const double s0 = speed(f, t.samples.front());
  double d = 0;
  for (const auto& s : t.samples) d = std::max(d, std::abs(speed(f, s) - s0));
  return d;
}

Outcome geodesic_correctness() {
  Ledger l;
  double drift = 0;

  const MetricField h = builtin_manifold("poincare_half_plane");
  const GeodesicTrajectory semi = integrate_geodesic(h, {0.0, {0, 1}, {1, 0}}, 1.0, 1e-3);
  double circle = 0;
  for (const auto& s : semi.samples) {
    circle = std::max(circle, std::abs(std::hypot(s.x[0], s.x[1]) - 1));
  }
  drift = std::max(drift, speed_drift(h, semi));
  l.require("semicircle reaches t=1", semi.samples.back().t == 1.0);
  l.add("semicircle max | |x| - 1 |", circle, 1e-6);

  std::mt19937_64 rng(103);
  double straight = 0;
  for (int n : {2, 3}) {
    const MetricField e = builtin_manifold("euclidean", {{{"n", double(n)}}, {}});
    for (int k = 0; k < 5; ++k) {
      const ChartPoint x0 = testing::sample_point(e, rng);
      const TangentVector v0 = testing::sample_velocity(e.dimension(), rng);
      const GeodesicTrajectory t = integrate_geodesic(e, {0.0, x0, v0}, 1.0, 1e-3);
      for (const auto& s : t.samples)
        for (std::size_t i = 0; i < e.dimension(); ++i) {
          straight = std::max(straight, std::abs(s.x[i] - (x0[i] + v0[i] * s.t)));
          straight = std::max(straight, std::abs(s.v[i] - v0[i]));
        }
      drift = std::max(drift, speed_drift(e, t));
    }
  }
  l.add("euclidean max error", straight, 1e-12);

  for (const MetricField& f : zoo()) {
    for (int k = 0; k < 2; ++k) {
      const auto [x0, v0] = testing::sample_geodesic_start(f, rng);
      drift = std::max(drift, speed_drift(f, integrate_geodesic(f, {0.0, x0, v0}, 2.0, 1e-3)));
    }
  }
  l.add("max speed drift", drift, 1e-6);
  return l.done();
}

Outcome logdet_rate() {
  std::mt19937_64 rng(104);
  double worst = 0;
  for (const MetricField& f : zoo()) {
    for (int k = 0; k < 3; ++k) {
      const auto [x0, v0] = testing::sample_geodesic_start(f, rng);
      worst = std::max(worst, logdet_rate_residual(integrate_geodesic(f, {0.0, x0, v0}, 2.0, 1e-3)));
    }
  }
  Ledger l;
  l.add("max |d/dt ln sqrt g - w_r|", worst, 1e-5);
  return l.done();
}

Outcome spectrum() {
  Ledger l;
  Eigen::MatrixXd rot(2, 2);
  rot << 0, -1, 1, 0;
  l.add("eig(rotation) vs {+i,-i}",
        testing::match_distance(eigenvalues_real_nonsymmetric(rot), {C(0, 1), C(0, -1)}), 1e-10);

  std::mt19937_64 rng(105);
  double cubic = 0;
  for (int k = 0; k < 100; ++k) {
    Eigen::Matrix3d m;
    for (Eigen::Index i = 0; i < 9; ++i) m(i) = uniform(rng, -1, 1);
    cubic = std::max(cubic, testing::match_distance(eigenvalues_real_nonsymmetric(m),
                                                    testing::cubic_roots(m)));
  }
  l.add("random 3x3 vs cubic roots", cubic, 1e-9);

  double ham = 0, trace = 0;
  for (const MetricField& f : zoo()) {
    for (int k = 0; k < 10; ++k) {
      const ChartPoint p = testing::sample_point(f, rng);
      const GeospinMatrix w = geospin_matrix(f, p, testing::sample_velocity(f.dimension(), rng));
      const double hbar = uniform(rng, 0.5, 2.0);
      const auto eig_w = eigenvalues_real_nonsymmetric(w.w);
      const Eigen::MatrixXcd h = hamiltonian_matrix(w, hbar).entries;
      const Eigen::VectorXcd eh = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(h, false).eigenvalues();
      std::vector<C> mapped, direct(eh.data(), eh.data() + eh.size());
      C sum = 0;
      for (const C& z : eig_w) {
        mapped.push_back(C(0, -hbar) * z);
        sum += z;
      }
      ham = std::max(ham, testing::match_distance(direct, mapped));
      trace = std::max(trace, std::abs(sum - w.trace_w));
    }
  }
  l.add("eig(H) vs -i hbar eig(W)", ham, 1e-9);
  l.add("|sum eig(W) - w_r|", trace, 1e-9);
  return l.done();
}

Outcome curvature_constants() {
  Ledger l;
  std::mt19937_64 rng(106);
  const std::vector<std::pair<MetricField, double>> cases{
      {builtin_manifold("sphere"), 2.0},
      {builtin_manifold("poincare_half_plane"), -2.0},
      {builtin_manifold("euclidean"), 0.0}};
  for (const auto& [f, expected] : cases) {
    double worst = 0, oracle = 0;
    for (int k = 0; k < 20; ++k) {
      const ChartPoint p = testing::sample_point(f, rng);
      worst = std::max(worst, std::abs(curvature_at(f, p).scalar - expected));
      oracle = std::max(oracle, std::abs(testing::fd_scalar_curvature(f, p) - expected));
    }
    l.add("R(" + f.name() + ") error", worst, 1e-6);
    l.add("finite-difference R(" + f.name() + ") error", oracle, 1e-5);
  }
  double scaling = 0;
  for (const MetricField& f : zoo()) {
    for (int k = 0; k < 5; ++k) {
      const ChartPoint p = testing::sample_point(f, rng);
      const double c = uniform(rng, 0.5, 2.0);
      const double r = curvature_at(f, p).scalar;
      scaling = std::max(scaling,
                         std::abs(curvature_at(f.scaled(c), p).scalar - r / c) / (1 + std::abs(r)));
    }
  }
  l.add("scaling law", scaling, 1e-9);
  return l.done();
}

Outcome corollary() {
  Ledger l;
  const double hbar = 1.0;
  struct Flow {
    std::string label;
    MetricField field;
    ChartPoint p;
    double t_end;
    double rate;  // c(t) = 1 + rate * t
  };
  const std::vector<Flow> flows{{"sphere", builtin_manifold("sphere"), {1.0, 0.3}, 1.0, -2.0},
                                {"hyperbolic", builtin_manifold("poincare_half_plane"), {0.2, 0.9}, 2.0, 2.0}};
  for (const auto& fl : flows) {
    const RicciFlowTrajectory t = ricci_flow_integrate(fl.field, fl.p, fl.t_end, 1e-3);
    double max_r = 0, wr = 0, hdev = 0, scale = 0;
    for (const auto& s : t.samples) {
      max_r = std::max(max_r, std::abs(s.scalar));
      wr = std::max(wr, std::abs(s.w_r + s.scalar));
      const C h = C(0, -hbar) * s.w_r;
      const C h_prime = C(0, hbar) * s.scalar;
      hdev = std::max(hdev, std::abs(h - h_prime));
      scale = std::max(scale, std::abs(s.scale - (1 + fl.rate * s.t)));
    }
    const CorollaryReport report = corollary_check(t, hbar);
    l.add(fl.label + " max|w_r + R|/(1+max|R|)", wr / (1 + max_r), 1e-6);
    l.add(fl.label + " max|H - i hbar R|/(hbar(1+max|R|))", hdev / (hbar * (1 + max_r)), 1e-6);
    l.require(fl.label + " corollary report", report.pass);
    l.add(fl.label + " scale factor error", scale, 1e-9);
  }
  const RicciFlowTrajectory s = ricci_flow_integrate(builtin_manifold("sphere"), {1.0, 0.3}, 1.0, 1e-3);
  l.add("extinction time error",
        s.extinction_time ? std::abs(*s.extinction_time - 0.5) : HUGE_VAL, 1e-6);
  return l.done();
}

Outcome mode_schrodinger() {
  Ledger l;
  const MetricField h = builtin_manifold("poincare_half_plane");
  const GeodesicTrajectory t = integrate_geodesic(h, {0.0, {0, 1}, {1, 0}}, 1.0, 1e-3);
  const SampledFunction w = geospin_function_samples(t);
  const auto real_path = evolve_mode(w, {0.0, {1.0}}, 2e-3);
  const auto complex_path = evolve_mode_schrodinger(w, {0.0, {1.0}}, 2e-3, 1.0);
  double sech = 0, agree = 0;
  for (std::size_t k = 0; k < real_path.size(); ++k) {
    const double c = 1 / std::cosh(real_path[k].t);
    sech = std::max(sech, std::abs(real_path[k].psi[0] - c * c));
    agree = std::max(agree, std::abs(complex_path[k].psi[0] - real_path[k].psi[0]));
  }
  l.require("mode path reaches t=1", std::abs(real_path.back().t - 1.0) < 1e-12);
  l.add("max |psi - sech^2 t|", sech, 1e-6);
  l.add("max |psi_schrodinger - psi_mode|", agree, 1e-12);
  return l.done();
}

Outcome rk4_order() {
  const MetricField f = builtin_manifold("poincare_half_plane");
  const GeodesicState s0{0.0, {0, 1}, {1, 0.5}};
  const auto end = [&](double h) {
    const GeodesicTrajectory t = integrate_geodesic(f, s0, 1.0, h);
    return Eigen::Vector2d(t.samples.back().x[0], t.samples.back().x[1]);
  };
  const Eigen::Vector2d ref = end(1e-5);
  const double e1 = (end(0.1) - ref).norm();
  const double e2 = (end(0.05) - ref).norm();
  const double factor = e1 / e2;
  return {factor >= 12 && factor <= 20,
          "error(h=0.1) " + sci(e1) + ", error(h=0.05) " + sci(e2) + ", factor " + sci(factor) +
              " in [12, 20]"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "geospin_acceptance";
  fs::create_directories(dir);
  const auto run_once = [&](const std::string& name) {
    const fs::path out = dir / name;
    const std::string cmd = std::string("\"") + GEOSPIN_CLI_PATH + "\" verify --seed 42 --output \"" +
                            out.string() + "\"";
    const int status = std::system(cmd.c_str());
    return std::make_pair(status, slurp(out));
  };
  const auto [s1, a] = run_once("verify_a.json");
  const auto [s2, b] = run_once("verify_b.json");
  fs::remove_all(dir);
  Ledger l;
  l.require("first run exit 0", s1 == 0);
  l.require("second run exit 0", s2 == 0);
  l.require("reports non-empty", !a.empty());
  l.require("byte-identical (" + std::to_string(a.size()) + " bytes)", !a.empty() && a == b);
  return l.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"trace identity", trace_identity},
      {"Christoffel finite-difference equivalence", christoffel_oracle},
      {"geodesic correctness", geodesic_correctness},
      {"log-volume rate identity", logdet_rate},
      {"spectrum", spectrum},
      {"curvature constants", curvature_constants},
      {"Ricci-flow Hamiltonian identity", corollary},
      {"mode / Schrodinger agreement", mode_schrodinger},
      {"RK4 convergence order", rk4_order},
      {"verify determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
