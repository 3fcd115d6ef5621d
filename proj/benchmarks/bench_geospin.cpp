#include <benchmark/benchmark.h>

#include <random>

#include "geospin/geospin.hpp"

namespace {

using namespace geospin;

MetricField pick(int which) {
  switch (which) {
    case 0: return builtin_manifold("poincare_half_plane");
    case 1: return builtin_manifold("sphere");
    default: return builtin_manifold("euclidean", {{{"n", 4}}, {}});
  }
}

ChartPoint point_for(int which) {
  switch (which) {
    case 0: return {0.3, 1.2};
    case 1: return {1.1, 0.4};
    default: return {0.1, 0.2, 0.3, 0.4};
  }
}

void BM_ParseAndDifferentiate(benchmark::State& state) {
  const std::vector<std::string> coords{"r", "s"};
  for (auto _ : state) {
    const Expr e = parse_expr("cosh(r)^2 * sin(s) / (1 + r^2)", coords);
    benchmark::DoNotOptimize(differentiate(differentiate(e, 0), 1));
  }
}
BENCHMARK(BM_ParseAndDifferentiate);

void BM_ChristoffelAt(benchmark::State& state) {
  const int which = static_cast<int>(state.range(0));
  const MetricField f = pick(which);
  const ChartPoint p = point_for(which);
  for (auto _ : state) benchmark::DoNotOptimize(christoffel_at(f, p));
  state.SetLabel(f.name());
}
BENCHMARK(BM_ChristoffelAt)->DenseRange(0, 2);

void BM_CurvatureAt(benchmark::State& state) {
  const int which = static_cast<int>(state.range(0));
  const MetricField f = pick(which);
  const ChartPoint p = point_for(which);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_at(f, p));
  state.SetLabel(f.name());
}
BENCHMARK(BM_CurvatureAt)->DenseRange(0, 2);

void BM_IntegrateGeodesic(benchmark::State& state) {
  const MetricField f = builtin_manifold("poincare_half_plane");
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_geodesic(f, {0.0, {0, 1}, {1, 0}}, 1.0, h));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateGeodesic)->Arg(100)->Arg(1000);

void BM_EigenvaluesRealNonsymmetric(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    m(i) = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
  }
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_real_nonsymmetric(m));
}
BENCHMARK(BM_EigenvaluesRealNonsymmetric)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_GeometricSpectrum(benchmark::State& state) {
  const GeospinMatrix w = geospin_matrix(builtin_manifold("poincare_disk"), {0.2, -0.3}, {0.7, 0.4});
  for (auto _ : state) benchmark::DoNotOptimize(geometric_spectrum(w.w, 1.0));
}
BENCHMARK(BM_GeometricSpectrum);

void BM_RicciFlow(benchmark::State& state) {
  const MetricField f = builtin_manifold("sphere");
  for (auto _ : state) benchmark::DoNotOptimize(ricci_flow_integrate(f, {1.0, 0.0}, 0.4, 1e-2));
}
BENCHMARK(BM_RicciFlow);

}  // namespace

BENCHMARK_MAIN();
