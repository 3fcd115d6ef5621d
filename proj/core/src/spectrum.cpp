#include "geospin/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "geospin/error.hpp"

namespace geospin {

void sort_spectrum(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

namespace {

// Inverse iteration with a slightly perturbed shift.
Eigen::VectorXcd eigenvector_for(const Eigen::MatrixXd& m, Complex lambda, double scale) {
  const Eigen::Index n = m.rows();
  if (scale == 0.0) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
    e(0) = 1.0;
    return e;
  }
  const Complex shift = lambda + Complex(1e-10 * scale, 1e-10 * scale);
  Eigen::MatrixXcd a = m.cast<Complex>();
  a.diagonal().array() -= shift;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  Eigen::VectorXcd x = Eigen::VectorXcd::Ones(n);
  for (int it = 0; it < 3; ++it) {
    x = lu.solve(x);
    const double nx = x.norm();
    if (!(nx > 0.0) || !std::isfinite(nx)) break;
    x /= nx;
  }
  return x;
}

}  // namespace

EigenDecomposition eig_real_nonsymmetric(const Eigen::MatrixXd& m, const EigenConfig& config) {
  EigenDecomposition out;
  out.values = eigenvalues_real_nonsymmetric(m, config);
  const double scale = m.norm();
  const double tol = config.residual_tol * std::max(1.0, scale);
  for (const Complex& lambda : out.values) {
    Eigen::VectorXcd x = eigenvector_for(m, lambda, scale);
    const double nx = x.norm();
    double res = std::numeric_limits<double>::infinity();
    if (nx > 0.0 && std::isfinite(nx)) {
      res = (m.cast<Complex>() * x - lambda * x).norm() / nx;
    }
    out.vectors.push_back(std::move(x));
    out.residuals.push_back(res);
    out.reliable.push_back(res <= tol);
  }
  return out;
}

Eigen::MatrixXcd HamiltonianMatrix::diagonal_part() const {
  const Eigen::Index n = source.rows();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  const Complex minus_i_hbar(0.0, -hbar);
  for (Eigen::Index k = 0; k < n; ++k) h(k, k) = minus_i_hbar * source(k, k);
  return h;
}

HamiltonianMatrix hamiltonian_matrix(const Eigen::MatrixXd& w, double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw InvalidArgument("hbar must be positive, got " + format_number(hbar));
  }
  HamiltonianMatrix h;
  h.hbar = hbar;
  h.source = w;
  h.entries = Eigen::MatrixXcd(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) h.entries(i, j) = Complex(0.0, -hbar * w(i, j));
  }
  h.energies = hbar * w.diagonal();
  h.diagonal = Eigen::VectorXcd(w.rows());
  for (Eigen::Index k = 0; k < w.rows(); ++k) h.diagonal(k) = Complex(0.0, -h.energies(k));
  return h;
}

Complex map_eigenvalue(Complex lambda, double hbar) noexcept {
  return {hbar * lambda.imag(), -hbar * lambda.real()};
}

ComplexSpectrum spectrum_map(std::span<const Complex> eigs, double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive, got " + format_number(hbar));
  ComplexSpectrum s;
  s.hbar = hbar;
  s.eigenvalues.assign(eigs.begin(), eigs.end());
  for (const Complex& l : eigs) s.hamiltonian_eigenvalues.push_back(map_eigenvalue(l, hbar));
  return s;
}

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

ComplexSpectrum geometric_spectrum(const Eigen::MatrixXd& w, double hbar,
                                   const EigenConfig& config) {
  const EigenDecomposition eig = eig_real_nonsymmetric(w, config);
  ComplexSpectrum s = spectrum_map(eig.values, hbar);
  s.residuals = eig.residuals;
  s.reliable = eig.reliable;

  const HamiltonianMatrix h = hamiltonian_matrix(w, hbar);
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h.entries, false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("complex eigensolver failed on the Hamiltonian matrix");
  }
  const Eigen::VectorXcd ev = solver.eigenvalues();
  const std::vector<Complex> independent(ev.begin(), ev.end());
  s.hamiltonian_mismatch = multiset_distance(independent, s.hamiltonian_eigenvalues);
  s.hamiltonian_check_passed =
      s.hamiltonian_mismatch <= config.hamiltonian_tol * std::max(1.0, h.entries.norm());
  return s;
}

}  // namespace geospin
