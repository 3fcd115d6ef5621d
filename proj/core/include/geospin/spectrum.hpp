#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "geospin/geospin_matrix.hpp"

namespace geospin {

using Complex = std::complex<double>;

/// Tunables for the nonsymmetric eigensolver.
struct EigenConfig {
  /// Total QR sweeps allowed are `sweeps_per_dimension * n`.
  int sweeps_per_dimension = 30;
  /// An eigenvector is reliable when ‖Wx − λx‖/‖x‖ ≤ residual_tol · max(1, ‖W‖).
  double residual_tol = 1e-8;
  /// Tolerance for the independent check of eig(Ĥ) against −iħ·eig(W).
  double hamiltonian_tol = 1e-9;
};

struct EigenDecomposition {
  /// Sorted by real part, then imaginary part.
  std::vector<Complex> values;
  std::vector<Eigen::VectorXcd> vectors;  // unit norm
  std::vector<double> residuals;          // ‖Mx − λx‖ / ‖x‖
  std::vector<bool> reliable;
};

/// Eigenvalues of a real square matrix: balancing, Householder reduction to
/// Hessenberg form, then Francis double-shift QR. Complex eigenvalues come
/// out of 2x2 blocks as exact conjugate pairs. Throws ConvergenceError when
/// the sweep cap is hit.
std::vector<Complex> eigenvalues_real_nonsymmetric(const Eigen::MatrixXd& m,
                                                   const EigenConfig& config = {});

/// Eigenvalues plus eigenvectors by inverse iteration. Vectors whose residual
/// exceeds the tolerance are kept but flagged unreliable.
EigenDecomposition eig_real_nonsymmetric(const Eigen::MatrixXd& m, const EigenConfig& config = {});

/// Ĥ = −iħW together with the diagonal energies E^(k) = ħW^k_k.
struct HamiltonianMatrix {
  Eigen::MatrixXcd entries;
  double hbar = 1.0;
  Eigen::MatrixXd source;    // W
  Eigen::VectorXd energies;  // E^(k)
  Eigen::VectorXcd diagonal; // H^(k) = −i E^(k)

  /// H^(r) = −iħ W^(r), the Hamiltonian of the diagonal part of W.
  Eigen::MatrixXcd diagonal_part() const;
};

HamiltonianMatrix hamiltonian_matrix(const Eigen::MatrixXd& w, double hbar);
inline HamiltonianMatrix hamiltonian_matrix(const GeospinMatrix& w, double hbar) {
  return hamiltonian_matrix(w.w, hbar);
}

/// λ = λs + iλim  ↦  ħλim − iħλs  (which is −iħλ).
Complex map_eigenvalue(Complex lambda, double hbar) noexcept;

struct ComplexSpectrum {
  double hbar = 1.0;
  std::vector<Complex> eigenvalues;              // of W, sorted
  std::vector<Complex> hamiltonian_eigenvalues;  // λ^(re), same order
  std::vector<double> residuals;
  std::vector<bool> reliable;
  /// Largest distance between an independently computed eig(Ĥ) and the
  /// mapped eigenvalues, after matching. NaN until checked.
  double hamiltonian_mismatch = std::numeric_limits<double>::quiet_NaN();
  bool hamiltonian_check_passed = false;
};

/// Applies the eigenvalue map to already computed eigenvalues of W.
ComplexSpectrum spectrum_map(std::span<const Complex> eigs, double hbar);

/// Full pipeline for a geospin matrix: eigen-decomposition, the map, and the
/// cross-check of eig(Ĥ) through a complex Schur solver.
ComplexSpectrum geometric_spectrum(const Eigen::MatrixXd& w, double hbar,
                                   const EigenConfig& config = {});

/// Max distance between two equally sized multisets after greedy
/// nearest-neighbour matching; +inf for size mismatch.
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Sort by real part, then imaginary part.
void sort_spectrum(std::vector<Complex>& values);

}  // namespace geospin
