#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "geospin/manifold.hpp"

namespace geospin {

/// Christoffel symbols of the Levi-Civita connection at one point.
///
/// Storage order is gamma[k][i][j] = Γ^k_ij (upper index first), flattened
/// row-major. `log_volume_gradient` holds A_j = ∂_j ln √|g|.
struct ChristoffelAtPoint {
  std::size_t dimension = 0;
  std::vector<double> gamma;
  Eigen::VectorXd log_volume_gradient;
  ChartPoint point;

  double operator()(std::size_t k, std::size_t i, std::size_t j) const {
    return gamma[(k * dimension + i) * dimension + j];
  }
  double& operator()(std::size_t k, std::size_t i, std::size_t j) {
    return gamma[(k * dimension + i) * dimension + j];
  }
};

/// Γ^k_ij = ½ g^kl (∂_i g_jl + ∂_j g_il − ∂_l g_ij) from exact symbolic
/// partials of the metric. Symmetric in (i, j) by construction.
ChristoffelAtPoint christoffel_at(const MetricField& field, const ChartPoint& p);

/// A_j = ∂_j ln √|g|, from the symbolic determinant when the field has one
/// (½ ∂_j det / det), otherwise from ½ tr(g⁻¹ ∂_j g).
Eigen::VectorXd log_volume_gradient(const MetricField& field, const ChartPoint& p);

/// Coefficients of the connection one-form along a curve with velocity v,
/// ω^i_j = Γ^i_jk v^k dt. Row i is the upper index, column j the lower.
Eigen::MatrixXd connection_one_form_coeffs(const ChristoffelAtPoint& christoffel,
                                           const TangentVector& v);

}  // namespace geospin
