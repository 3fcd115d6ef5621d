#pragma once

#include <Eigen/Dense>

#include "geospin/connection.hpp"
#include "geospin/manifold.hpp"

namespace geospin {

/// The geospin matrix W at a point, for a given velocity.
///
/// Layout: w(i, j) = W^i_j = Γ^i_jk v^k, row = upper index, column = lower
/// index. With this layout the geodesic equation reads dv/dt = −W v and the
/// printed matrix has the same shape as the usual textbook display (row i
/// holds W^i_1 ... W^i_n).
struct GeospinMatrix {
  Eigen::MatrixXd w;
  ChartPoint point;
  TangentVector velocity;
  /// Geospin function w^(r): the full trace Σ_i W^i_i.
  double trace_w = 0.0;
  /// A_k v^k, the same quantity through the log-volume gradient.
  double log_volume_rate = 0.0;

  double trace_residual() const noexcept { return trace_w - log_volume_rate; }
};

/// Covariant (second kind) geospin W_ik = Γ^j_ik v_j; symmetric in (i, k).
struct LoweredGeospin {
  Eigen::MatrixXd w_low;
};

GeospinMatrix geospin_matrix(const ChristoffelAtPoint& christoffel, const TangentVector& v);
GeospinMatrix geospin_matrix(const MetricField& field, const ChartPoint& p,
                             const TangentVector& v);

LoweredGeospin geospin_lowered(const ChristoffelAtPoint& christoffel, const TangentVector& v_low);

struct GeospinSplit {
  Eigen::MatrixXd diagonal;  // W^(r)
  Eigen::MatrixXd hollow;    // W^(a), zero diagonal
};

GeospinSplit split_diag_offdiag(const Eigen::MatrixXd& w);
inline GeospinSplit split_diag_offdiag(const GeospinMatrix& w) { return split_diag_offdiag(w.w); }

/// ∇_k v^j = ∂v^j/∂x^k + W^j_k, with jacobian(k, j) = ∂v^j/∂x^k and the result
/// indexed the same way.
Eigen::MatrixXd covariant_derivative(const Eigen::MatrixXd& jacobian, const GeospinMatrix& w);

/// ∇_k v_j = ∂v_j/∂x^k − W_kj, with jacobian_low(k, j) = ∂v_j/∂x^k.
Eigen::MatrixXd covariant_derivative_lowered(const Eigen::MatrixXd& jacobian_low,
                                             const LoweredGeospin& w);

}  // namespace geospin
