#include "geospin/geospin_matrix.hpp"

#include "geospin/error.hpp"

namespace geospin {

GeospinMatrix geospin_matrix(const ChristoffelAtPoint& christoffel, const TangentVector& v) {
  GeospinMatrix out;
  out.w = connection_one_form_coeffs(christoffel, v);
  out.point = christoffel.point;
  out.velocity = v;
  out.trace_w = out.w.trace();
  out.log_volume_rate = christoffel.log_volume_gradient.dot(v.as_eigen());
  return out;
}

GeospinMatrix geospin_matrix(const MetricField& field, const ChartPoint& p,
                             const TangentVector& v) {
  return geospin_matrix(christoffel_at(field, p), v);
}

LoweredGeospin geospin_lowered(const ChristoffelAtPoint& christoffel, const TangentVector& v_low) {
  const std::size_t n = christoffel.dimension;
  if (v_low.size() != n) {
    throw DimensionError("covector has dimension " + std::to_string(v_low.size()) +
                         ", connection has dimension " + std::to_string(n));
  }
  if (v_low.is_upper()) throw InvalidArgument("geospin_lowered needs a lower-index velocity");
  const auto ni = static_cast<Eigen::Index>(n);
  LoweredGeospin out{Eigen::MatrixXd::Zero(ni, ni)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += christoffel(j, i, k) * v_low[j];
      out.w_low(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = sum;
    }
  }
  return out;
}

GeospinSplit split_diag_offdiag(const Eigen::MatrixXd& w) {
  GeospinSplit s;
  s.diagonal = Eigen::MatrixXd::Zero(w.rows(), w.cols());
  s.diagonal.diagonal() = w.diagonal();
  s.hollow = w;
  s.hollow.diagonal().setZero();
  return s;
}

namespace {

void require_square(const Eigen::MatrixXd& jac, Eigen::Index n, const char* what) {
  if (jac.rows() != n || jac.cols() != n) {
    throw DimensionError(std::string(what) + " is " + std::to_string(jac.rows()) + "x" +
                         std::to_string(jac.cols()) + ", expected " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
}

}  // namespace

Eigen::MatrixXd covariant_derivative(const Eigen::MatrixXd& jacobian, const GeospinMatrix& w) {
  require_square(jacobian, w.w.rows(), "jacobian");
  // out(k, j) = ∂_k v^j + W^j_k; W^j_k lives at w(j, k).
  return jacobian + w.w.transpose();
}

Eigen::MatrixXd covariant_derivative_lowered(const Eigen::MatrixXd& jacobian_low,
                                             const LoweredGeospin& w) {
  require_square(jacobian_low, w.w_low.rows(), "jacobian");
  return jacobian_low - w.w_low;
}

}  // namespace geospin
