#include "geospin/connection.hpp"

#include "geospin/error.hpp"

namespace geospin {

Eigen::VectorXd log_volume_gradient(const MetricField& field, const ChartPoint& p) {
  field.require_in_domain(p);
  const std::size_t n = field.dimension();
  Eigen::VectorXd a(static_cast<Eigen::Index>(n));
  if (const auto& det = field.determinant()) {
    const double d = evaluate(*det, p.span());
    if (!(d > 0.0)) {
      throw DegenerateMetricError("det g = " + format_number(d) + " is not positive for " +
                                  field.name());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a[static_cast<Eigen::Index>(j)] = 0.5 * evaluate(field.determinant_partial(j), p.span()) / d;
    }
    return a;
  }
  const MetricAtPoint m = metric_at(field, p);
  const auto dg = metric_partials_at(field, p);
  for (std::size_t j = 0; j < n; ++j) {
    a[static_cast<Eigen::Index>(j)] = 0.5 * (m.g_inv * dg[j]).trace();
  }
  return a;
}

ChristoffelAtPoint christoffel_at(const MetricField& field, const ChartPoint& p) {
  const MetricAtPoint m = metric_at(field, p);
  const auto dg = metric_partials_at(field, p);
  const std::size_t n = field.dimension();

  // First kind: Γ_lij = ½ (∂_i g_jl + ∂_j g_il − ∂_l g_ij)
  std::vector<double> first(n * n * n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double v = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        first[(l * n + i) * n + j] = first[(l * n + j) * n + i] = v;
      }
    }
  }

  ChristoffelAtPoint out;
  out.dimension = n;
  out.point = p;
  out.gamma.assign(n * n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t l = 0; l < n; ++l) sum += m.g_inv(k, l) * first[(l * n + i) * n + j];
        out(k, i, j) = out(k, j, i) = sum;
      }
    }
  }
  out.log_volume_gradient = log_volume_gradient(field, p);
  return out;
}

Eigen::MatrixXd connection_one_form_coeffs(const ChristoffelAtPoint& christoffel,
                                           const TangentVector& v) {
  const std::size_t n = christoffel.dimension;
  if (v.size() != n) {
    throw DimensionError("velocity has dimension " + std::to_string(v.size()) +
                         ", connection has dimension " + std::to_string(n));
  }
  if (!v.is_upper()) throw InvalidArgument("connection one-form needs an upper-index velocity");
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(ni, ni);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += christoffel(i, j, k) * v[k];
      w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
    }
  }
  return w;
}

}  // namespace geospin
