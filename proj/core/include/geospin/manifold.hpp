#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geospin/expr.hpp"

namespace geospin {

/// Largest chart dimension the library accepts.
inline constexpr std::size_t kMaxDimension = 16;

/// Coordinates (x^1, ..., x^n) of a point in a single chart.
struct ChartPoint {
  std::vector<double> coords;

  ChartPoint() = default;
  ChartPoint(std::initializer_list<double> xs) : coords(xs) {}
  explicit ChartPoint(std::vector<double> xs) : coords(std::move(xs)) {}

  std::size_t size() const noexcept { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }
  std::span<const double> span() const noexcept { return coords; }
};

enum class IndexPosition { Upper, Lower };

/// Components of a tangent vector, either contravariant (v^i) or covariant (v_i).
struct TangentVector {
  std::vector<double> components;
  IndexPosition position = IndexPosition::Upper;

  TangentVector() = default;
  TangentVector(std::initializer_list<double> xs) : components(xs) {}
  explicit TangentVector(std::vector<double> xs, IndexPosition pos = IndexPosition::Upper)
      : components(std::move(xs)), position(pos) {}

  std::size_t size() const noexcept { return components.size(); }
  double operator[](std::size_t i) const { return components[i]; }
  double& operator[](std::size_t i) { return components[i]; }
  bool is_upper() const noexcept { return position == IndexPosition::Upper; }

  Eigen::Map<const Eigen::VectorXd> as_eigen() const {
    return {components.data(), static_cast<Eigen::Index>(components.size())};
  }
};

enum class Relation { Less, LessEqual, Greater, GreaterEqual };

/// One open-set (or closed) predicate `lhs rel rhs` restricting a chart.
struct DomainConstraint {
  Expr lhs;
  Relation relation = Relation::Greater;
  Expr rhs;

  /// False when the predicate fails or cannot be evaluated at `p`.
  bool satisfied(std::span<const double> p) const noexcept;
  std::string to_string(std::span<const std::string> coords) const;
};

/// Parses `a < b`, `a > b`, `a <= b`, `a >= b`, and chains such as
/// `0 < theta < pi` (which yields two constraints).
std::vector<DomainConstraint> parse_constraints(std::string_view text,
                                                std::span<const std::string> coords);

/// A Riemannian metric g_ij(x) on one coordinate chart.
///
/// Components are expressions; first and second partials are differentiated
/// symbolically once at construction, so every later evaluation is exact up
/// to rounding. The object is immutable and cheap to copy.
class MetricField {
 public:
  /// Throws InvalidArgument if the grid is not square, the dimension is out
  /// of range, or g_ij and g_ji are not the same expression.
  MetricField(std::string name, std::vector<std::string> coordinates,
              std::vector<std::vector<Expr>> components,
              std::vector<DomainConstraint> domain = {});

  const std::string& name() const noexcept;
  std::size_t dimension() const noexcept;
  std::span<const std::string> coordinates() const noexcept;
  std::span<const DomainConstraint> domain() const noexcept;

  const Expr& component(std::size_t i, std::size_t j) const;
  /// ∂_m g_ij
  const Expr& partial(std::size_t m, std::size_t i, std::size_t j) const;
  /// ∂_m ∂_p g_ij
  const Expr& second_partial(std::size_t m, std::size_t p, std::size_t i, std::size_t j) const;

  /// Symbolic det(g) and its partials, when the determinant is cheap to
  /// expand (diagonal metrics, or n ≤ 5). Otherwise nullopt.
  const std::optional<Expr>& determinant() const noexcept;
  const Expr& determinant_partial(std::size_t m) const;

  bool contains(const ChartPoint& p) const noexcept;
  /// Throws DimensionError or DomainError.
  void require_in_domain(const ChartPoint& p) const;

  /// The homothetic metric c·g on the same chart (c > 0).
  MetricField scaled(double c) const;

 private:
  struct Data;
  explicit MetricField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// g, its inverse, and det g evaluated at one point.
struct MetricAtPoint {
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  double det = 0.0;
  /// ln √|g| = ½ ln det g
  double log_sqrt_det = 0.0;
};

/// Evaluates the metric at `p`, checks it is symmetric positive definite
/// (leading principal minors) and inverts it by LU with partial pivoting.
MetricAtPoint metric_at(const MetricField& field, const ChartPoint& p);

/// Evaluates ∂_m g_ij at `p`; result[m](i, j).
std::vector<Eigen::MatrixXd> metric_partials_at(const MetricField& field, const ChartPoint& p);

double inner_product(const MetricField& field, const ChartPoint& p, const TangentVector& v,
                     const TangentVector& c);
double norm(const MetricField& field, const ChartPoint& p, const TangentVector& v);

TangentVector lower_index(const MetricField& field, const ChartPoint& p, const TangentVector& v);
TangentVector raise_index(const MetricField& field, const ChartPoint& p, const TangentVector& v);

// ---------------------------------------------------------------------------
// Built-in manifolds

/// Numeric and expression parameters for the built-in zoo.
struct ManifoldParams {
  std::map<std::string, double> values;
  std::map<std::string, std::string> expressions;
};

struct ZooEntry {
  std::string name;
  std::size_t dimension;  // default dimension
  std::string description;
};

/// euclidean(n), sphere(radius), poincare_half_plane, poincare_disk,
/// flat_torus(n), warped_product(profile). Names may use '-' or '_'.
std::vector<ZooEntry> manifold_zoo();

/// Throws InvalidArgument for an unknown name or invalid parameter.
MetricField builtin_manifold(std::string_view name, const ManifoldParams& params = {});

/// Lower-case name with '-' mapped to '_'.
std::string canonical_manifold_name(std::string_view name);

// ---------------------------------------------------------------------------
// Manifest JSON: {"name", "dimension", "coordinates", "metric", "domain"}

/// Throws InvalidArgument naming the offending entry on malformed input.
MetricField load_manifest(std::string_view json_text);
std::string manifest_json(const MetricField& field);

}  // namespace geospin
