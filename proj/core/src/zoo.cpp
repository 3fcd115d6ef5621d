#include <algorithm>
#include <cctype>
#include <cmath>

#include "geospin/error.hpp"
#include "geospin/manifold.hpp"
#include "metric_text.hpp"

namespace geospin {

std::string canonical_manifold_name(std::string_view name) {
  std::string out(name);
  for (char& c : out) {
    c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<ZooEntry> manifold_zoo() {
  return {
      {"euclidean", 2, "flat R^n, identity metric (param n)"},
      {"sphere", 2, "round 2-sphere of radius r in (theta, phi), 0 < theta < pi (param radius)"},
      {"poincare_half_plane", 2, "hyperbolic plane, (dx^2 + dy^2)/y^2, y > 0"},
      {"poincare_disk", 2, "hyperbolic plane, 4(dx^2 + dy^2)/(1 - x^2 - y^2)^2, x^2 + y^2 < 1"},
      {"flat_torus", 2, "flat n-torus in angle coordinates, identity metric (param n)"},
      {"warped_product", 2, "dr^2 + f(r)^2 ds^2 (expression param profile, default cosh(r))"},
  };
}

namespace {

std::size_t dimension_param(const ManifoldParams& params, std::string_view manifold) {
  const auto it = params.values.find("n");
  if (it == params.values.end()) return 2;
  const double n = it->second;
  if (!(n >= 1.0) || n != std::floor(n) || n > static_cast<double>(kMaxDimension)) {
    throw InvalidArgument(std::string(manifold) + ": dimension n must be an integer in [1, " +
                          std::to_string(kMaxDimension) + "], got " + format_number(n));
  }
  return static_cast<std::size_t>(n);
}

std::vector<std::string> cartesian_names(std::size_t n) {
  if (n == 1) return {"x"};
  if (n == 2) return {"x", "y"};
  if (n == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

MetricText identity_metric(std::string name, std::vector<std::string> coords) {
  const std::size_t n = coords.size();
  MetricText t{std::move(name), std::move(coords), {}, {}};
  t.metric.assign(n, std::vector<std::string>(n, "0"));
  for (std::size_t i = 0; i < n; ++i) t.metric[i][i] = "1";
  return t;
}

}  // namespace

MetricField builtin_manifold(std::string_view name, const ManifoldParams& params) {
  const std::string key = canonical_manifold_name(name);

  if (key == "euclidean") {
    const std::size_t n = dimension_param(params, key);
    return build_metric(identity_metric("euclidean", cartesian_names(n)));
  }
  if (key == "flat_torus") {
    const std::size_t n = dimension_param(params, key);
    std::vector<std::string> coords;
    for (std::size_t i = 1; i <= n; ++i) coords.push_back("u" + std::to_string(i));
    return build_metric(identity_metric("flat_torus", std::move(coords)));
  }
  if (key == "sphere") {
    double r = 1.0;
    if (auto it = params.values.find("radius"); it != params.values.end()) r = it->second;
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw InvalidArgument("sphere: radius must be positive, got " + format_number(r));
    }
    const std::string r2 = format_number(r * r);
    return build_metric({"sphere",
                         {"theta", "phi"},
                         {{r2, "0"}, {"0", r2 + " * sin(theta)^2"}},
                         {"0 < theta < pi"}});
  }
  if (key == "poincare_half_plane") {
    return build_metric({"poincare_half_plane",
                         {"x", "y"},
                         {{"1 / y^2", "0"}, {"0", "1 / y^2"}},
                         {"y > 0"}});
  }
  if (key == "poincare_disk") {
    const std::string conformal = "4 / (1 - x^2 - y^2)^2";
    return build_metric({"poincare_disk",
                         {"x", "y"},
                         {{conformal, "0"}, {"0", conformal}},
                         {"x^2 + y^2 < 1"}});
  }
  if (key == "warped_product") {
    std::string profile = "cosh(r)";
    if (auto it = params.expressions.find("profile"); it != params.expressions.end()) {
      profile = it->second;
    }
    MetricText t{"warped_product", {"r", "s"}, {{"1", "0"}, {"0", "(" + profile + ")^2"}}, {}};
    if (auto it = params.expressions.find("domain"); it != params.expressions.end()) {
      t.domain.push_back(it->second);
    }
    return build_metric(t);
  }
  throw InvalidArgument("unknown manifold '" + std::string(name) + "'");
}

}  // namespace geospin
