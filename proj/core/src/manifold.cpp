#include "geospin/manifold.hpp"

#include <cmath>
#include <unordered_map>

#include "geospin/error.hpp"

namespace geospin {

// ---------------------------------------------------------------------------
// Domain constraints

bool DomainConstraint::satisfied(std::span<const double> p) const noexcept {
  try {
    const double a = evaluate(lhs, p);
    const double b = evaluate(rhs, p);
    switch (relation) {
      case Relation::Less: return a < b;
      case Relation::LessEqual: return a <= b;
      case Relation::Greater: return a > b;
      case Relation::GreaterEqual: return a >= b;
    }
  } catch (const Error&) {
  }
  return false;
}

namespace {

std::string_view relation_text(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

}  // namespace

std::string DomainConstraint::to_string(std::span<const std::string> coords) const {
  return unparse(lhs, coords) + " " + std::string(relation_text(relation)) + " " +
         unparse(rhs, coords);
}

std::vector<DomainConstraint> parse_constraints(std::string_view text,
                                                std::span<const std::string> coords) {
  std::vector<std::pair<std::size_t, std::string_view>> operands;
  std::vector<Relation> relations;

  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '<' && c != '>') continue;
    const bool or_equal = i + 1 < text.size() && text[i + 1] == '=';
    relations.push_back(c == '<' ? (or_equal ? Relation::LessEqual : Relation::Less)
                                 : (or_equal ? Relation::GreaterEqual : Relation::Greater));
    operands.emplace_back(start, text.substr(start, i - start));
    start = i + (or_equal ? 2 : 1);
    if (or_equal) ++i;
  }
  operands.emplace_back(start, text.substr(start));
  if (relations.empty()) {
    throw ParseError("domain constraint '" + std::string(text) +
                         "' has no relational operator",
                     0, {"'<'", "'>'", "'<='", "'>='"});
  }

  std::vector<Expr> exprs;
  for (const auto& [offset, piece] : operands) {
    try {
      exprs.push_back(parse_expr(piece, coords));
    } catch (const ParseError& e) {
      throw ParseError("in domain constraint '" + std::string(text) + "': " + e.what(),
                       offset + e.offset(), e.expected());
    }
  }
  std::vector<DomainConstraint> out;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    out.push_back({exprs[i], relations[i], exprs[i + 1]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// MetricField

struct MetricField::Data {
  std::string name;
  std::vector<std::string> coords;
  std::size_t n = 0;
  std::vector<Expr> g;       // n*n, g[i*n+j]
  std::vector<Expr> dg;      // n^3, [(m*n+i)*n+j]
  std::vector<Expr> ddg;     // n^4, [((m*n+p)*n+i)*n+j]
  std::optional<Expr> det;
  std::vector<Expr> ddet;    // n
  std::vector<DomainConstraint> domain;
};

namespace {

// Laplace expansion along the first row, skipping zero entries.
Expr symbolic_det(const std::vector<Expr>& m, std::size_t n) {
  if (n == 1) return m[0];
  Expr sum = Expr::constant(0.0);
  for (std::size_t col = 0; col < n; ++col) {
    const Expr& a = m[col];
    if (a.is_constant(0.0)) continue;
    std::vector<Expr> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) minor.push_back(m[r * n + c]);
      }
    }
    const Expr term = simplify(a * symbolic_det(minor, n - 1));
    if (term.is_constant(0.0)) continue;
    sum = simplify(col % 2 == 0 ? sum + term : sum - term);
  }
  return sum;
}

bool is_diagonal(const std::vector<Expr>& m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !m[i * n + j].is_constant(0.0)) return false;
    }
  }
  return true;
}

}  // namespace

MetricField::MetricField(std::string name, std::vector<std::string> coordinates,
                         std::vector<std::vector<Expr>> components,
                         std::vector<DomainConstraint> domain) {
  const std::size_t n = components.size();
  if (n == 0 || n > kMaxDimension) {
    throw InvalidArgument("metric dimension must be in [1, " + std::to_string(kMaxDimension) +
                          "], got " + std::to_string(n));
  }
  if (coordinates.size() != n) {
    throw InvalidArgument("metric has dimension " + std::to_string(n) + " but " +
                          std::to_string(coordinates.size()) + " coordinate names");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (components[i].size() != n) {
      throw InvalidArgument("metric row " + std::to_string(i) + " has " +
                            std::to_string(components[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
  }

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->coords = std::move(coordinates);
  d->n = n;
  d->domain = std::move(domain);
  d->g.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!structurally_equal(components[i][j], components[j][i])) {
        throw InvalidArgument("metric is not symmetric: entries metric[" + std::to_string(i) +
                              "][" + std::to_string(j) + "] and metric[" + std::to_string(j) +
                              "][" + std::to_string(i) + "] differ");
      }
      if (auto m = max_coordinate(components[i][j]); m && *m >= n) {
        throw InvalidArgument("metric[" + std::to_string(i) + "][" + std::to_string(j) +
                              "] references coordinate index " + std::to_string(*m));
      }
      d->g[i * n + j] = d->g[j * n + i] = simplify(components[i][j]);
    }
  }

  d->dg.resize(n * n * n);
  d->ddg.resize(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        const Expr first = differentiate(d->g[i * n + j], m);
        d->dg[(m * n + i) * n + j] = d->dg[(m * n + j) * n + i] = first;
        for (std::size_t p = m; p < n; ++p) {
          const Expr second = differentiate(first, p);
          for (auto [a, b] : {std::pair{m, p}, std::pair{p, m}}) {
            d->ddg[((a * n + b) * n + i) * n + j] = second;
            d->ddg[((a * n + b) * n + j) * n + i] = second;
          }
        }
      }
    }
  }

  if (n <= 5 || is_diagonal(d->g, n)) {
    d->det = symbolic_det(d->g, n);
    d->ddet.reserve(n);
    for (std::size_t m = 0; m < n; ++m) d->ddet.push_back(differentiate(*d->det, m));
  }
  data_ = std::move(d);
}

const std::string& MetricField::name() const noexcept { return data_->name; }
std::size_t MetricField::dimension() const noexcept { return data_->n; }
std::span<const std::string> MetricField::coordinates() const noexcept { return data_->coords; }
std::span<const DomainConstraint> MetricField::domain() const noexcept { return data_->domain; }

const Expr& MetricField::component(std::size_t i, std::size_t j) const {
  return data_->g.at(i * data_->n + j);
}

const Expr& MetricField::partial(std::size_t m, std::size_t i, std::size_t j) const {
  const std::size_t n = data_->n;
  return data_->dg.at((m * n + i) * n + j);
}

const Expr& MetricField::second_partial(std::size_t m, std::size_t p, std::size_t i,
                                        std::size_t j) const {
  const std::size_t n = data_->n;
  return data_->ddg.at(((m * n + p) * n + i) * n + j);
}

const std::optional<Expr>& MetricField::determinant() const noexcept { return data_->det; }

const Expr& MetricField::determinant_partial(std::size_t m) const {
  if (!data_->det) throw InvalidArgument("no symbolic determinant for metric " + data_->name);
  return data_->ddet.at(m);
}

bool MetricField::contains(const ChartPoint& p) const noexcept {
  if (p.size() != data_->n) return false;
  for (const double x : p.coords) {
    if (!std::isfinite(x)) return false;
  }
  for (const auto& c : data_->domain) {
    if (!c.satisfied(p.span())) return false;
  }
  return true;
}

namespace {

std::string point_text(const ChartPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += format_number(p[i]);
  }
  return s + ")";
}

}  // namespace

void MetricField::require_in_domain(const ChartPoint& p) const {
  if (p.size() != data_->n) {
    throw DimensionError("point has dimension " + std::to_string(p.size()) + ", manifold " +
                         data_->name + " has dimension " + std::to_string(data_->n));
  }
  for (const double x : p.coords) {
    if (!std::isfinite(x)) throw DomainError("non-finite coordinate in point " + point_text(p));
  }
  for (const auto& c : data_->domain) {
    if (!c.satisfied(p.span())) {
      throw DomainError("point " + point_text(p) + " is outside the chart domain of " +
                        data_->name + ": violates " + c.to_string(data_->coords));
    }
  }
}

MetricField MetricField::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidArgument("metric scale factor must be positive, got " + format_number(c));
  }
  auto d = std::make_shared<Data>(*data_);
  const Expr factor = Expr::constant(c);
  auto scale_all = [&](std::vector<Expr>& v) {
    // Entries are shared between symmetric slots; scale each distinct node once.
    std::unordered_map<const void*, Expr> done;
    for (Expr& e : v) {
      auto it = done.find(e.node_id());
      if (it == done.end()) it = done.emplace(e.node_id(), simplify(factor * e)).first;
      e = it->second;
    }
  };
  scale_all(d->g);
  scale_all(d->dg);
  scale_all(d->ddg);
  if (d->det) {
    const Expr det_factor = Expr::constant(std::pow(c, static_cast<double>(d->n)));
    d->det = simplify(det_factor * *d->det);
    for (Expr& e : d->ddet) e = simplify(det_factor * e);
  }
  return MetricField(std::shared_ptr<const Data>(std::move(d)));
}

// ---------------------------------------------------------------------------
// Pointwise evaluation

MetricAtPoint metric_at(const MetricField& field, const ChartPoint& p) {
  field.require_in_domain(p);
  const auto n = static_cast<Eigen::Index>(field.dimension());
  MetricAtPoint out;
  out.g.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      out.g(i, j) = out.g(j, i) = evaluate(field.component(i, j), p.span());
    }
  }
  if (!out.g.allFinite()) {
    throw DegenerateMetricError("metric of " + field.name() + " is not finite at " +
                                point_text(p));
  }

  // Leading principal minors from the Cholesky factor: minor_k = prod_{i<k} L_ii^2.
  Eigen::LLT<Eigen::MatrixXd> llt(out.g);
  if (llt.info() != Eigen::Success) {
    throw DegenerateMetricError("metric of " + field.name() +
                                " is not positive definite at " + point_text(p));
  }
  double minor = 1.0;
  const Eigen::MatrixXd l = llt.matrixL();
  for (Eigen::Index k = 0; k < n; ++k) {
    minor *= l(k, k) * l(k, k);
    if (!(minor > 0.0)) {
      throw DegenerateMetricError("leading principal minor " + std::to_string(k + 1) +
                                  " of the metric of " + field.name() +
                                  " is not positive at " + point_text(p));
    }
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(out.g);
  out.g_inv = lu.inverse();
  out.det = lu.determinant();
  out.log_sqrt_det = 0.5 * std::log(out.det);
  return out;
}

std::vector<Eigen::MatrixXd> metric_partials_at(const MetricField& field, const ChartPoint& p) {
  field.require_in_domain(p);
  const std::size_t n = field.dimension();
  std::vector<Eigen::MatrixXd> out(n, Eigen::MatrixXd(n, n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        out[m](i, j) = out[m](j, i) = evaluate(field.partial(m, i, j), p.span());
      }
    }
  }
  return out;
}

namespace {

void require_dimension(const MetricField& field, const TangentVector& v, const char* what) {
  if (v.size() != field.dimension()) {
    throw DimensionError(std::string(what) + " has dimension " + std::to_string(v.size()) +
                         ", manifold " + field.name() + " has dimension " +
                         std::to_string(field.dimension()));
  }
}

}  // namespace

double inner_product(const MetricField& field, const ChartPoint& p, const TangentVector& v,
                     const TangentVector& c) {
  require_dimension(field, v, "first vector");
  require_dimension(field, c, "second vector");
  if (!v.is_upper() || !c.is_upper()) {
    throw InvalidArgument("inner_product expects upper-index (contravariant) vectors");
  }
  const MetricAtPoint m = metric_at(field, p);
  return v.as_eigen().dot(m.g * c.as_eigen());
}

double norm(const MetricField& field, const ChartPoint& p, const TangentVector& v) {
  return std::sqrt(inner_product(field, p, v, v));
}

TangentVector lower_index(const MetricField& field, const ChartPoint& p, const TangentVector& v) {
  require_dimension(field, v, "vector");
  if (!v.is_upper()) throw InvalidArgument("lower_index expects an upper-index vector");
  const MetricAtPoint m = metric_at(field, p);
  const Eigen::VectorXd low = m.g * v.as_eigen();
  return TangentVector(std::vector<double>(low.begin(), low.end()), IndexPosition::Lower);
}

TangentVector raise_index(const MetricField& field, const ChartPoint& p, const TangentVector& v) {
  require_dimension(field, v, "vector");
  if (v.is_upper()) throw InvalidArgument("raise_index expects a lower-index vector");
  const MetricAtPoint m = metric_at(field, p);
  const Eigen::VectorXd up = m.g_inv * v.as_eigen();
  return TangentVector(std::vector<double>(up.begin(), up.end()), IndexPosition::Upper);
}

}  // namespace geospin
