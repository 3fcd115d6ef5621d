#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geospin {

/// Node kinds of the metric-component expression language.
enum class Op : std::uint8_t {
  Constant,
  Coordinate,
  // unary
  Neg,
  Sin,
  Cos,
  Sinh,
  Cosh,
  Exp,
  Ln,
  Sqrt,
  // binary
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

bool is_unary(Op op) noexcept;
bool is_binary(Op op) noexcept;
std::string_view op_name(Op op) noexcept;

/// Immutable expression tree over chart coordinates.
///
/// Nodes are shared, so copying an Expr is cheap and subtrees produced by
/// differentiation reuse the original nodes. A `Pow` node always has a
/// `Constant` exponent; this keeps differentiation closed-form.
class Expr {
 public:
  struct Node;

  /// The constant 0.
  Expr();

  static Expr constant(double value);
  static Expr coordinate(std::size_t index);
  static Expr unary(Op op, Expr arg);
  /// Throws InvalidArgument for `Pow` with a non-constant exponent.
  static Expr binary(Op op, Expr lhs, Expr rhs);

  Op op() const noexcept;
  /// Value of a Constant node (0 for other kinds).
  double value() const noexcept;
  /// Index of a Coordinate node (0 for other kinds).
  std::size_t index() const noexcept;
  std::span<const Expr> children() const noexcept;
  /// Byte offset into the parsed text, for nodes produced by the parser.
  std::optional<std::size_t> source_offset() const noexcept;

  bool is_constant() const noexcept { return op() == Op::Constant; }
  bool is_constant(double v) const noexcept { return is_constant() && value() == v; }

  /// Copy of this node tagged with a source offset.
  Expr at_offset(std::size_t offset) const;

  /// Identity of the underlying node (same shared subtree).
  bool same_node(const Expr& other) const noexcept { return node_ == other.node_; }
  const void* node_id() const noexcept { return node_.get(); }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op = Op::Constant;
  double value = 0.0;
  std::size_t index = 0;
  std::vector<Expr> children;
  std::optional<std::size_t> offset;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, double exponent);

/// Names accepted in function-call position: sin cos sinh cosh exp ln sqrt.
std::optional<Op> function_op(std::string_view name) noexcept;

/// Parses `text` into an expression over the named coordinates.
///
/// Grammar (EBNF):
///   expr    = term { ("+" | "-") term } ;
///   term    = unary { ("*" | "/") unary } ;
///   unary   = "-" unary | power ;
///   power   = primary [ "^" unary ] ;          (right associative)
///   primary = number | name | func "(" expr ")" | "(" expr ")" ;
///
/// `name` is a coordinate or one of the constants `pi`, `e`. The exponent of
/// `^` must reduce to a constant. Errors are reported as ParseError with the
/// byte offset of the offending token.
Expr parse_expr(std::string_view text, std::span<const std::string> coords);

/// Exact partial derivative with respect to coordinate `coord`, simplified.
Expr differentiate(const Expr& e, std::size_t coord);

/// Constant folding plus the identities 0+e, e+0, e-0, 1*e, e*1, 0*e, e*0,
/// e/1, e^1, e^0 and double negation. Never folds an invalid operation
/// (e.g. ln of a negative constant), so evaluation errors are preserved.
Expr simplify(const Expr& e);

/// Evaluates at a chart point. Throws DomainError for ln of a non-positive
/// value, sqrt of a negative value, division by zero, or a negative base
/// raised to a non-integer power; the message names the failing node.
double evaluate(const Expr& e, std::span<const double> point);

/// Text form that parses back to an evaluation-identical expression.
/// Without coordinate names, coordinates print as x0, x1, ...
std::string unparse(const Expr& e, std::span<const std::string> coords = {});

bool structurally_equal(const Expr& a, const Expr& b) noexcept;

/// Largest coordinate index referenced, if any.
std::optional<std::size_t> max_coordinate(const Expr& e) noexcept;

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

}  // namespace geospin
