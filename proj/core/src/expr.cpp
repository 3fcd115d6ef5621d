#include "geospin/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "geospin/error.hpp"

namespace geospin {

bool is_unary(Op op) noexcept { return op >= Op::Neg && op <= Op::Sqrt; }
bool is_binary(Op op) noexcept { return op >= Op::Add && op <= Op::Pow; }

std::string_view op_name(Op op) noexcept {
  switch (op) {
    case Op::Constant: return "const";
    case Op::Coordinate: return "coord";
    case Op::Neg: return "neg";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Sinh: return "sinh";
    case Op::Cosh: return "cosh";
    case Op::Exp: return "exp";
    case Op::Ln: return "ln";
    case Op::Sqrt: return "sqrt";
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Pow: return "pow";
  }
  return "?";
}

std::optional<Op> function_op(std::string_view name) noexcept {
  static constexpr std::array<std::pair<std::string_view, Op>, 7> table{{
      {"sin", Op::Sin},
      {"cos", Op::Cos},
      {"sinh", Op::Sinh},
      {"cosh", Op::Cosh},
      {"exp", Op::Exp},
      {"ln", Op::Ln},
      {"sqrt", Op::Sqrt},
  }};
  for (const auto& [n, op] : table) {
    if (n == name) return op;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

const Expr& zero_constant() {
  static const Expr zero = Expr::constant(0.0);
  return zero;
}

}  // namespace

Expr::Expr() : Expr(zero_constant()) {}

Expr Expr::constant(double value) {
  auto n = std::make_shared<Node>();
  n->op = Op::Constant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::coordinate(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->op = Op::Coordinate;
  n->index = index;
  return Expr(std::move(n));
}

Expr Expr::unary(Op op, Expr arg) {
  if (!is_unary(op)) throw InvalidArgument("not a unary operator: " + std::string(op_name(op)));
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children.push_back(std::move(arg));
  return Expr(std::move(n));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  if (!is_binary(op)) throw InvalidArgument("not a binary operator: " + std::string(op_name(op)));
  if (op == Op::Pow && !rhs.is_constant()) {
    throw InvalidArgument("pow exponent must be a constant");
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Expr(std::move(n));
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::value() const noexcept { return node_->value; }
std::size_t Expr::index() const noexcept { return node_->index; }
std::span<const Expr> Expr::children() const noexcept { return node_->children; }
std::optional<std::size_t> Expr::source_offset() const noexcept { return node_->offset; }

Expr Expr::at_offset(std::size_t offset) const {
  auto n = std::make_shared<Node>(*node_);
  n->offset = offset;
  return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Op::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Op::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Op::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Op::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Op::Neg, a); }
Expr pow(const Expr& base, double exponent) {
  return Expr::binary(Op::Pow, base, Expr::constant(exponent));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string_view text;
  double number = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= src_.size()) return t;

    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_ + 1;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
        ++end;
      }
      t.kind = Tok::Name;
      t.text = src_.substr(pos_, end - pos_);
      pos_ = end;
      return t;
    }
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                             std::to_string(pos_),
                         pos_);
    }
    t.text = src_.substr(pos_, 1);
    ++pos_;
    return t;
  }

 private:
  Token number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    Token t;
    t.kind = Tok::Number;
    t.offset = start;
    t.text = src_.substr(start, pos_ - start);
    const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
    if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size()) {
      throw ParseError("malformed number '" + std::string(t.text) + "' at offset " +
                           std::to_string(start),
                       start);
    }
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> coords)
      : lexer_(text), coords_(coords) {
    advance();
  }

  Expr parse() {
    Expr e = expr();
    if (cur_.kind != Tok::End) fail({"operator", "end of input"});
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(cur_.offset) + ": found " +
                      describe(cur_) + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += expected[i];
    }
    throw ParseError(msg, cur_.offset, std::move(expected));
  }

  Expr expr() {
    Expr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const Op op = cur_.kind == Tok::Plus ? Op::Add : Op::Sub;
      const std::size_t at = cur_.offset;
      advance();
      lhs = Expr::binary(op, lhs, term()).at_offset(at);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const Op op = cur_.kind == Tok::Star ? Op::Mul : Op::Div;
      const std::size_t at = cur_.offset;
      advance();
      lhs = Expr::binary(op, lhs, unary()).at_offset(at);
    }
    return lhs;
  }

  Expr unary() {
    if (cur_.kind == Tok::Minus) {
      const std::size_t at = cur_.offset;
      advance();
      return Expr::unary(Op::Neg, unary()).at_offset(at);
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (cur_.kind != Tok::Caret) return base;
    const std::size_t at = cur_.offset;
    advance();
    const std::size_t exp_at = cur_.offset;
    Expr exponent = simplify(unary());
    if (!exponent.is_constant()) {
      throw ParseError("exponent at offset " + std::to_string(exp_at) +
                           " must be a constant expression",
                       exp_at);
    }
    return Expr::binary(Op::Pow, base, exponent).at_offset(at);
  }

  Expr primary() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Number:
        advance();
        return Expr::constant(t.number).at_offset(t.offset);
      case Tok::LParen: {
        advance();
        Expr inner = expr();
        if (cur_.kind != Tok::RParen) fail({"')'"});
        advance();
        return inner;
      }
      case Tok::Name:
        advance();
        return name(t);
      default:
        fail({"number", "identifier", "'('", "'-'"});
    }
  }

  Expr name(const Token& t) {
    if (cur_.kind == Tok::LParen) {
      const auto op = function_op(t.text);
      if (!op) {
        throw ParseError("unknown function '" + std::string(t.text) + "' at offset " +
                             std::to_string(t.offset),
                         t.offset);
      }
      advance();
      if (cur_.kind == Tok::RParen) {
        throw ParseError("function '" + std::string(t.text) +
                             "' takes exactly 1 argument, got 0 (offset " +
                             std::to_string(t.offset) + ")",
                         t.offset);
      }
      Expr arg = expr();
      if (cur_.kind == Tok::Comma) {
        throw ParseError("function '" + std::string(t.text) +
                             "' takes exactly 1 argument, got more (offset " +
                             std::to_string(cur_.offset) + ")",
                         cur_.offset);
      }
      if (cur_.kind != Tok::RParen) fail({"')'"});
      advance();
      return Expr::unary(*op, arg).at_offset(t.offset);
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == t.text) return Expr::coordinate(i).at_offset(t.offset);
    }
    if (t.text == "pi") return Expr::constant(std::numbers::pi).at_offset(t.offset);
    if (t.text == "e") return Expr::constant(std::numbers::e).at_offset(t.offset);
    if (function_op(t.text)) {
      throw ParseError("function '" + std::string(t.text) + "' requires an argument list (offset " +
                           std::to_string(t.offset) + ")",
                       t.offset);
    }
    throw ParseError("unknown identifier '" + std::string(t.text) + "' at offset " +
                         std::to_string(t.offset),
                     t.offset);
  }

  Lexer lexer_;
  std::span<const std::string> coords_;
  Token cur_;
};

}  // namespace

Expr parse_expr(std::string_view text, std::span<const std::string> coords) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw ParseError("empty expression", 0, {"expression"});
  }
  return Parser(text, coords).parse();
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

bool foldable(double v) { return std::isfinite(v); }

std::optional<double> fold_unary(Op op, double a) {
  double r = 0.0;
  switch (op) {
    case Op::Neg: r = -a; break;
    case Op::Sin: r = std::sin(a); break;
    case Op::Cos: r = std::cos(a); break;
    case Op::Sinh: r = std::sinh(a); break;
    case Op::Cosh: r = std::cosh(a); break;
    case Op::Exp: r = std::exp(a); break;
    case Op::Ln:
      if (!(a > 0.0)) return std::nullopt;
      r = std::log(a);
      break;
    case Op::Sqrt:
      if (a < 0.0) return std::nullopt;
      r = std::sqrt(a);
      break;
    default: return std::nullopt;
  }
  return foldable(r) ? std::optional(r) : std::nullopt;
}

std::optional<double> fold_binary(Op op, double a, double b) {
  double r = 0.0;
  switch (op) {
    case Op::Add: r = a + b; break;
    case Op::Sub: r = a - b; break;
    case Op::Mul: r = a * b; break;
    case Op::Div:
      if (b == 0.0) return std::nullopt;
      r = a / b;
      break;
    case Op::Pow:
      if (a < 0.0 && b != std::trunc(b)) return std::nullopt;
      if (a == 0.0 && b < 0.0) return std::nullopt;
      r = std::pow(a, b);
      break;
    default: return std::nullopt;
  }
  return foldable(r) ? std::optional(r) : std::nullopt;
}

Expr simplify_node(const Expr& e) {
  if (e.op() == Op::Constant || e.op() == Op::Coordinate) return e;

  if (is_unary(e.op())) {
    const Expr a = simplify_node(e.children()[0]);
    if (a.is_constant()) {
      if (auto v = fold_unary(e.op(), a.value())) return Expr::constant(*v);
    }
    if (e.op() == Op::Neg && a.op() == Op::Neg) return a.children()[0];
    if (a.same_node(e.children()[0])) return e;
    return Expr::unary(e.op(), a);
  }

  const Expr a = simplify_node(e.children()[0]);
  const Expr b = simplify_node(e.children()[1]);
  if (a.is_constant() && b.is_constant()) {
    if (auto v = fold_binary(e.op(), a.value(), b.value())) return Expr::constant(*v);
  }
  switch (e.op()) {
    case Op::Add:
      if (a.is_constant(0.0)) return b;
      if (b.is_constant(0.0)) return a;
      break;
    case Op::Sub:
      if (b.is_constant(0.0)) return a;
      if (a.is_constant(0.0)) return simplify_node(Expr::unary(Op::Neg, b));
      break;
    case Op::Mul:
      if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
      if (a.is_constant(1.0)) return b;
      if (b.is_constant(1.0)) return a;
      if (a.is_constant(-1.0)) return simplify_node(Expr::unary(Op::Neg, b));
      if (b.is_constant(-1.0)) return simplify_node(Expr::unary(Op::Neg, a));
      // c1 * (c2 * x) -> (c1 c2) * x
      if (a.is_constant() && b.op() == Op::Mul && b.children()[0].is_constant()) {
        if (auto v = fold_binary(Op::Mul, a.value(), b.children()[0].value())) {
          return simplify_node(Expr::binary(Op::Mul, Expr::constant(*v), b.children()[1]));
        }
      }
      if (b.is_constant() && !a.is_constant()) return simplify_node(Expr::binary(Op::Mul, b, a));
      break;
    case Op::Div:
      if (b.is_constant(1.0)) return a;
      if (a.is_constant(0.0) && !b.is_constant()) return Expr::constant(0.0);
      break;
    case Op::Pow:
      if (b.is_constant(1.0)) return a;
      if (b.is_constant(0.0)) return Expr::constant(1.0);
      if (a.op() == Op::Pow) {
        // (u^p)^q = u^(pq) only for integer q; otherwise the sign of u matters.
        const double q = b.value();
        if (q == std::trunc(q)) {
          if (auto pq = fold_binary(Op::Mul, a.children()[1].value(), q)) {
            return simplify_node(Expr::binary(Op::Pow, a.children()[0], Expr::constant(*pq)));
          }
        }
      }
      break;
    default: break;
  }
  if (a.same_node(e.children()[0]) && b.same_node(e.children()[1])) return e;
  return Expr::binary(e.op(), a, b);
}

}  // namespace

Expr simplify(const Expr& e) { return simplify_node(e); }

// ---------------------------------------------------------------------------
// Differentiation

namespace {

Expr derive(const Expr& e, std::size_t k) {
  const auto c = [](double v) { return Expr::constant(v); };
  switch (e.op()) {
    case Op::Constant: return c(0.0);
    case Op::Coordinate: return c(e.index() == k ? 1.0 : 0.0);
    default: break;
  }
  if (is_unary(e.op())) {
    const Expr& u = e.children()[0];
    const Expr du = simplify(derive(u, k));
    if (du.is_constant(0.0)) return c(0.0);
    switch (e.op()) {
      case Op::Neg: return -du;
      case Op::Sin: return Expr::unary(Op::Cos, u) * du;
      case Op::Cos: return -(Expr::unary(Op::Sin, u) * du);
      case Op::Sinh: return Expr::unary(Op::Cosh, u) * du;
      case Op::Cosh: return Expr::unary(Op::Sinh, u) * du;
      case Op::Exp: return e * du;
      case Op::Ln: return du / u;
      case Op::Sqrt: return du / (c(2.0) * e);
      default: break;
    }
  }
  const Expr& u = e.children()[0];
  const Expr& v = e.children()[1];
  const Expr du = simplify(derive(u, k));
  switch (e.op()) {
    case Op::Add: return du + derive(v, k);
    case Op::Sub: return du - derive(v, k);
    case Op::Mul: return du * v + u * derive(v, k);
    case Op::Div: {
      const Expr dv = simplify(derive(v, k));
      if (dv.is_constant(0.0)) return du / v;
      return (du * v - u * dv) / pow(v, 2.0);
    }
    case Op::Pow: {
      const double p = v.value();
      return c(p) * pow(u, p - 1.0) * du;
    }
    default: break;
  }
  return c(0.0);
}

}  // namespace

Expr differentiate(const Expr& e, std::size_t coord) { return simplify(derive(e, coord)); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

[[noreturn]] void domain_fail(const Expr& node, const std::string& what, double arg) {
  std::string msg = what + " (argument " + format_number(arg) + ") in '" + unparse(node) + "'";
  if (auto off = node.source_offset()) msg += " at offset " + std::to_string(*off);
  throw DomainError(msg);
}

double eval(const Expr& e, std::span<const double> x) {
  switch (e.op()) {
    case Op::Constant: return e.value();
    case Op::Coordinate:
      if (e.index() >= x.size()) {
        throw DimensionError("expression references coordinate " + std::to_string(e.index()) +
                             " but the point has dimension " + std::to_string(x.size()));
      }
      return x[e.index()];
    default: break;
  }
  const double a = eval(e.children()[0], x);
  switch (e.op()) {
    case Op::Neg: return -a;
    case Op::Sin: return std::sin(a);
    case Op::Cos: return std::cos(a);
    case Op::Sinh: return std::sinh(a);
    case Op::Cosh: return std::cosh(a);
    case Op::Exp: return std::exp(a);
    case Op::Ln:
      if (!(a > 0.0)) domain_fail(e, "ln of non-positive value", a);
      return std::log(a);
    case Op::Sqrt:
      if (a < 0.0) domain_fail(e, "sqrt of negative value", a);
      return std::sqrt(a);
    default: break;
  }
  const double b = eval(e.children()[1], x);
  switch (e.op()) {
    case Op::Add: return a + b;
    case Op::Sub: return a - b;
    case Op::Mul: return a * b;
    case Op::Div:
      if (b == 0.0) domain_fail(e, "division by zero", b);
      return a / b;
    case Op::Pow:
      if (a < 0.0 && b != std::trunc(b)) domain_fail(e, "negative base with fractional exponent", a);
      if (a == 0.0 && b < 0.0) domain_fail(e, "division by zero", a);
      return std::pow(a, b);
    default: break;
  }
  return 0.0;
}

}  // namespace

double evaluate(const Expr& e, std::span<const double> point) { return eval(e, point); }

// ---------------------------------------------------------------------------
// Printing and inspection

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

// Binding strength used to decide where parentheses are needed.
int precedence(const Expr& e) {
  switch (e.op()) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    case Op::Constant: return e.value() < 0.0 || std::signbit(e.value()) ? 3 : 5;
    default: return 5;
  }
}

void print(const Expr& e, std::span<const std::string> coords, std::string& out);

void print_wrapped(const Expr& e, bool parens, std::span<const std::string> coords,
                   std::string& out) {
  if (parens) out += '(';
  print(e, coords, out);
  if (parens) out += ')';
}

void print(const Expr& e, std::span<const std::string> coords, std::string& out) {
  switch (e.op()) {
    case Op::Constant: out += format_number(e.value()); return;
    case Op::Coordinate:
      if (e.index() < coords.size()) {
        out += coords[e.index()];
      } else {
        out += "x" + std::to_string(e.index());
      }
      return;
    case Op::Neg:
      out += '-';
      print_wrapped(e.children()[0], precedence(e.children()[0]) < 4, coords, out);
      return;
    default: break;
  }
  if (is_unary(e.op())) {
    out += op_name(e.op());
    out += '(';
    print(e.children()[0], coords, out);
    out += ')';
    return;
  }
  const Expr& a = e.children()[0];
  const Expr& b = e.children()[1];
  const int p = precedence(e);
  switch (e.op()) {
    case Op::Add:
    case Op::Sub:
      print_wrapped(a, precedence(a) < p, coords, out);
      out += e.op() == Op::Add ? " + " : " - ";
      print_wrapped(b, precedence(b) <= p, coords, out);
      return;
    case Op::Mul:
    case Op::Div:
      print_wrapped(a, precedence(a) < p, coords, out);
      out += e.op() == Op::Mul ? " * " : " / ";
      print_wrapped(b, precedence(b) <= p, coords, out);
      return;
    case Op::Pow:
      print_wrapped(a, precedence(a) <= p, coords, out);
      out += '^';
      print_wrapped(b, precedence(b) < 5, coords, out);
      return;
    default: return;
  }
}

}  // namespace

std::string unparse(const Expr& e, std::span<const std::string> coords) {
  std::string out;
  print(e, coords, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) noexcept {
  if (a.same_node(b)) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::Constant:
      return a.value() == b.value() || (std::isnan(a.value()) && std::isnan(b.value()));
    case Op::Coordinate: return a.index() == b.index();
    default: break;
  }
  const auto ca = a.children();
  const auto cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!structurally_equal(ca[i], cb[i])) return false;
  }
  return true;
}

std::optional<std::size_t> max_coordinate(const Expr& e) noexcept {
  if (e.op() == Op::Coordinate) return e.index();
  std::optional<std::size_t> best;
  for (const Expr& c : e.children()) {
    if (auto m = max_coordinate(c); m && (!best || *m > *best)) best = m;
  }
  return best;
}

}  // namespace geospin
