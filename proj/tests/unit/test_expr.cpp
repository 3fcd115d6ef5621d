#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geospin/error.hpp"
#include "geospin/expr.hpp"
#include "support/oracles.hpp"

namespace geospin {
namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kSphere{"theta", "phi"};

double at(const Expr& e, std::vector<double> p) { return evaluate(e, p); }

TEST(ParseExpr, ReciprocalSquare) {
  const Expr e = parse_expr("1/(y^2)", kXY);
  ASSERT_EQ(e.op(), Op::Div);
  EXPECT_TRUE(e.children()[0].is_constant(1.0));
  const Expr& den = e.children()[1];
  ASSERT_EQ(den.op(), Op::Pow);
  EXPECT_EQ(den.children()[0].op(), Op::Coordinate);
  EXPECT_EQ(den.children()[0].index(), 1u);
  EXPECT_TRUE(den.children()[1].is_constant(2.0));
}

TEST(ParseExpr, FunctionPower) {
  const Expr e = parse_expr("sin(theta)^2", kSphere);
  ASSERT_EQ(e.op(), Op::Pow);
  ASSERT_EQ(e.children()[0].op(), Op::Sin);
  EXPECT_EQ(e.children()[0].children()[0].index(), 0u);
  EXPECT_TRUE(e.children()[1].is_constant(2.0));
}

TEST(ParseExpr, IncompleteInputReportsOffset) {
  try {
    parse_expr("x +", kXY);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ParseExpr, Errors) {
  EXPECT_THROW(parse_expr("", kXY), ParseError);
  EXPECT_THROW(parse_expr("   ", kXY), ParseError);
  EXPECT_THROW(parse_expr("z + 1", kXY), ParseError);      // unknown identifier
  EXPECT_THROW(parse_expr("foo(x)", kXY), ParseError);     // unknown function
  EXPECT_THROW(parse_expr("sin(x, y)", kXY), ParseError);  // arity
  EXPECT_THROW(parse_expr("sin()", kXY), ParseError);      // arity
  EXPECT_THROW(parse_expr("sin", kXY), ParseError);        // missing call
  EXPECT_THROW(parse_expr("x^y", kXY), ParseError);        // non-constant exponent
  EXPECT_THROW(parse_expr("(x + 1", kXY), ParseError);
  EXPECT_THROW(parse_expr("x $ y", kXY), ParseError);
  EXPECT_THROW(parse_expr("2x", kXY), ParseError);

  try {
    parse_expr("x + qq", kXY);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(ParseExpr, PrecedenceAndAssociativity) {
  EXPECT_DOUBLE_EQ(at(parse_expr("2^3^2", kXY), {0, 0}), 512.0);
  EXPECT_DOUBLE_EQ(at(parse_expr("-x^2", kXY), {3, 0}), -9.0);
  EXPECT_DOUBLE_EQ(at(parse_expr("8 / 4 / 2", kXY), {0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(at(parse_expr("1 - 2 - 3", kXY), {0, 0}), -4.0);
  EXPECT_DOUBLE_EQ(at(parse_expr("y^-2", kXY), {0, 2}), 0.25);
  EXPECT_DOUBLE_EQ(at(parse_expr("1.5e-1 * 2E1", kXY), {0, 0}), 3.0);
  EXPECT_DOUBLE_EQ(at(parse_expr("cos(pi)", kXY), {0, 0}), -1.0);
  EXPECT_DOUBLE_EQ(at(parse_expr("ln(e)", kXY), {0, 0}), 1.0);
}

TEST(Differentiate, PowerRule) {
  const Expr d = differentiate(parse_expr("y^2", kXY), 1);
  EXPECT_EQ(unparse(d, kXY), "2 * y");
  for (double y : {-1.5, 0.0, 2.0}) EXPECT_DOUBLE_EQ(at(d, {0.3, y}), 2 * y);
}

TEST(Differentiate, ChainRule) {
  const Expr d = differentiate(parse_expr("sin(theta)^2", kSphere), 0);
  for (double t : {0.1, 0.7, 2.0}) {
    EXPECT_NEAR(at(d, {t, 0}), 2 * std::sin(t) * std::cos(t), 1e-15);
  }
}

TEST(Differentiate, IndependentVariableIsZero) {
  const Expr d = differentiate(parse_expr("1/y^2", kXY), 0);
  EXPECT_TRUE(d.is_constant(0.0));
}

TEST(Evaluate, Examples) {
  EXPECT_DOUBLE_EQ(at(parse_expr("1/y^2", kXY), {0, 2}), 0.25);
  EXPECT_THROW(at(parse_expr("ln(y)", kXY), {0, 0}), DomainError);
  EXPECT_THROW(at(parse_expr("sqrt(x)", kXY), {-1, 0}), DomainError);
  EXPECT_THROW(at(parse_expr("1 / x", kXY), {0, 0}), DomainError);
  EXPECT_THROW(at(parse_expr("x^0.5", kXY), {-1, 0}), DomainError);
  EXPECT_THROW(at(parse_expr("x^-1", kXY), {0, 0}), DomainError);
}

TEST(Evaluate, DomainErrorNamesNode) {
  try {
    at(parse_expr("x + ln(y)", kXY), {1, -2});
    FAIL();
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("ln"), std::string::npos);
    EXPECT_NE(msg.find("offset 4"), std::string::npos);
  }
}

TEST(Evaluate, DerivativeOfSinSquaredMatchesFiniteDifference) {
  const Expr f = parse_expr("sin(theta)^2", kSphere);
  const Expr d = differentiate(f, 0);
  const double t = std::numbers::pi / 4;
  const double h = 1e-5;
  const double fd = (at(f, {t + h, 0}) - at(f, {t - h, 0})) / (2 * h);
  EXPECT_NEAR(fd, 1.0, 1e-9);  // oracle value
  EXPECT_NEAR(at(d, {t, 0}), 1.0, 1e-12);
}

TEST(Simplify, Examples) {
  EXPECT_EQ(unparse(simplify(parse_expr("0*sin(x)+y", kXY)), kXY), "y");
  const Expr six = simplify(parse_expr("2*3", kXY));
  ASSERT_TRUE(six.is_constant());
  EXPECT_EQ(six.value(), 6.0);
  EXPECT_EQ(unparse(simplify(parse_expr("x^1", kXY)), kXY), "x");
  EXPECT_EQ(unparse(simplify(parse_expr("1*x - 0", kXY)), kXY), "x");
  EXPECT_EQ(unparse(simplify(parse_expr("x/1 + 0", kXY)), kXY), "x");
  EXPECT_EQ(unparse(simplify(parse_expr("--x", kXY)), kXY), "x");
}

TEST(Simplify, KeepsInvalidConstantOperations) {
  const Expr e = simplify(parse_expr("ln(-1) + x", kXY));
  EXPECT_THROW(at(e, {0, 0}), DomainError);
  const Expr d = simplify(parse_expr("1 / 0", kXY));
  EXPECT_FALSE(d.is_constant());
}

TEST(Unparse, NegativeConstantsAndNesting) {
  for (const char* text : {"(-2)^2", "x - -3", "-(x + y)", "(x^2)^3", "x / (y * 2)",
                           "x - (y - 1)", "-x^2", "2^-1", "exp(-x) * cosh(y)"}) {
    const Expr e = parse_expr(text, kXY);
    const Expr back = parse_expr(unparse(e, kXY), kXY);
    for (const auto& p : {std::vector<double>{0.3, 1.7}, std::vector<double>{-1.1, 0.4}}) {
      EXPECT_EQ(at(e, p), at(back, p)) << text << " -> " << unparse(e, kXY);
    }
  }
}

// Random smooth expressions whose every subterm is defined on all of R^n.
Expr random_expr(std::mt19937_64& rng, std::size_t n, int depth) {
  using testing::uniform;
  const auto leaf = [&] {
    if (uniform(rng, 0, 1) < 0.3) return Expr::constant(std::round(uniform(rng, -30, 30)) / 10);
    return Expr::coordinate(static_cast<std::size_t>(uniform(rng, 0, static_cast<double>(n))));
  };
  if (depth == 0) return leaf();
  const Expr a = random_expr(rng, n, depth - 1);
  const Expr one = Expr::constant(1.0);
  switch (static_cast<int>(uniform(rng, 0, 11))) {
    case 0: return a + random_expr(rng, n, depth - 1);
    case 1: return a - random_expr(rng, n, depth - 1);
    case 2: return a * random_expr(rng, n, depth - 1);
    case 3: return a / (pow(random_expr(rng, n, depth - 1), 2) + one);
    case 4: return Expr::unary(Op::Sin, a);
    case 5: return Expr::unary(Op::Cos, a);
    case 6: return Expr::unary(Op::Sinh, Expr::unary(Op::Sin, a));
    case 7: return Expr::unary(Op::Cosh, Expr::unary(Op::Cos, a));
    case 8: return Expr::unary(Op::Exp, Expr::unary(Op::Sin, a));
    case 9: return Expr::unary(Op::Ln, pow(a, 2) + one);
    default: return Expr::unary(Op::Sqrt, pow(a, 2) + Expr::constant(0.5));
  }
}

TEST(ExprProperties, DerivativeMatchesCentralDifferencesOnZooCharts) {
  std::mt19937_64 rng(7);
  for (const auto& zc : testing::zoo_cases()) {
    const MetricField f = builtin_manifold(zc.name, zc.params);
    const std::size_t n = f.dimension();
    for (int trial = 0; trial < 100; ++trial) {
      const Expr e = random_expr(rng, n, 3);
      const ChartPoint p = testing::sample_point(f, rng);
      const auto k = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<double>(n)));
      const double value = evaluate(differentiate(e, k), p.span());
      const double h = 1e-6 * std::max(1.0, std::abs(p[k]));
      ChartPoint a = p;
      ChartPoint b = p;
      a[k] += h;
      b[k] -= h;
      const double fd = (evaluate(e, a.span()) - evaluate(e, b.span())) / (2 * h);
      EXPECT_LE(std::abs(value - fd), 1e-6 * (1 + std::abs(value)))
          << zc.label << ": d/d" << f.coordinates()[k] << " " << unparse(e, f.coordinates());
    }
  }
}

TEST(ExprProperties, SimplifyAndUnparsePreserveValue) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> names{"a", "b", "c"};
  for (int trial = 0; trial < 300; ++trial) {
    const Expr e = random_expr(rng, 3, 3);
    const Expr s = simplify(e);
    const Expr back = parse_expr(unparse(e, names), names);
    const std::vector<double> p{testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2),
                                testing::uniform(rng, -2, 2)};
    const double v = evaluate(e, p);
    EXPECT_NEAR(evaluate(s, p), v, 1e-12 * (1 + std::abs(v))) << unparse(e, names);
    EXPECT_NEAR(evaluate(back, p), v, 1e-12 * (1 + std::abs(v))) << unparse(e, names);
  }
}

TEST(Expr, PowRequiresConstantExponent) {
  EXPECT_THROW(Expr::binary(Op::Pow, Expr::coordinate(0), Expr::coordinate(1)), InvalidArgument);
  EXPECT_THROW(Expr::unary(Op::Add, Expr::coordinate(0)), InvalidArgument);
}

TEST(Expr, MaxCoordinate) {
  EXPECT_FALSE(max_coordinate(parse_expr("2 + pi", kXY)).has_value());
  EXPECT_EQ(*max_coordinate(parse_expr("x * sin(y)", kXY)), 1u);
}

}  // namespace
}  // namespace geospin
