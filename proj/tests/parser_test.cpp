#include <doctest.h>

#include <random>

#include "random_ops.h"
#include "superalg/cli/parser.h"

using namespace superalg;
using namespace superalg::cli;

namespace {

OperatorExpr X(int k, int e = 1) { return OperatorExpr::x(k, e); }
OperatorExpr P(int k, int e = 1) { return OperatorExpr::p(k, e); }
OperatorExpr C(int k) { return OperatorExpr::c(k); }
OperatorExpr N(long v) { return OperatorExpr(v); }

std::size_t error_position(const std::string& src) {
  try {
    parse_operator(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << src);
  return 0;
}

ExprAst random_ast(std::mt19937_64& rng, int depth) {
  static const char* symbols[] = {"x1", "x2", "x3", "p1", "p2", "p3", "c1", "c2", "c3", "c4"};
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 2 : 9);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<int> num(0, 12), den(1, 5);
      return ExprAst::make_number(Rational(num(rng), den(rng)));
    }
    case 1:
      return ExprAst::make_imag();
    case 2:
      return ExprAst::make_symbol(symbols[std::uniform_int_distribution<int>(0, 9)(rng)]);
    case 3:
      return ExprAst::make_unary(AstKind::Neg, random_ast(rng, depth - 1));
    case 4:
      return ExprAst::make_binary(AstKind::Add, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 5:
      return ExprAst::make_binary(AstKind::Sub, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 6:
      return ExprAst::make_binary(AstKind::Mul, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 7: {
      std::uniform_int_distribution<int> e(0, 3);
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
        return ExprAst::make_pow(ExprAst::make_symbol("x" + std::to_string(1 + e(rng) % 3)), -1 - e(rng));
      return ExprAst::make_pow(random_ast(rng, depth - 1), e(rng));
    }
    case 8:
      return ExprAst::make_binary(AstKind::Comm, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    default:
      return ExprAst::make_binary(AstKind::Acomm, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parse_operator examples") {
  OperatorExpr a1 = parse_and_lower("p1^2 + 4*c1*x1^2 + c2*x1");
  CHECK(a1 == P(1, 2) + N(4) * C(1) * X(1, 2) + C(2) * X(1));

  ExprAst comm = parse_operator("[x1, p1]");
  CHECK(comm.kind == AstKind::Comm);
  CHECK(lower(comm) == OperatorExpr::i());

  CHECK(error_position("p1^-1") == 3);
}

TEST_CASE("lower examples") {
  CHECK(parse_and_lower("x1*p1 - p1*x1") == OperatorExpr::i());
  CHECK(parse_and_lower("c3*x2^-2") == C(3) * X(2, -2));
  CHECK(parse_and_lower("{x1,p1}") == N(2) * X(1) * P(1) - OperatorExpr::i());
  CHECK(parse_and_lower("0.75*x1 - 3/4*x1").is_zero());
  CHECK(parse_and_lower("-x1^2") == -X(1, 2));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("c3/x2") == 2);
  CHECK(error_position("(x1 + p1") == 0);
  CHECK(error_position("x1 + p1)") == 7);
  CHECK(error_position("x1 $ p1") == 3);
  CHECK(error_position("x1 + q7") == 5);
  CHECK(error_position("(x1*p2)^-1") == 8);
  CHECK(error_position("") == 0);
}

TEST_CASE("environment symbols") {
  Environment env{{"A1", parse_and_lower("p1^2 + 4*c1*x1^2 + c2*x1")}};
  CHECK(parse_and_lower("[A1, A1]", &env).is_zero());
  CHECK(parse_and_lower("A1 - p1^2", &env) == N(4) * C(1) * X(1, 2) + C(2) * X(1));
  CHECK_THROWS_AS(parse_operator("A1"), ParseError);
  CHECK_THROWS_AS(parse_operator("A1^-1", &env), ParseError);
}

TEST_CASE("print_ast round-trips random trees") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    ExprAst ast = random_ast(rng, 4);
    std::string text = print_ast(ast);
    CAPTURE(text);
    CHECK(parse_operator(text) == ast);
  }
}

TEST_CASE("OperatorExpr text form lowers back to itself") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    OperatorExpr e = testing::random_operator(rng, 5, 3);
    std::string text = e.to_string();
    CAPTURE(text);
    CHECK(parse_and_lower(text) == e);
  }
}
