#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "superalg/weylcore/operator_expr.h"

namespace superalg::cli {

/// Parse failure with the 0-based character offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class AstKind { Number, ImagUnit, Symbol, Neg, Add, Sub, Mul, Pow, Comm, Acomm };

/// Operator-expression syntax tree. Numbers are nonnegative rationals; signs
/// live in Neg/Sub nodes.
struct ExprAst {
  AstKind kind = AstKind::Number;
  Rational number{0};
  std::string symbol;
  int exponent = 0;
  std::vector<ExprAst> children;

  static ExprAst make_number(Rational q);
  static ExprAst make_imag();
  static ExprAst make_symbol(std::string name);
  static ExprAst make_unary(AstKind kind, ExprAst operand);
  static ExprAst make_binary(AstKind kind, ExprAst lhs, ExprAst rhs);
  static ExprAst make_pow(ExprAst base, int exponent);

  friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

/// Named operators available to the parser beyond x1..x3, p1..p3, c1..c4.
using Environment = std::map<std::string, OperatorExpr>;

bool is_position_symbol(const std::string& name);
bool is_momentum_symbol(const std::string& name);
bool is_param_symbol(const std::string& name);

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' int)?
///   atom   := number | 'i' | symbol | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
/// Numbers are "12", "0.75" or "3/4" (a single token; there is no division
/// operator). Negative exponents are accepted only on x1, x2, x3.
ExprAst parse_operator(const std::string& src, const Environment* env = nullptr);

/// Inverse of parse_operator: parse_operator(print_ast(a)) == a.
std::string print_ast(const ExprAst& ast);

/// Exact lowering into the Weyl algebra.
OperatorExpr lower(const ExprAst& ast, const Environment* env = nullptr);

/// parse_operator followed by lower.
OperatorExpr parse_and_lower(const std::string& src, const Environment* env = nullptr);

}  // namespace superalg::cli
