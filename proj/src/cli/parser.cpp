#include "superalg/cli/parser.h"

#include <cctype>
#include <climits>

namespace superalg::cli {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

ExprAst ExprAst::make_number(Rational q) {
  ExprAst a;
  a.kind = AstKind::Number;
  q.canonicalize();
  a.number = std::move(q);
  return a;
}

ExprAst ExprAst::make_imag() {
  ExprAst a;
  a.kind = AstKind::ImagUnit;
  return a;
}

ExprAst ExprAst::make_symbol(std::string name) {
  ExprAst a;
  a.kind = AstKind::Symbol;
  a.symbol = std::move(name);
  return a;
}

ExprAst ExprAst::make_unary(AstKind kind, ExprAst operand) {
  ExprAst a;
  a.kind = kind;
  a.children.push_back(std::move(operand));
  return a;
}

ExprAst ExprAst::make_binary(AstKind kind, ExprAst lhs, ExprAst rhs) {
  ExprAst a;
  a.kind = kind;
  a.children.push_back(std::move(lhs));
  a.children.push_back(std::move(rhs));
  return a;
}

ExprAst ExprAst::make_pow(ExprAst base, int exponent) {
  ExprAst a;
  a.kind = AstKind::Pow;
  a.exponent = exponent;
  a.children.push_back(std::move(base));
  return a;
}

namespace {

bool indexed_symbol(const std::string& name, char head, char max_index) {
  return name.size() == 2 && name[0] == head && name[1] >= '1' && name[1] <= max_index;
}

}  // namespace

bool is_position_symbol(const std::string& name) { return indexed_symbol(name, 'x', '3'); }
bool is_momentum_symbol(const std::string& name) { return indexed_symbol(name, 'p', '3'); }
bool is_param_symbol(const std::string& name) { return indexed_symbol(name, 'c', '4'); }

namespace {

class Parser {
 public:
  Parser(const std::string& src, const Environment* env) : src_(src), env_(env) {}

  ExprAst parse() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
    ExprAst e = expr();
    skip_ws();
    if (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ')' || c == ']' || c == '}') throw ParseError(std::string("unbalanced '") + c + "'", pos_);
      if (c == '/') throw ParseError("division is not supported; use negative exponents on x1..x3", pos_);
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, std::size_t open_pos, char open) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return;
    }
    if (pos_ >= src_.size())
      throw ParseError(std::string("unbalanced '") + open + "', expected '" + c + "'", open_pos);
    throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = ExprAst::make_binary(AstKind::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = ExprAst::make_binary(AstKind::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  ExprAst term() {
    ExprAst lhs = factor();
    while (accept('*')) lhs = ExprAst::make_binary(AstKind::Mul, std::move(lhs), factor());
    return lhs;
  }

  ExprAst factor() {
    if (accept('-')) return ExprAst::make_unary(AstKind::Neg, factor());
    skip_ws();
    ExprAst base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t exp_pos = pos_;
    bool negative = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t digits_start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (digits_start == pos_) throw ParseError("expected integer exponent", exp_pos);
    if (pos_ - digits_start > 6) throw ParseError("exponent too large", exp_pos);
    int e = std::stoi(src_.substr(digits_start, pos_ - digits_start));
    if (negative) {
      if (base.kind != AstKind::Symbol || !is_position_symbol(base.symbol))
        throw ParseError("negative exponent allowed only on x1, x2, x3", exp_pos);
      e = -e;
    }
    return ExprAst::make_pow(std::move(base), e);
  }

  ExprAst atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      std::size_t open = pos_++;
      ExprAst inner = expr();
      expect(')', open, '(');
      return inner;
    }
    if (c == '[' || c == '{') {
      std::size_t open = pos_++;
      char close = c == '[' ? ']' : '}';
      ExprAst lhs = expr();
      expect(',', open, c);
      ExprAst rhs = expr();
      expect(close, open, c);
      return ExprAst::make_binary(c == '[' ? AstKind::Comm : AstKind::Acomm, std::move(lhs), std::move(rhs));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == ')' || c == ']' || c == '}') throw ParseError(std::string("unbalanced '") + c + "'", pos_);
    if (c == '/') throw ParseError("division is not supported; use negative exponents on x1..x3", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  ExprAst number() {
    std::size_t start = pos_;
    auto digits = [this] {
      std::size_t s = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return pos_ - s;
    };
    std::size_t whole = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      if (digits() == 0 && whole == 0) throw ParseError("malformed number", start);
    } else if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      if (digits() == 0) throw ParseError("division is not supported; use negative exponents on x1..x3", pos_ - 1);
    }
    std::string text = src_.substr(start, pos_ - start);
    try {
      return ExprAst::make_number(parse_rational(text));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
  }

  ExprAst identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    if (name == "i") return ExprAst::make_imag();
    if (is_position_symbol(name) || is_momentum_symbol(name) || is_param_symbol(name))
      return ExprAst::make_symbol(name);
    if (env_ != nullptr && env_->count(name) != 0) return ExprAst::make_symbol(name);
    throw ParseError("unknown symbol '" + name + "'", start);
  }

  const std::string& src_;
  const Environment* env_;
  std::size_t pos_ = 0;
};

int precedence(const ExprAst& a) {
  switch (a.kind) {
    case AstKind::Add:
    case AstKind::Sub:
      return 1;
    case AstKind::Mul:
      return 2;
    case AstKind::Neg:
      return 3;
    case AstKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string print(const ExprAst& a, int min_prec) {
  std::string out;
  switch (a.kind) {
    case AstKind::Number:
      out = to_string(a.number);
      break;
    case AstKind::ImagUnit:
      out = "i";
      break;
    case AstKind::Symbol:
      out = a.symbol;
      break;
    case AstKind::Neg:
      out = "-" + print(a.children[0], 3);
      break;
    case AstKind::Add:
      out = print(a.children[0], 1) + " + " + print(a.children[1], 2);
      break;
    case AstKind::Sub:
      out = print(a.children[0], 1) + " - " + print(a.children[1], 2);
      break;
    case AstKind::Mul:
      out = print(a.children[0], 2) + "*" + print(a.children[1], 3);
      break;
    case AstKind::Pow:
      out = print(a.children[0], 5) + "^" + std::to_string(a.exponent);
      break;
    case AstKind::Comm:
      out = "[" + print(a.children[0], 0) + ", " + print(a.children[1], 0) + "]";
      break;
    case AstKind::Acomm:
      out = "{" + print(a.children[0], 0) + ", " + print(a.children[1], 0) + "}";
      break;
  }
  if (precedence(a) < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace

ExprAst parse_operator(const std::string& src, const Environment* env) { return Parser(src, env).parse(); }

std::string print_ast(const ExprAst& ast) { return print(ast, 0); }

OperatorExpr lower(const ExprAst& a, const Environment* env) {
  switch (a.kind) {
    case AstKind::Number:
      return OperatorExpr(Coefficient(GaussianRational(a.number)));
    case AstKind::ImagUnit:
      return OperatorExpr::i();
    case AstKind::Symbol: {
      const std::string& s = a.symbol;
      if (is_position_symbol(s)) return OperatorExpr::x(s[1] - '0');
      if (is_momentum_symbol(s)) return OperatorExpr::p(s[1] - '0');
      if (is_param_symbol(s)) return OperatorExpr::c(s[1] - '0');
      if (env != nullptr) {
        auto it = env->find(s);
        if (it != env->end()) return it->second;
      }
      throw std::invalid_argument("unknown symbol '" + s + "'");
    }
    case AstKind::Neg:
      return -lower(a.children[0], env);
    case AstKind::Add:
      return lower(a.children[0], env) + lower(a.children[1], env);
    case AstKind::Sub:
      return lower(a.children[0], env) - lower(a.children[1], env);
    case AstKind::Mul:
      return lower(a.children[0], env) * lower(a.children[1], env);
    case AstKind::Pow: {
      const ExprAst& base = a.children[0];
      if (a.exponent < 0) {
        if (base.kind != AstKind::Symbol || !is_position_symbol(base.symbol))
          throw std::invalid_argument("negative exponent allowed only on x1, x2, x3");
        return OperatorExpr::x(base.symbol[1] - '0', a.exponent);
      }
      if (base.kind == AstKind::Symbol && is_position_symbol(base.symbol))
        return OperatorExpr::x(base.symbol[1] - '0', a.exponent);
      if (base.kind == AstKind::Symbol && is_momentum_symbol(base.symbol))
        return OperatorExpr::p(base.symbol[1] - '0', a.exponent);
      return power(lower(base, env), a.exponent);
    }
    case AstKind::Comm:
      return commutator(lower(a.children[0], env), lower(a.children[1], env));
    case AstKind::Acomm:
      return anticommutator(lower(a.children[0], env), lower(a.children[1], env));
  }
  throw std::logic_error("unreachable");
}

OperatorExpr parse_and_lower(const std::string& src, const Environment* env) {
  return lower(parse_operator(src, env), env);
}

}  // namespace superalg::cli
