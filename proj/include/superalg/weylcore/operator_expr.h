#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "superalg/weylcore/coefficient.h"

namespace superalg {

/// Normal-ordered word x1^a x2^b x3^c p1^d p2^e p3^f. Position exponents may be
/// negative (Laurent); momentum exponents never are.
struct WeylMonomial {
  std::array<int, 3> x{0, 0, 0};
  std::array<int, 3> p{0, 0, 0};

  static WeylMonomial identity() { return {}; }
  int momentum_degree() const { return p[0] + p[1] + p[2]; }
  bool is_identity() const { return x == std::array<int, 3>{} && p == std::array<int, 3>{}; }

  auto operator<=>(const WeylMonomial&) const = default;
  bool operator==(const WeylMonomial&) const = default;

  /// "x1^2*p1", or "1" for the identity.
  std::string to_string() const;
};

/// Exact element of the Laurent-extended Weyl algebra in three degrees of
/// freedom, with coefficients in Q(i)[c1..c4]. Always stored normal-ordered, so
/// operator equality is map equality.
class OperatorExpr {
 public:
  using TermMap = std::map<WeylMonomial, Coefficient>;

  OperatorExpr() = default;
  OperatorExpr(Coefficient scalar);
  OperatorExpr(long v) : OperatorExpr(Coefficient(v)) {}
  OperatorExpr(int v) : OperatorExpr(Coefficient(v)) {}
  OperatorExpr(const WeylMonomial& m, Coefficient c);

  /// Coordinate x_k, k in 1..3.
  static OperatorExpr x(int k, int power = 1);
  /// Momentum p_k = -i d/dx_k, k in 1..3.
  static OperatorExpr p(int k, int power = 1);
  /// Parameter c_k as a scalar operator, k in 1..4.
  static OperatorExpr c(int k);
  static OperatorExpr i() { return OperatorExpr(Coefficient::imaginary_unit()); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const WeylMonomial& m, const Coefficient& c);

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const Coefficient& s, const OperatorExpr& a);
  OperatorExpr operator-() const;

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  /// Deterministic, parseable text form in ascending monomial order, e.g.
  /// "(4*c1)*x1^2 + (1)*p1^2". The zero operator prints as "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// p^m x^n for one coordinate pair, normal-ordered:
/// sum_k C(m,k) (-i)^k n(n-1)...(n-k+1) x^(n-k) p^(m-k).
OperatorExpr normal_order_word(int m, int n, int pair);

/// Scalar factors C(m,k) (-i)^k n^(k) for k = 0..m; zero entries included.
std::vector<GaussianRational> normal_order_factors(int m, int n);

OperatorExpr add(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr mul(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr power(const OperatorExpr& a, int n);

/// Conjugate coefficients, reverse words, renormal-order.
OperatorExpr formal_adjoint(const OperatorExpr& a);

/// Evaluate every coefficient at (c1, c2, c3, c4) = values.
OperatorExpr substitute_params(const OperatorExpr& a, const std::array<Rational, 4>& values);

/// Largest total momentum power. Throws std::invalid_argument on the zero operator.
int momentum_degree(const OperatorExpr& a);

/// Largest parameter degree over all coefficients (0 for the zero operator).
int param_degree(const OperatorExpr& a);

}  // namespace superalg
