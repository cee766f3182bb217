#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "superalg/weylcore/gaussian_rational.h"

namespace superalg {

/// Thrown when a product would exceed the configured parameter-degree cap.
class DegreeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide cap on total degree in c1..c4. Defaults to 6, or the value of
/// SUPERALG_MAX_PARAM_DEGREE when set.
int max_param_degree();
void set_max_param_degree(int cap);

/// c1^a c2^b c3^c c4^d.
struct ParamMonomial {
  std::array<std::uint8_t, 4> exponents{0, 0, 0, 0};

  static ParamMonomial one() { return {}; }
  static ParamMonomial param(int index);  // index in 1..4

  int degree() const { return exponents[0] + exponents[1] + exponents[2] + exponents[3]; }

  /// Throws DegreeLimitError when the product breaks the cap.
  ParamMonomial operator*(const ParamMonomial& other) const;

  auto operator<=>(const ParamMonomial&) const = default;
  bool operator==(const ParamMonomial&) const = default;

  std::string to_string() const;
};

/// Sparse polynomial in c1..c4 over Q(i). Zero terms are never stored.
class Coefficient {
 public:
  using TermMap = std::map<ParamMonomial, GaussianRational>;

  Coefficient() = default;
  Coefficient(GaussianRational constant);
  Coefficient(long v) : Coefficient(GaussianRational(v)) {}
  Coefficient(int v) : Coefficient(GaussianRational(v)) {}
  Coefficient(const ParamMonomial& m, GaussianRational value);

  static Coefficient param(int index) { return {ParamMonomial::param(index), GaussianRational(1)}; }
  static Coefficient imaginary_unit() { return {GaussianRational::imaginary_unit()}; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_term() const;
  int degree() const;

  Coefficient conj() const;
  GaussianRational evaluate(const std::array<Rational, 4>& values) const;

  /// Accumulate value * m, dropping the term if it cancels.
  void add_term(const ParamMonomial& m, const GaussianRational& value);

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const GaussianRational& s);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(Coefficient a, const GaussianRational& s) { return a *= s; }
  Coefficient operator-() const;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  /// Parseable, deterministic, e.g. "4*c1 + 3/2*c2^2*c3 - i".
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace superalg
