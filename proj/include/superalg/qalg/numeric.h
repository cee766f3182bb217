#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superalg/weylcore/coefficient.h"

namespace superalg::qalg {

/// Scalar policy for the two arithmetic modes: exact rationals when the
/// parameters allow it, doubles with an absolute tolerance otherwise.
template <class T>
struct Scalar;

template <>
struct Scalar<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x, double = 1.0) { return sgn(x) == 0; }
  static bool positive(const Rational& x) { return sgn(x) > 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from(const Rational& q) { return q; }
  static Rational from_int(long v) { return Rational(v); }
  static Rational abs(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }
  /// Exact square root, or nullopt when x is not the square of a rational.
  static std::optional<Rational> sqrt(const Rational& x);
};

template <>
struct Scalar<double> {
  static constexpr bool exact = false;
  static constexpr double tol = 1e-12;
  static bool is_zero(double x, double scale = 1.0) { return std::abs(x) <= tol * std::max(1.0, scale); }
  static bool positive(double x) { return x > tol; }
  static bool equal(double a, double b) { return is_zero(a - b, std::max(std::abs(a), std::abs(b))); }
  static double to_double(double x) { return x; }
  static double from(const Rational& q) { return q.get_d(); }
  static double from_int(long v) { return static_cast<double>(v); }
  static double abs(double x) { return std::abs(x); }
  static std::optional<double> sqrt(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
  }
};

/// m1 = sqrt(c1), m2 = c2, m3 = sqrt(4 c3 + 1), m4 = sqrt(4 c4 + 1).
template <class T>
struct ModelParams {
  T m1, m2, m3, m4;

  T c1() const { return m1 * m1; }
  T c2() const { return m2; }
  T c3() const { return (m3 * m3 - T(1)) / T(4); }
  T c4() const { return (m4 * m4 - T(1)) / T(4); }
  std::array<T, 4> couplings() const { return {c1(), c2(), c3(), c4()}; }
};

using ModelParamsNumeric = ModelParams<double>;
using ModelParamsExact = ModelParams<Rational>;

/// Throws std::invalid_argument unless c1 > 0, 4 c3 + 1 >= 0, 4 c4 + 1 >= 0.
ModelParamsNumeric params_from_couplings(double c1, double c2, double c3, double c4);
/// Same validation; nullopt when some m_k is irrational.
std::optional<ModelParamsExact> exact_params_from_couplings(const Rational& c1, const Rational& c2, const Rational& c3,
                                                            const Rational& c4);
ModelParamsNumeric to_numeric(const ModelParamsExact& p);

/// Real part of a Q(i)[c1..c4] coefficient at numeric couplings; throws if the
/// value has an imaginary part.
template <class T>
T evaluate_coefficient(const Coefficient& c, const std::array<T, 4>& couplings);

/// Dense polynomial, ascending powers.
template <class T>
using Poly = std::vector<T>;

template <class T>
Poly<T> poly_add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> out(std::max(a.size(), b.size()), T(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <class T>
Poly<T> poly_scale(Poly<T> a, const T& s) {
  for (auto& v : a) v *= s;
  return a;
}

template <class T>
Poly<T> poly_pow(const Poly<T>& a, int n) {
  Poly<T> out{T(1)};
  for (int k = 0; k < n; ++k) out = poly_mul(out, a);
  return out;
}

template <class T>
T poly_eval(const Poly<T>& a, const T& x) {
  T out(0);
  for (std::size_t k = a.size(); k-- > 0;) out = out * x + a[k];
  return out;
}

/// Trailing (numerically) zero coefficients removed.
template <class T>
Poly<T> poly_trim(Poly<T> a) {
  while (!a.empty() && Scalar<T>::is_zero(a.back())) a.pop_back();
  return a;
}

}  // namespace superalg::qalg
