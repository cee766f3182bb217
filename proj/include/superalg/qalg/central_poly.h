#pragma once

#include <map>
#include <string>
#include <utility>

#include "superalg/model/generators.h"
#include "superalg/qalg/numeric.h"

namespace superalg::qalg {

/// Polynomial in the two central symbols of a subalgebra: H and Z, where Z is
/// the generator of the other subalgebra (A2 for the A1/B1 pair, A1 for the
/// A2/B2 pair). Weights are parameter polynomials.
class CentralPoly {
 public:
  using Key = std::pair<int, int>;  // (power of H, power of Z)

  CentralPoly() = default;
  CentralPoly(Coefficient constant);
  CentralPoly(int v) : CentralPoly(Coefficient(v)) {}

  static CentralPoly H();
  static CentralPoly Z();
  /// Parses text over H, Z and c1..c4, e.g. "8*H^2 - 16*H*Z - 8*c1*(4*c4-3)".
  static CentralPoly parse(const std::string& text);

  const std::map<Key, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  CentralPoly& operator+=(const CentralPoly& o);
  CentralPoly& operator-=(const CentralPoly& o);
  friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
  friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }
  friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);
  CentralPoly operator-() const;
  friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

  /// Value at H = h, Z = z and numeric couplings.
  template <class T>
  T evaluate(const ModelParams<T>& params, const T& h, const T& z) const;

  /// H^i Z^j with Z the named generator.
  OperatorExpr to_operator(const model::ModelOperators& ops, const std::string& z_name) const;

  /// Parseable form with Z spelled as z_name, e.g. "(8)*H^2 + (-16)*H*A2".
  std::string to_string(const std::string& z_name = "Z") const;

 private:
  void add_term(const Key& key, const Coefficient& c);
  std::map<Key, Coefficient> terms_;
};

}  // namespace superalg::qalg
