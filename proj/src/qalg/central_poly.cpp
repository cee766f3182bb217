#include "superalg/qalg/central_poly.h"

#include <stdexcept>

namespace superalg::qalg {

CentralPoly::CentralPoly(Coefficient constant) {
  if (!constant.is_zero()) terms_.emplace(Key{0, 0}, std::move(constant));
}

CentralPoly CentralPoly::H() {
  CentralPoly out;
  out.terms_.emplace(Key{1, 0}, Coefficient(1));
  return out;
}

CentralPoly CentralPoly::Z() {
  CentralPoly out;
  out.terms_.emplace(Key{0, 1}, Coefficient(1));
  return out;
}

CentralPoly CentralPoly::parse(const std::string& text) {
  // H and Z stand in for the commuting coordinates x1 and x2.
  cli::Environment env{{"H", OperatorExpr::x(1)}, {"Z", OperatorExpr::x(2)}};
  OperatorExpr e = cli::parse_and_lower(text, &env);
  CentralPoly out;
  for (const auto& [word, coef] : e.terms()) {
    if (word.x[0] < 0 || word.x[1] < 0 || word.x[2] != 0 || word.momentum_degree() != 0)
      throw std::invalid_argument("not a polynomial in H and Z: " + text);
    out.add_term({word.x[0], word.x[1]}, coef);
  }
  return out;
}

int CentralPoly::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

void CentralPoly::add_term(const Key& key, const Coefficient& c) {
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
  CentralPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

CentralPoly CentralPoly::operator-() const {
  CentralPoly out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

template <class T>
T CentralPoly::evaluate(const ModelParams<T>& params, const T& h, const T& z) const {
  const auto couplings = params.couplings();
  T out(0);
  for (const auto& [key, c] : terms_) {
    T term = evaluate_coefficient(c, couplings);
    for (int k = 0; k < key.first; ++k) term *= h;
    for (int k = 0; k < key.second; ++k) term *= z;
    out += term;
  }
  return out;
}

template Rational CentralPoly::evaluate<Rational>(const ModelParams<Rational>&, const Rational&, const Rational&) const;
template double CentralPoly::evaluate<double>(const ModelParams<double>&, const double&, const double&) const;

OperatorExpr CentralPoly::to_operator(const model::ModelOperators& ops, const std::string& z_name) const {
  OperatorExpr out;
  for (const auto& [key, c] : terms_)
    out += c * (power(ops.at("H"), key.first) * power(ops.at(z_name), key.second));
  return out;
}

std::string CentralPoly::to_string(const std::string& z_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    auto factor = [&out](const std::string& name, int pow) {
      if (pow == 0) return;
      out += "*" + name;
      if (pow > 1) out += "^" + std::to_string(pow);
    };
    factor("H", key.first);
    factor(z_name, key.second);
  }
  return out;
}

}  // namespace superalg::qalg
