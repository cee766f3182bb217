#include "superalg/weylcore/operator_expr.h"

#include <stdexcept>
#include <utility>

namespace superalg {

std::string WeylMonomial::to_string() const {
  std::string out;
  auto append = [&out](const char* name, int k, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name + std::to_string(k + 1);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (int k = 0; k < 3; ++k) append("x", k, x[k]);
  for (int k = 0; k < 3; ++k) append("p", k, p[k]);
  return out.empty() ? "1" : out;
}

OperatorExpr::OperatorExpr(Coefficient scalar) {
  if (!scalar.is_zero()) terms_.emplace(WeylMonomial::identity(), std::move(scalar));
}

OperatorExpr::OperatorExpr(const WeylMonomial& m, Coefficient c) {
  for (int k = 0; k < 3; ++k)
    if (m.p[k] < 0) throw std::invalid_argument("negative momentum exponent");
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

OperatorExpr OperatorExpr::x(int k, int power) {
  if (k < 1 || k > 3) throw std::out_of_range("coordinate index must be 1..3");
  WeylMonomial m;
  m.x[k - 1] = power;
  return {m, Coefficient(1)};
}

OperatorExpr OperatorExpr::p(int k, int power) {
  if (k < 1 || k > 3) throw std::out_of_range("momentum index must be 1..3");
  if (power < 0) throw std::invalid_argument("negative momentum exponent");
  WeylMonomial m;
  m.p[k - 1] = power;
  return {m, Coefficient(1)};
}

OperatorExpr OperatorExpr::c(int k) { return OperatorExpr(Coefficient::param(k)); }

void OperatorExpr::add_term(const WeylMonomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::vector<GaussianRational> normal_order_factors(int m, int n) {
  if (m < 0) throw std::invalid_argument("momentum power must be nonnegative");
  std::vector<GaussianRational> out;
  out.reserve(m + 1);
  mpz_class binom = 1;
  mpz_class falling = 1;
  GaussianRational phase(1);
  const GaussianRational minus_i(Rational(0), Rational(-1));
  for (int k = 0; k <= m; ++k) {
    if (k > 0) {
      binom = binom * (m - k + 1) / k;
      falling *= (n - k + 1);
      phase *= minus_i;
    }
    out.push_back(phase * GaussianRational(Rational(binom * falling)));
  }
  return out;
}

OperatorExpr normal_order_word(int m, int n, int pair) {
  if (pair < 1 || pair > 3) throw std::out_of_range("pair must be 1..3");
  auto factors = normal_order_factors(m, n);
  OperatorExpr out;
  for (int k = 0; k <= m; ++k) {
    if (factors[k].is_zero()) continue;
    WeylMonomial w;
    w.x[pair - 1] = n - k;
    w.p[pair - 1] = m - k;
    out.add_term(w, Coefficient(factors[k]));
  }
  return out;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  if (a.is_zero() || b.is_zero()) return out;
  std::map<std::pair<int, int>, std::vector<GaussianRational>> cache;
  auto factors = [&cache](int m, int n) -> const std::vector<GaussianRational>& {
    auto key = std::make_pair(m, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, normal_order_factors(m, n)).first;
    return it->second;
  };

  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Coefficient cab = ca * cb;
      if (cab.is_zero()) continue;
      // Move p^(ma.p) past x^(mb.x) one coordinate pair at a time.
      const auto& f0 = factors(ma.p[0], mb.x[0]);
      const auto& f1 = factors(ma.p[1], mb.x[1]);
      const auto& f2 = factors(ma.p[2], mb.x[2]);
      for (int k0 = 0; k0 <= ma.p[0]; ++k0) {
        if (f0[k0].is_zero()) continue;
        for (int k1 = 0; k1 <= ma.p[1]; ++k1) {
          if (f1[k1].is_zero()) continue;
          GaussianRational s01 = f0[k0] * f1[k1];
          for (int k2 = 0; k2 <= ma.p[2]; ++k2) {
            if (f2[k2].is_zero()) continue;
            WeylMonomial w;
            const std::array<int, 3> ks{k0, k1, k2};
            for (int j = 0; j < 3; ++j) {
              w.x[j] = ma.x[j] + mb.x[j] - ks[j];
              w.p[j] = ma.p[j] - ks[j] + mb.p[j];
            }
            out.add_term(w, cab * (s01 * f2[k2]));
          }
        }
      }
    }
  }
  return out;
}

OperatorExpr operator*(const Coefficient& s, const OperatorExpr& a) {
  OperatorExpr out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!m.is_identity()) out += "*" + m.to_string();
  }
  return out;
}

OperatorExpr add(const OperatorExpr& a, const OperatorExpr& b) { return a + b; }

OperatorExpr mul(const OperatorExpr& a, const OperatorExpr& b) { return a * b; }

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b + b * a; }

OperatorExpr power(const OperatorExpr& a, int n) {
  if (n < 0) throw std::invalid_argument("negative operator power");
  OperatorExpr out(1);
  for (int k = 0; k < n; ++k) out = out * a;
  return out;
}

OperatorExpr formal_adjoint(const OperatorExpr& a) {
  OperatorExpr out;
  for (const auto& [m, c] : a.terms()) {
    WeylMonomial pm;
    pm.p = m.p;
    WeylMonomial xm;
    xm.x = m.x;
    out += OperatorExpr(pm, c.conj()) * OperatorExpr(xm, Coefficient(1));
  }
  return out;
}

OperatorExpr substitute_params(const OperatorExpr& a, const std::array<Rational, 4>& values) {
  OperatorExpr out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, Coefficient(c.evaluate(values)));
  return out;
}

int momentum_degree(const OperatorExpr& a) {
  if (a.is_zero()) throw std::invalid_argument("momentum_degree of the zero operator");
  int d = 0;
  for (const auto& [m, c] : a.terms()) d = std::max(d, m.momentum_degree());
  return d;
}

int param_degree(const OperatorExpr& a) {
  int d = 0;
  for (const auto& [m, c] : a.terms()) d = std::max(d, c.degree());
  return d;
}

}  // namespace superalg
