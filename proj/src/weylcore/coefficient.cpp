#include "superalg/weylcore/coefficient.h"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace superalg {

namespace {

int initial_cap() {
  if (const char* env = std::getenv("SUPERALG_MAX_PARAM_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 60) return static_cast<int>(v);
  }
  return 6;
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{initial_cap()};
  return cap;
}

}  // namespace

int max_param_degree() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_param_degree(int cap) {
  if (cap < 0) throw std::invalid_argument("parameter-degree cap must be nonnegative");
  cap_storage().store(cap, std::memory_order_relaxed);
}

ParamMonomial ParamMonomial::param(int index) {
  if (index < 1 || index > 4) throw std::out_of_range("parameter index must be 1..4");
  ParamMonomial m;
  m.exponents[index - 1] = 1;
  return m;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& other) const {
  ParamMonomial out;
  for (int k = 0; k < 4; ++k) out.exponents[k] = static_cast<std::uint8_t>(exponents[k] + other.exponents[k]);
  if (out.degree() > max_param_degree()) {
    std::ostringstream msg;
    msg << "parameter degree " << out.degree() << " exceeds cap " << max_param_degree() << " in product "
        << to_string() << " * " << other.to_string();
    throw DegreeLimitError(msg.str());
  }
  return out;
}

std::string ParamMonomial::to_string() const {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (exponents[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "c" + std::to_string(k + 1);
    if (exponents[k] > 1) out += "^" + std::to_string(exponents[k]);
  }
  return out.empty() ? "1" : out;
}

Coefficient::Coefficient(GaussianRational constant) {
  if (!constant.is_zero()) terms_.emplace(ParamMonomial::one(), std::move(constant));
}

Coefficient::Coefficient(const ParamMonomial& m, GaussianRational value) {
  if (!value.is_zero()) terms_.emplace(m, std::move(value));
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamMonomial::one());
}

GaussianRational Coefficient::constant_term() const {
  auto it = terms_.find(ParamMonomial::one());
  return it == terms_.end() ? GaussianRational() : it->second;
}

int Coefficient::degree() const {
  int d = 0;
  for (const auto& [m, v] : terms_) d = std::max(d, m.degree());
  return d;
}

Coefficient Coefficient::conj() const {
  Coefficient out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v.conj());
  return out;
}

GaussianRational Coefficient::evaluate(const std::array<Rational, 4>& values) const {
  GaussianRational total;
  for (const auto& [m, v] : terms_) {
    Rational w = 1;
    for (int k = 0; k < 4; ++k)
      for (int e = 0; e < m.exponents[k]; ++e) w *= values[k];
    total += v * GaussianRational(w);
  }
  return total;
}

void Coefficient::add_term(const ParamMonomial& m, const GaussianRational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [m, v] : o.terms_) add_term(m, v);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [m, v] : o.terms_) add_term(m, -v);
  return *this;
}

Coefficient& Coefficient::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= s;
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ma, va] : a.terms_)
    for (const auto& [mb, vb] : b.terms_) out.add_term(ma * mb, va * vb);
  return out;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, -v);
  return out;
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, v] : terms_) {
    GaussianRational value = v;
    bool negative = false;
    if (value.is_real() && sgn(value.re()) < 0) {
      negative = true;
      value = -value;
    } else if (sgn(value.re()) == 0 && sgn(value.im()) < 0) {
      negative = true;
      value = -value;
    }
    std::string piece;
    bool unit = value == GaussianRational(1);
    if (m == ParamMonomial::one()) {
      piece = value.to_string();
    } else if (unit) {
      piece = m.to_string();
    } else {
      piece = value.to_string() + "*" + m.to_string();
    }
    if (first) {
      out += negative ? "-" + piece : piece;
    } else {
      out += negative ? " - " + piece : " + " + piece;
    }
    first = false;
  }
  return out;
}

}  // namespace superalg
