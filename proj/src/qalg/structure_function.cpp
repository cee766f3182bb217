#include "superalg/qalg/structure_function.h"

#include <algorithm>
#include <stdexcept>

namespace superalg::qalg {

template <class T>
bool BracketForm<T>::has_symbolic_e() const {
  return std::any_of(brackets.begin(), brackets.end(), [](const auto& b) { return !Scalar<T>::is_zero(b.e); });
}

template <class T>
T BracketForm<T>::evaluate(const T& v, const T& e) const {
  T out = prefactor;
  for (const auto& b : brackets) out *= b.at(v, e);
  return out;
}

template <class T>
Poly<T> BracketForm<T>::expand(const T& e) const {
  Poly<T> out{prefactor};
  for (const auto& b : brackets) {
    T constant = b.constant + b.e * e;
    out = poly_mul(out, Poly<T>{constant, b.nu});
  }
  return out;
}

template <class T>
BracketForm<T> BracketForm<T>::with_e(const T& e) const {
  BracketForm out = *this;
  for (auto& b : out.brackets) {
    b.constant += b.e * e;
    b.e = T(0);
  }
  return out;
}

template <class T>
StructureFunctionPoly<T> generic_structure_function(const QuadraticAlgebraSpec& spec, const CentralPoly& k,
                                                    Branch branch, const ModelParams<T>& params, const T& E,
                                                    const T& zval) {
  const auto couplings = params.couplings();
  const T alpha = evaluate_coefficient(spec.alpha, couplings);
  const T gamma = evaluate_coefficient(spec.gamma, couplings);
  const T a = evaluate_coefficient(spec.a, couplings);
  const T delta = spec.delta.evaluate(params, E, zval);
  const T eps = spec.epsilon.evaluate(params, E, zval);
  const T zeta = spec.zeta.evaluate(params, E, zval);
  const T d = spec.d.evaluate(params, E, zval);
  const T z = spec.z.evaluate(params, E, zval);
  const T K = k.evaluate(params, E, zval);

  StructureFunctionPoly<T> out;
  // The all-zero algebra with K = 0 has phi = 0 on either branch.
  const std::array<T, 9> all{alpha, gamma, a, delta, eps, zeta, d, z, K};
  if (std::all_of(all.begin(), all.end(), [](const T& v) { return Scalar<T>::is_zero(v); })) {
    out.coefficients = {T(0)};
    out.eigen_a = {T(0)};
    return out;
  }
  if (branch == Branch::GammaZero) {
    if (!Scalar<T>::is_zero(gamma)) throw std::invalid_argument("gamma = 0 branch requested for gamma != 0");
    if (Scalar<T>::is_zero(eps)) throw std::invalid_argument("gamma = 0 branch requires epsilon != 0");
    auto root = Scalar<T>::sqrt(eps);
    if (!root) throw std::domain_error("epsilon has no exact square root at these parameters");
    const T s = *root;
    const T ze = zeta / eps;
    const T ds = delta / s;
    const T c0 = (-K / eps - z / s - ds * ze + ze * ze) / T(4);
    const T c1 = -(T(3) * d - a * s - T(3) * alpha * ds + T(3) * delta * delta / eps - T(6) * z / s +
                   T(6) * alpha * ze - T(6) * ds * ze) /
                 T(12);
    const T c2 = (alpha * alpha + d - a * s - T(3) * alpha * ds + delta * delta / eps + T(2) * alpha * ze) / T(4);
    const T c3 = -(T(3) * alpha * alpha - a * s - T(3) * alpha * ds) / T(6);
    const T c4 = alpha * alpha / T(4);
    out.coefficients = {c0, c1, c2, c3, c4};
    out.eigen_a = {T(0), s};
    return out;
  }

  if (Scalar<T>::is_zero(gamma)) throw std::invalid_argument("gamma != 0 branch requested for gamma = 0");
  const T g2 = gamma * gamma, g3 = g2 * gamma, g4 = g2 * g2, g5 = g4 * gamma, g6 = g4 * g2, g8 = g4 * g4;
  const Poly<T> w_m3{T(-3), T(2)}, w_m1{T(-1), T(2)}, w_p1{T(1), T(2)};
  const Poly<T> m1sq = poly_pow(w_m1, 2), m1q = poly_pow(w_m1, 4), p1sq = poly_pow(w_p1, 2);
  Poly<T> phi;
  phi = poly_add(phi, poly_scale(poly_mul(poly_mul(poly_pow(w_m3, 2), m1q), p1sq),
                                 T(g8 * (T(3) * alpha * alpha + T(4) * a * gamma))));
  phi = poly_add(phi, poly_scale(m1sq, T(T(-3072) * g6 * K)));
  phi = poly_add(phi, poly_scale(poly_mul(poly_mul(m1q, p1sq), w_m3),
                                 T(T(-48) * g6 * (alpha * alpha * eps - alpha * gamma * delta + a * gamma * eps - g2 * d))));
  const T bracket4 = T(3) * alpha * alpha * eps * eps + T(4) * alpha * g2 * zeta - T(6) * alpha * gamma * delta * eps +
                     T(2) * a * gamma * eps * eps + T(2) * g2 * delta * delta - T(4) * g2 * d * eps + T(8) * g3 * z;
  phi = poly_add(phi, poly_scale(poly_mul(m1sq, Poly<T>{T(-1), T(-12), T(12)}), T(T(32) * g4 * bracket4)));
  const T inner5 = alpha * eps * eps + T(4) * g2 * zeta - T(2) * gamma * delta * eps;
  phi = poly_add(phi, Poly<T>{T(T(768) * inner5 * inner5)});
  const T bracket6 = T(3) * alpha * alpha * eps * eps * eps + T(4) * alpha * g4 * zeta +
                     T(12) * alpha * g2 * zeta * eps - T(9) * alpha * gamma * delta * eps * eps +
                     a * gamma * eps * eps * eps + T(2) * g4 * delta * delta - T(12) * g3 * delta * zeta +
                     T(6) * g2 * delta * delta * eps + T(2) * g4 * d * eps - T(3) * g2 * d * eps * eps -
                     T(4) * g5 * z + T(12) * g3 * z * eps;
  phi = poly_add(phi, poly_scale(m1sq, T(T(-256) * g2 * bracket6)));
  out.coefficients = phi;
  const T half = gamma / T(2);
  out.eigen_a = {T(half * (-eps / g2 - T(1) / T(4))), T(0), half};
  return out;
}

template <class T>
BracketForm<T> build_phi1(const ModelParams<T>& p, const T& E) {
  const T m1 = p.m1, m2 = p.m2, m4 = p.m4;
  const T m1cube = m1 * m1 * m1;
  BracketForm<T> f;
  f.prefactor = T(1) / (T(1024) * m1cube * m1 * m1);
  f.brackets.push_back({T(-E - m1 * (T(2) + m4)), T(T(4) * m1), T(1)});
  f.brackets.push_back({T(-E + m1 * (m4 - T(2))), T(T(4) * m1), T(1)});
  f.brackets.push_back({T(m2 * m2 - T(32) * m1cube), T(T(64) * m1cube), T(0)});
  return f;
}

template <class T>
BracketForm<T> build_phi2(const ModelParams<T>& p, const T& E) {
  const T m1 = p.m1, m3 = p.m3, m4 = p.m4;
  const T m1sq = m1 * m1;
  BracketForm<T> f;
  f.prefactor = T(1) / (T(256) * m1sq * m1sq);
  f.brackets.push_back({T(T(-2) - m3), T(4), T(0)});
  f.brackets.push_back({T(T(-2) + m3), T(4), T(0)});
  f.brackets.push_back({T(-m1 * E - m1sq * m4 - T(2) * m1sq), T(T(4) * m1sq), m1});
  f.brackets.push_back({T(-m1 * E + m1sq * m4 - T(2) * m1sq), T(T(4) * m1sq), m1});
  return f;
}

template <class T>
SignFamily<T> phi1_family(const ModelParams<T>& p, const T& E, int n) {
  return [p, E, n](const std::array<int, 3>& s) -> T {
    return T(T(4 * s[1]) * p.m1 * T(n + 1) + E + T(s[2]) * p.m1 * p.m4 + p.m2 * p.m2 / (T(16) * p.m1 * p.m1));
  };
}

template <class T>
SignFamily<T> phi2_family(const ModelParams<T>& p, const T& E, int n) {
  return [p, E, n](const std::array<int, 3>& s) -> T {
    return T(T(4 * s[0]) * p.m1 * T(n + 1) + E + T(s[1]) * p.m1 * p.m3 + T(s[2]) * p.m1 * p.m4);
  };
}

namespace {

template <class T>
struct PairSolution {
  T u;
  std::optional<T> e;
};

template <class T>
std::optional<PairSolution<T>> solve_pair(const LinearBracket<T>& bi, const LinearBracket<T>& bj, int p, bool symbolic) {
  const T shift(p + 1);
  const T r1 = -bi.constant;
  const T r2 = -bj.constant - bj.nu * shift;
  if (symbolic) {
    const T det = bi.nu * bj.e - bi.e * bj.nu;
    const double scale = std::max(Scalar<T>::to_double(Scalar<T>::abs(bi.nu * bj.e)),
                                  Scalar<T>::to_double(Scalar<T>::abs(bi.e * bj.nu)));
    if (Scalar<T>::is_zero(det, scale)) return std::nullopt;  // e undetermined or no solution
    return PairSolution<T>{T((r1 * bj.e - bi.e * r2) / det), T((bi.nu * r2 - r1 * bj.nu) / det)};
  }
  if (Scalar<T>::is_zero(bi.nu)) return std::nullopt;
  T u = r1 / bi.nu;
  if (!Scalar<T>::equal(T(bj.nu * u), r2)) return std::nullopt;
  return PairSolution<T>{u, std::nullopt};
}

}  // namespace

template <class T>
std::vector<UnirrepSolution<T>> solve_unirrep_constraints(const BracketForm<T>& phi, int p, const SignFamily<T>& family) {
  if (p < 0) throw std::invalid_argument("representation size p must be non-negative");
  const bool symbolic = phi.has_symbolic_e();
  std::vector<UnirrepSolution<T>> out;
  for (std::size_t i = 0; i < phi.brackets.size(); ++i)
    for (std::size_t j = 0; j < phi.brackets.size(); ++j) {
      auto sol = solve_pair(phi.brackets[i], phi.brackets[j], p, symbolic);
      if (!sol) continue;
      const T e = sol->e.value_or(T(0));
      bool positive = true;
      for (int k = 1; k <= p && positive; ++k) positive = Scalar<T>::positive(phi.evaluate(T(sol->u + T(k)), e));
      if (!positive) continue;

      UnirrepSolution<T> s;
      s.u = sol->u;
      s.central_eigen = sol->e;
      s.dimension = p + 1;
      s.start_bracket = i;
      s.end_bracket = j;
      s.positivity_verified = true;
      s.bounded_below = true;
      if (symbolic) {
        auto next = solve_pair(phi.brackets[i], phi.brackets[j], p + 1, symbolic);
        s.bounded_below = next && next->e && !Scalar<T>::positive(T(*next->e - e));
      }

      auto same = std::find_if(out.begin(), out.end(), [&](const UnirrepSolution<T>& o) {
        if (!Scalar<T>::equal(o.u, s.u)) return false;
        if (!o.central_eigen || !s.central_eigen) return !o.central_eigen && !s.central_eigen;
        return Scalar<T>::equal(*o.central_eigen, *s.central_eigen);
      });
      if (same != out.end()) continue;
      if (family && s.central_eigen) {
        for (int a : {1, -1})
          for (int b : {1, -1})
            for (int c : {1, -1})
              if (Scalar<T>::equal(family({a, b, c}), *s.central_eigen)) s.sign_choices.push_back({a, b, c});
      }
      out.push_back(std::move(s));
    }
  return out;
}

template <class T>
ProportionalityAudit proportionality_audit(const StructureFunctionPoly<T>& generic, const BracketForm<T>& phi, const T& e) {
  ProportionalityAudit audit;
  const Poly<T> g = poly_trim(generic.coefficients);
  const Poly<T> f = poly_trim(phi.expand(e));
  for (const auto& v : g) audit.generic.push_back(Scalar<T>::to_double(v));
  for (const auto& v : f) audit.factored.push_back(Scalar<T>::to_double(v));
  if (g.empty() || f.empty() || g.size() != f.size()) {
    audit.proportional = g.empty() && f.empty();
    return audit;
  }
  const T ratio = g.back() / f.back();
  audit.ratio = Scalar<T>::to_double(ratio);
  audit.proportional = true;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const T diff = g[k] - ratio * f[k];
    audit.max_deviation = std::max(audit.max_deviation, Scalar<T>::to_double(Scalar<T>::abs(diff)));
    const double scale = std::max(Scalar<T>::to_double(Scalar<T>::abs(g[k])), 1.0);
    if (!Scalar<T>::is_zero(diff, scale)) audit.proportional = false;
  }
  return audit;
}

#define SUPERALG_INSTANTIATE(T)                                                                                     \
  template struct BracketForm<T>;                                                                                   \
  template StructureFunctionPoly<T> generic_structure_function<T>(const QuadraticAlgebraSpec&, const CentralPoly&, \
                                                                  Branch, const ModelParams<T>&, const T&, const T&); \
  template BracketForm<T> build_phi1<T>(const ModelParams<T>&, const T&);                                          \
  template BracketForm<T> build_phi2<T>(const ModelParams<T>&, const T&);                                          \
  template SignFamily<T> phi1_family<T>(const ModelParams<T>&, const T&, int);                                     \
  template SignFamily<T> phi2_family<T>(const ModelParams<T>&, const T&, int);                                     \
  template std::vector<UnirrepSolution<T>> solve_unirrep_constraints<T>(const BracketForm<T>&, int,               \
                                                                        const SignFamily<T>&);                     \
  template ProportionalityAudit proportionality_audit<T>(const StructureFunctionPoly<T>&, const BracketForm<T>&,  \
                                                         const T&);

SUPERALG_INSTANTIATE(Rational)
SUPERALG_INSTANTIATE(double)

#undef SUPERALG_INSTANTIATE

}  // namespace superalg::qalg
