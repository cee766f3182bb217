#include "superalg/qalg/spectrum.h"

#include <map>
#include <sstream>

namespace superalg::qalg {

template <class T>
T algebraic_energy(const ModelParams<T>& p, const QuantumNumbers& q) {
  const auto [p1, p2, n1, n2] = q;
  return T(T(2 * (p1 + p2 + 2)) * p.m1 + T(2 * (n1 + n2 + 1)) * p.m1 + p.m1 * p.m3 + p.m1 * p.m4 -
           p.m2 * p.m2 / (T(16) * p.m1 * p.m1));
}

std::vector<SpectrumLevel> algebraic_spectrum(const ModelParamsNumeric& params, int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
  // p1 - p2 = n1 - n2 forces p1 + p2 + n1 + n2 = 2 (p1 + n2); E depends on the
  // tuple only through that sum, so levels are indexed by N = p1 + n2.
  std::map<int, SpectrumLevel> levels;
  for (int p1 = 0; p1 <= 2 * nmax; ++p1)
    for (int p2 = 0; p1 + p2 <= 2 * nmax; ++p2)
      for (int n1 = 0; n1 <= p1; ++n1) {
        const int n2 = n1 - p1 + p2;
        if (n2 < 0 || n2 > p2 || p1 + p2 + n1 + n2 > 2 * nmax) continue;
        const QuantumNumbers q{p1, p2, n1, n2};
        const int N = (p1 + p2 + n1 + n2) / 2;
        auto& level = levels[N];
        level.N = N;
        level.E = algebraic_energy(params, q);
        level.tuples.push_back(q);
      }
  std::vector<SpectrumLevel> out;
  for (auto& [n, level] : levels) out.push_back(std::move(level));
  return out;
}

nlohmann::json spectrum_to_json(const std::vector<SpectrumLevel>& levels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& level : levels) {
    nlohmann::json tuples = nlohmann::json::array();
    for (const auto& q : level.tuples) tuples.push_back(q);
    out.push_back({{"E", level.E}, {"N", level.N}, {"tuples", tuples}, {"multiplicity", level.multiplicity()}});
  }
  return out;
}

std::string spectrum_to_csv(const std::vector<SpectrumLevel>& levels) {
  std::ostringstream os;
  os.precision(12);
  os << "N,E,multiplicity,tuples\n";
  for (const auto& level : levels) {
    os << level.N << "," << level.E << "," << level.multiplicity() << ",";
    for (std::size_t k = 0; k < level.tuples.size(); ++k) {
      const auto& q = level.tuples[k];
      os << (k ? ";" : "") << q[0] << " " << q[1] << " " << q[2] << " " << q[3];
    }
    os << "\n";
  }
  return os.str();
}

template <class T>
T EigenOperatorValues<T>::e_a1(int n1) const {
  const auto& p = params;
  return T(T(2) * p.m1 * T(2 * n1 + 1) - p.m2 * p.m2 / (T(16) * p.m1 * p.m1));
}

template <class T>
T EigenOperatorValues<T>::e_a1_alt(int n1, const T& E, const T& e_a2, int s1) const {
  const auto& p = params;
  return T(T(2) * p.m1 * T(2 * n1 + 1) + E + T(s1) * p.m1 * p.m4 - e_a2);
}

template <class T>
T EigenOperatorValues<T>::e_a2(int n2, int s1) const {
  const auto& p = params;
  return T(T(2) * p.m1 * T(2 * n2 + 1) + T(s1) * p.m1 * p.m3);
}

template <class T>
T EigenOperatorValues<T>::e_a2_alt(int n2, const T& E, const T& e_a1, int s1) const {
  const auto& p = params;
  return T(T(2) * p.m1 * T(2 * n2 + 1) + E + T(s1) * p.m1 * p.m4 - e_a1);
}

namespace {

template <class T>
T shared_constant(const ModelParams<T>& p) {
  return T(p.m1 * p.m3 + p.m1 * p.m4 - p.m2 * p.m2 / (T(16) * p.m1 * p.m1));
}

}  // namespace

template <class T>
AffineEnergy<T> energy_from_a1(const ModelParams<T>& p) {
  // 4(p2+1) m1 + 2(2 n1 + 1) m1 + ...
  return {T(T(6) * p.m1 + shared_constant(p)), {T(0), T(T(4) * p.m1), T(T(4) * p.m1), T(0)}};
}

template <class T>
AffineEnergy<T> energy_from_a2(const ModelParams<T>& p) {
  return {T(T(6) * p.m1 + shared_constant(p)), {T(T(4) * p.m1), T(0), T(0), T(T(4) * p.m1)}};
}

template <class T>
AffineEnergy<T> energy_combined(const ModelParams<T>& p) {
  // 2(p1+p2+2) m1 + 2(n1+n2+1) m1 + ...
  const T two_m1 = T(2) * p.m1;
  return {T(T(6) * p.m1 + shared_constant(p)), {two_m1, two_m1, two_m1, two_m1}};
}

template <class T>
bool mean_value_identity_holds(const ModelParams<T>& p) {
  const auto e1 = energy_from_a1(p), e2 = energy_from_a2(p), all = energy_combined(p);
  AffineEnergy<T> mean{T((e1.constant + e2.constant) / T(2)), {}};
  for (int k = 0; k < 4; ++k) mean.slope[k] = T((e1.slope[k] + e2.slope[k]) / T(2));
  auto same = [](const AffineEnergy<T>& a, const AffineEnergy<T>& b) {
    if (!Scalar<T>::equal(a.constant, b.constant)) return false;
    for (int k = 0; k < 4; ++k)
      if (!Scalar<T>::equal(a.slope[k], b.slope[k])) return false;
    return true;
  };
  // e1 - e2 must be 4 m1 (-p1 + p2 + n1 - n2).
  const T f = T(4) * p.m1;
  AffineEnergy<T> diff{T(e1.constant - e2.constant), {}};
  for (int k = 0; k < 4; ++k) diff.slope[k] = T(e1.slope[k] - e2.slope[k]);
  const AffineEnergy<T> expected{T(0), {T(-f), f, f, T(-f)}};
  return same(mean, all) && same(diff, expected);
}

#define SUPERALG_INSTANTIATE(T)                                                     \
  template T algebraic_energy<T>(const ModelParams<T>&, const QuantumNumbers&);     \
  template struct EigenOperatorValues<T>;                                           \
  template AffineEnergy<T> energy_from_a1<T>(const ModelParams<T>&);                \
  template AffineEnergy<T> energy_from_a2<T>(const ModelParams<T>&);                \
  template AffineEnergy<T> energy_combined<T>(const ModelParams<T>&);               \
  template bool mean_value_identity_holds<T>(const ModelParams<T>&);

SUPERALG_INSTANTIATE(Rational)
SUPERALG_INSTANTIATE(double)

#undef SUPERALG_INSTANTIATE

}  // namespace superalg::qalg
