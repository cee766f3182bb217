#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "superalg/qalg/numeric.h"

namespace superalg::qalg {

/// (p1, p2, n1, n2) with p1 - p2 = n1 - n2, 0 <= n1 <= p1, 0 <= n2 <= p2.
using QuantumNumbers = std::array<int, 4>;

struct SpectrumLevel {
  double E = 0;
  int N = 0;  // (p1 + p2 + n1 + n2) / 2
  std::vector<QuantumNumbers> tuples;
  std::size_t multiplicity() const { return tuples.size(); }
};

/// E = 2(p1+p2+2) m1 + 2(n1+n2+1) m1 + m1 m3 + m1 m4 - m2^2/(16 m1^2)
template <class T>
T algebraic_energy(const ModelParams<T>& params, const QuantumNumbers& q);

/// All admissible tuples with p1+p2+n1+n2 <= 2 nmax, grouped by energy in
/// ascending order. Multiplicity is the raw tuple count.
std::vector<SpectrumLevel> algebraic_spectrum(const ModelParamsNumeric& params, int nmax);

/// [{E, tuples: [[p1,p2,n1,n2],...], multiplicity}, ...]
nlohmann::json spectrum_to_json(const std::vector<SpectrumLevel>& levels);
/// Header "N,E,multiplicity,tuples"; tuples as "p1 p2 n1 n2" joined by ';'.
std::string spectrum_to_csv(const std::vector<SpectrumLevel>& levels);

/// Closed-form eigenvalues of A1 and A2 from the realizations.
template <class T>
struct EigenOperatorValues {
  ModelParams<T> params;

  /// 2 m1 (2 n1 + 1) - m2^2/(16 m1^2)
  T e_a1(int n1) const;
  /// 2 m1 (2 n1 + 1) + E + s1 m1 m4 - e(A2)
  T e_a1_alt(int n1, const T& E, const T& e_a2, int s1) const;
  /// 2 m1 (2 n2 + 1) + s1 m1 m3
  T e_a2(int n2, int s1) const;
  /// 2 m1 (2 n2 + 1) + E + s1 m1 m4 - e(A1)
  T e_a2_alt(int n2, const T& E, const T& e_a1, int s1) const;
};

template <class T>
EigenOperatorValues<T> eigen_operator_values(const ModelParams<T>& params) {
  return {params};
}

/// Energy as an affine function of (p1, p2, n1, n2).
template <class T>
struct AffineEnergy {
  T constant;
  std::array<T, 4> slope;
  bool operator==(const AffineEnergy&) const = default;
};

/// E = 4(p2+1) m1 + 2(2 n1+1) m1 + m1 m3 + m1 m4 - m2^2/(16 m1^2)
template <class T>
AffineEnergy<T> energy_from_a1(const ModelParams<T>& params);
/// E = 4(p1+1) m1 + 2(2 n2+1) m1 + m1 m3 + m1 m4 - m2^2/(16 m1^2)
template <class T>
AffineEnergy<T> energy_from_a2(const ModelParams<T>& params);
template <class T>
AffineEnergy<T> energy_combined(const ModelParams<T>& params);

/// The combined energy is the mean of the two partial expressions, and their
/// difference is 4 m1 ((n1 - n2) - (p1 - p2)), so it vanishes exactly on the
/// constraint p1 - p2 = n1 - n2.
template <class T>
bool mean_value_identity_holds(const ModelParams<T>& params);

}  // namespace superalg::qalg
