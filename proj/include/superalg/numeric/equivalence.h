#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "superalg/qalg/spectrum.h"

namespace superalg::numeric {

using qalg::ModelParams;
using qalg::ModelParamsExact;
using qalg::QuantumNumbers;

/// Energy from the cylindrical separation in its own labels:
///   E = 2 (2 tau + 1) m1 + 2 (2 (n - a) + m3/2 + m4/2 + 1) m1 - c2^2 / (16 c1)
/// where tau is the axial level and a the confluent-hypergeometric parameter of
/// the radial solution.
template <class T>
T cylindrical_formula_energy(const ModelParams<T>& p, const T& tau, const T& n_minus_a) {
  return T(2) * (T(2) * tau + T(1)) * p.m1 + T(2) * (T(2) * n_minus_a + (p.m3 + p.m4) / T(2) + T(1)) * p.m1 -
         p.m2 * p.m2 / (T(16) * p.c1());
}

/// Energy from the paraboloidal separation:
///   E = 4 (mu + 1) m1 + 2 (2 eta + m3/2 + m4/2 + 1) m1 - c2^2 / (16 c1)
/// with mu the polynomial order of the bi-confluent Heun solution and eta the
/// angular degree.
template <class T>
T paraboloidal_formula_energy(const ModelParams<T>& p, const T& mu, const T& eta) {
  return T(4) * (mu + T(1)) * p.m1 + T(2) * (T(2) * eta + (p.m3 + p.m4) / T(2) + T(1)) * p.m1 -
         p.m2 * p.m2 / (T(16) * p.c1());
}

enum class Identification {
  /// 2 tau = p1 + p2 + 1, 2 (n - a) = n1 + n2; 2 mu = p1 + p2 + 1, 2 eta = n1 + n2.
  Literal,
  /// Labels that are admissible quantum numbers (tau, mu, eta integers and
  /// n - a = n + k + 1/2 from termination at a = -k - 1/2) with the same level
  /// sum N = (p1 + p2 + n1 + n2) / 2.
  Corrected,
};

std::string to_string(Identification id);

/// (tau, n - a) or (mu, eta) assigned to an algebraic tuple.
struct LabelPair {
  Rational first;
  Rational second;
};

LabelPair cylindrical_labels(const QuantumNumbers& q, Identification id);
LabelPair paraboloidal_labels(const QuantumNumbers& q, Identification id);

/// tau integer and n - a a half-odd integer.
bool cylindrical_labels_admissible(const LabelPair& labels);
/// mu and eta non-negative integers.
bool paraboloidal_labels_admissible(const LabelPair& labels);

struct FormulaCheck {
  std::string formula;  // "cylindrical" or "paraboloidal"
  Identification identification = Identification::Literal;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  /// Cases where the identification produces inadmissible labels.
  std::size_t parity_flagged = 0;
  std::vector<std::string> examples;  // first few mismatches
  bool holds() const { return mismatches == 0; }
};

struct EquivalenceReport {
  std::size_t points = 0;
  std::size_t tuples = 0;
  std::vector<FormulaCheck> checks;

  const FormulaCheck& find(const std::string& formula, Identification id) const;
  bool holds(Identification id) const;
  nlohmann::json to_json() const;
};

/// Exact comparison of both separated-coordinate formulas against the
/// algebraic energy, under both identifications. Needs at least 20 points.
EquivalenceReport formula_equivalence(const std::vector<ModelParamsExact>& grid,
                                      const std::vector<QuantumNumbers>& tuples);

/// Deterministic rational points with c1 > 0; the first two are
/// (c1,c2,c3,c4) = (1,0,3/4,3/4) and (1,0,0,0).
std::vector<ModelParamsExact> default_equivalence_grid(std::size_t points = 20, std::uint64_t seed = 2024);
/// The first `count` admissible tuples ordered by p1+p2+n1+n2, then lexicographically.
std::vector<QuantumNumbers> default_equivalence_tuples(std::size_t count = 10);

}  // namespace superalg::numeric
