#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "superalg/numeric/eigensolver.h"
#include "superalg/qalg/numeric.h"

namespace superalg::numeric {

using qalg::ModelParams;
using qalg::ModelParamsExact;
using qalg::ModelParamsNumeric;

/// A: angular separation constant. A1sep: radial/axial separation constant,
/// the radial equation reading -G'' - G'/rho + c1 rho^2 G + A/rho^2 G = -A1sep G.
struct SeparationConstants {
  double A = 0;
  double A1sep = 0;
};

/// Square root of the angular constant, 2n + m3/2 + m4/2 + 1.
template <class T>
T angular_root(const ModelParams<T>& p, int n) {
  if (n < 0) throw std::invalid_argument("angular quantum number must be non-negative");
  return T(2 * n + 1) + (p.m3 + p.m4) / T(2);
}

/// A(n) = (2n + m3/2 + m4/2 + 1)^2.
template <class T>
T angular_constant(const ModelParams<T>& p, int n) {
  const T r = angular_root(p, n);
  return r * r;
}

// Closed-form eigenvalues of the separated one-dimensional problems.

/// -F'' + (4 c1 z^2 + c2 z) F: 2 m1 (2j + 1) - c2^2 / (16 c1).
template <class T>
T axial_eigenvalue(const ModelParams<T>& p, int j) {
  return T(2 * (2 * j + 1)) * p.m1 - p.m2 * p.m2 / (T(16) * p.c1());
}

/// Radial problem with barrier A(n): m1 (4k + 2 + 2 sqrt(A(n))).
template <class T>
T radial_eigenvalue(const ModelParams<T>& p, int k, int n) {
  return p.m1 * (T(4 * k + 2) + T(2) * angular_root(p, n));
}

/// -psi'' + (c1 x^2 + c/x^2) psi on the half-line with m = sqrt(4c + 1):
/// m1 (4k + 2 + m).
template <class T>
T half_line_eigenvalue(const T& m1, const T& m, int k) {
  return m1 * (T(4 * k + 2) + m);
}

template <class T>
T cylindrical_energy(const ModelParams<T>& p, int j, int k, int n) {
  return axial_eigenvalue(p, j) + radial_eigenvalue(p, k, n);
}

template <class T>
T cartesian_energy(const ModelParams<T>& p, int j, int k, int l) {
  return axial_eigenvalue(p, j) + half_line_eigenvalue(p.m1, p.m3, k) + half_line_eigenvalue(p.m1, p.m4, l);
}

// The one-dimensional problems, with domains from make_problem.
NumericProblem axial_problem(const ModelParamsNumeric& p, int k, int gridPoints);
NumericProblem radial_problem(const ModelParamsNumeric& p, double A, int k, int gridPoints);
NumericProblem angular_problem(const ModelParamsNumeric& p, int k, int gridPoints);
/// axis 2 or 3: -psi'' + (c1 x^2 + c_axis / x^2) psi on x > 0.
NumericProblem cartesian_problem(const ModelParamsNumeric& p, int axis, int k, int gridPoints);

enum class SolveMode { Numeric, Analytic };

struct SpectrumOptions {
  int gridPoints = 2000;
  SolveMode mode = SolveMode::Numeric;
  /// States whose energies differ by less than cluster_tol * max(1, |E|)
  /// form one level.
  double cluster_tol = 1e-3;
};

/// One separated product state. quantum is (j, k, n) for cylindrical
/// coordinates and (j, k, l) for Cartesian ones.
struct SeparatedState {
  std::array<int, 3> quantum{};
  double E = 0;
  double error = 0;
  std::optional<SeparationConstants> separation;
};

struct NumericLevel {
  double E = 0;  // mean over the states
  double error = 0;
  int N = 0;
  std::vector<SeparatedState> states;
  std::size_t multiplicity() const { return states.size(); }
};

/// Lowest nmax + 1 levels from E = lambda_z(j) + lambda_rho(k, A(n)). All
/// states below the first state with an index equal to nmax + 1 are included,
/// so multiplicities are complete.
std::vector<NumericLevel> cylindrical_spectrum(const ModelParamsNumeric& params, int nmax,
                                               const SpectrumOptions& options = {});
/// Same with E = lambda_1(j) + lambda_2(k) + lambda_3(l).
std::vector<NumericLevel> cartesian_spectrum(const ModelParamsNumeric& params, int nmax,
                                             const SpectrumOptions& options = {});

/// [{E, N, error, tuples: [[q1,q2,q3],...], multiplicity}, ...]
nlohmann::json levels_to_json(const std::vector<NumericLevel>& levels);

}  // namespace superalg::numeric
