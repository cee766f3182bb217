#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace superalg::numeric {

/// V(x) = 4 c1 x^2 + c2 x on the whole line.
struct ShiftedOscillator {
  double c1 = 1;
  double c2 = 0;
};

/// V(x) = omega2 x^2 + alpha / x^2 on the half-line x > 0.
struct SingularOscillator {
  double omega2 = 1;
  double alpha = 0;
};

/// V(t) = c3 / sin^2 t + c4 / cos^2 t on 0 < t < pi/2.
struct PoeschlTeller {
  double c3 = 0;
  double c4 = 0;
};

using Potential = std::variant<ShiftedOscillator, SingularOscillator, PoeschlTeller>;

double evaluate_potential(const Potential& v, double x);
std::string potential_name(const Potential& v);

enum class Boundary { Dirichlet };

/// -psi'' + V psi = lambda psi on [lo, hi] with psi(lo) = psi(hi) = 0.
/// gridPoints counts subintervals, so h = (hi - lo) / gridPoints.
struct NumericProblem {
  Potential potential;
  double lo = 0;
  double hi = 1;
  int gridPoints = 1000;
  Boundary boundary = Boundary::Dirichlet;
};

struct EigResult {
  std::vector<double> eigenvalues;     // ascending, lowest k
  std::vector<double> errorEstimates;  // |lambda_2N - lambda_N| / 3
  int gridUsed = 0;
};

/// Throws std::invalid_argument if the domain reaches a singular point of the
/// potential, gridPoints < 64, or the domain is empty.
void validate(const NumericProblem& problem);

/// Lowest k eigenvalues of the 3-point discretization on `gridPoints`
/// subintervals, by Sturm-sequence bisection to 1e-10.
std::vector<double> fd_eigenvalues(const NumericProblem& problem, int gridPoints, int k);

/// Richardson-extrapolated lowest k eigenvalues from grids N and 2N.
/// Requires 1 <= k <= gridPoints / 4.
EigResult fd_eigensolve(const NumericProblem& problem, int k);

/// Problem with a truncated domain: the outer endpoint L satisfies
/// V(L) >= lambda_k + margin (lambda_k from coarse solves), and a singular
/// endpoint is replaced by L / gridPoints.
NumericProblem make_problem(const Potential& v, int k, int gridPoints, double margin = 50.0);

struct ConvergenceRow {
  int grid = 0;
  double eigenvalue = 0;
  double error = 0;
};

/// fd_eigensolve of eigenvalue `index` (0-based) at each grid size, on the
/// domain of `problem`.
std::vector<ConvergenceRow> convergence_study(const NumericProblem& problem, int index, const std::vector<int>& grids);
/// Header "grid,eigenvalue,error".
std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace superalg::numeric
