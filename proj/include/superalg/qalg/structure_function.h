#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "superalg/qalg/quadratic_algebra.h"

namespace superalg::qalg {

/// constant + nu * v + e * (eigenvalue of the borrowed central generator).
template <class T>
struct LinearBracket {
  T constant, nu, e;
  T at(const T& v, const T& ev) const { return constant + nu * v + e * ev; }
};

/// prefactor * product of linear brackets, as a function of v = n + u and of
/// the central eigenvalue e, which may be left symbolic.
template <class T>
struct BracketForm {
  T prefactor;
  std::vector<LinearBracket<T>> brackets;

  bool has_symbolic_e() const;
  T evaluate(const T& v, const T& e = T(0)) const;
  /// Coefficients in v with e substituted.
  Poly<T> expand(const T& e = T(0)) const;
  BracketForm with_e(const T& e) const;
};

template <class T>
struct StructureFunctionPoly {
  Poly<T> coefficients;  // in v = n + u
  Poly<T> eigen_a;       // eigenvalue of A as a polynomial in v
  std::optional<BracketForm<T>> factored;

  T evaluate(const T& v) const { return poly_eval(coefficients, v); }
  int degree() const { return static_cast<int>(poly_trim(coefficients).size()) - 1; }
};

enum class Branch { GammaNonzero, GammaZero };

/// Structure function of the generic algebra with Casimir value K(H, Z) at
/// H = E, Z = z, assembled from the printed formula of the chosen branch.
/// Throws std::invalid_argument when the branch does not match gamma (or
/// epsilon vanishes on the gamma = 0 branch), and std::domain_error when an
/// exact square root of epsilon is unavailable.
template <class T>
StructureFunctionPoly<T> generic_structure_function(const QuadraticAlgebraSpec& spec, const CentralPoly& k,
                                                    Branch branch, const ModelParams<T>& params, const T& E,
                                                    const T& z);

/// A1/B1 realization; e is the eigenvalue of A2:
///   1/(1024 m1^5) [(e-E) - m1(2+m4-4v)] [(e-E) + m1(-2+m4+4v)] [m2^2 + 32 m1^3 (2v-1)]
template <class T>
BracketForm<T> build_phi1(const ModelParams<T>& params, const T& E);

/// A2/B2 realization; e is the eigenvalue of A1:
///   1/(256 m1^4) [4v-2-m3] [4v-2+m3] [m1 e - m1 E - m1^2 m4 + m1^2(4v-2)]
///                [m1 e - m1 E + m1^2 m4 + m1^2(4v-2)]
template <class T>
BracketForm<T> build_phi2(const ModelParams<T>& params, const T& E);

template <class T>
struct UnirrepSolution {
  T u;
  std::optional<T> central_eigen;  // solved e, absent when e was given
  int dimension = 0;               // p + 1
  std::size_t start_bracket = 0;   // bracket vanishing at n = 0
  std::size_t end_bracket = 0;     // bracket vanishing at n = p + 1
  std::vector<std::array<int, 3>> sign_choices;
  bool positivity_verified = false;
  bool bounded_below = false;  // E - e does not decrease when p grows
};

/// Closed-form central eigenvalue for a sign triple.
template <class T>
using SignFamily = std::function<T(const std::array<int, 3>&)>;

/// e(A2) = 4 s2 m1 (p+1) + E + s3 m1 m4 + m2^2/(16 m1^2); s1 does not enter.
template <class T>
SignFamily<T> phi1_family(const ModelParams<T>& params, const T& E, int p);
/// e(A1) = 4 s1 m1 (p+1) + E + s2 m1 m3 + s3 m1 m4.
template <class T>
SignFamily<T> phi2_family(const ModelParams<T>& params, const T& E, int p);

/// Every assignment of a bracket root to phi(0) = 0 and another to
/// phi(p+1) = 0, solved for (u, e); kept when phi(k) > 0 for k = 1..p.
/// Equal solutions are merged. Sign triples whose family value equals the
/// solved e are attached.
template <class T>
std::vector<UnirrepSolution<T>> solve_unirrep_constraints(const BracketForm<T>& phi, int p,
                                                          const SignFamily<T>& family = {});

struct ProportionalityAudit {
  bool proportional = false;
  double ratio = 0;          // generic / factored, from the leading coefficients
  double max_deviation = 0;  // max |generic_k - ratio * factored_k|
  std::vector<double> generic, factored;
};

template <class T>
ProportionalityAudit proportionality_audit(const StructureFunctionPoly<T>& generic, const BracketForm<T>& phi,
                                           const T& e);

}  // namespace superalg::qalg
