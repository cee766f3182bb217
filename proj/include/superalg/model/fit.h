#pragma once

#include <string>
#include <vector>

#include "superalg/model/generators.h"

namespace superalg::model {

/// target = sum coefficients[k] * basis[k] + residual, exactly.
struct StructureFit {
  std::vector<std::string> basis;
  std::vector<Coefficient> coefficients;
  OperatorExpr residual;
  int param_degree = 0;  // parameter degree allowed in the weights

  bool exact() const { return residual.is_zero(); }
  /// Nonzero terms as a parseable expression over generator names, e.g.
  /// "(4*c2)*A1 + (16*c1)*B1"; "0" when every weight vanishes.
  std::string rhs_string() const;
};

/// Fits target against basis expressions (generator names, products such as
/// "A2*A1", anticommutators "{A2,B2}" or "1") with weights that are parameter
/// polynomials of degree <= max_param_degree. When the system is
/// underdetermined the returned support is minimal, preferring earlier basis
/// entries and lower-degree parameter monomials. An inconsistent system yields
/// zero weights and residual = target.
StructureFit fit_structure_constants(const OperatorExpr& target, const std::vector<std::string>& basis,
                                     int max_param_degree, const ModelOperators& ops);

/// Identity, the nine generators H, A1, A2, B1, B2, F, C1, C2, D and their
/// ordered pairwise products.
std::vector<std::string> closure_basis();

/// Closure basis restricted to entries whose momentum degree does not exceed
/// that of the target.
std::vector<std::string> closure_basis_for(const OperatorExpr& target, const ModelOperators& ops);

/// Quadratic closure fit: the degree-filtered basis with parameter degree 1,
/// then 2, then the full basis with parameter degree 2. Returns the first
/// exact fit, or the last attempt.
StructureFit fit_closure(const OperatorExpr& target, const ModelOperators& ops);

/// All monomials c1^a c2^b c3^c c4^d with a+b+c+d <= degree, ordered by
/// degree, then lexicographically with c1 first.
std::vector<ParamMonomial> param_monomials_up_to(int degree);

}  // namespace superalg::model
