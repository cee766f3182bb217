#pragma once

#include <map>
#include <string>
#include <vector>

#include "superalg/cli/parser.h"
#include "superalg/weylcore/operator_expr.h"

namespace superalg::model {

/// Named operators of the four-parameter V_IV system:
///   H  = p1^2 + p2^2 + p3^2 + c1 (4 x1^2 + x2^2 + x3^2) + c2 x1 + c3/x2^2 + c4/x3^2
/// with the integrals A1, A2, B1, B2, F, the angular momenta J1..J3, the
/// bracket-defined C1, C2, D, E1..E4, and the auxiliary x3 part A3.
class ModelOperators {
 public:
  explicit ModelOperators(cli::Environment ops) : ops_(std::move(ops)) {}

  const OperatorExpr& at(const std::string& name) const;
  bool contains(const std::string& name) const { return ops_.count(name) != 0; }
  const cli::Environment& environment() const { return ops_; }

  /// Parse an expression over x/p/c symbols and generator names, then lower it.
  OperatorExpr expand(const std::string& expression) const;

 private:
  cli::Environment ops_;
};

/// The sixteen named generators plus A3 = p3^2 + c1 x3^2 + c4/x3^2.
ModelOperators build_generators();

/// Names in the order used for reports: H, A1, A2, B1, B2, F, J1..J3, C1, C2, D, E1..E4.
const std::vector<std::string>& generator_names();

/// The six second-order integrals H, A1, A2, B1, B2, F.
const std::vector<std::string>& integral_names();

/// Rank test of the six integrals as operators over Q(i) with symbolic
/// parameters (coefficients of every x/p/c monomial, including potentials).
bool integrals_linearly_independent(const ModelOperators& ops);

}  // namespace superalg::model
