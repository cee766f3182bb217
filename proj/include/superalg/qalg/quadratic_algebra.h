#pragma once

#include <string>
#include <vector>

#include "superalg/model/audit.h"
#include "superalg/qalg/central_poly.h"

namespace superalg::qalg {

/// Three-generator quadratic algebra with central weights:
///   [A,B] = C
///   [A,C] = alpha A^2 + gamma {A,B} + delta A + epsilon B + zeta
///   [B,C] = a A^2 - gamma B^2 - alpha {A,B} + d A - delta B + z
/// The generator names tie the symbols to model operators; Z is the central
/// generator borrowed from the other subalgebra.
struct QuadraticAlgebraSpec {
  std::string a_name, b_name, c_name, z_name;
  Coefficient alpha, gamma, a;
  CentralPoly delta, epsilon, zeta, d, z;
};

/// A1, B1, C1 with Z = A2.
QuadraticAlgebraSpec q1_spec();
/// A2, B2, C2 with Z = A1.
QuadraticAlgebraSpec q2_spec();
/// Every field zero; generator names as in q1_spec.
QuadraticAlgebraSpec zero_spec();

/// Checks [A,B] = C and both quadratic brackets against model operators.
model::AuditReport verify_spec(const QuadraticAlgebraSpec& spec, const model::ModelOperators& ops);

/// Casimir as a sum of central weights times words in A, B, C:
///   C^2 - alpha {A^2,B} - gamma {A,B^2} + (alpha gamma - delta) {A,B}
///   + (gamma^2 - epsilon) B^2 + (gamma delta - 2 zeta) B + 2a/3 A^3
///   + (d + a gamma/3 + alpha^2) A^2 + (a epsilon/3 + alpha delta + 2 z) A
struct GenericCasimir {
  struct Term {
    CentralPoly weight;
    std::string word;  // over the symbols A, B, C
  };
  std::vector<Term> terms;  // zero weights omitted

  OperatorExpr realize(const QuadraticAlgebraSpec& spec, const model::ModelOperators& ops) const;
  std::string to_string(const QuadraticAlgebraSpec& spec) const;
};

GenericCasimir generic_casimir(const QuadraticAlgebraSpec& spec);

/// Central forms of the two Casimirs as printed, over H and Z.
CentralPoly central_casimir_q1();
CentralPoly central_casimir_q2();

}  // namespace superalg::qalg
