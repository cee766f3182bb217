#pragma once

#include "superalg/model/audit.h"

namespace superalg::model {

/// K1 of the (A1, B1) subalgebra as printed.
OperatorExpr casimir_q1(const ModelOperators& ops);
/// K2 of the (A2, B2) subalgebra as printed, with the factor 16(2c2-5).
OperatorExpr casimir_q2(const ModelOperators& ops);
/// K2 with the factor 16(2c3-5); this is what the generic quadratic-algebra
/// Casimir gives for the (A2, B2) structure constants.
OperatorExpr casimir_q2_rederived(const ModelOperators& ops);

/// Printed central forms.
OperatorExpr central_form_q1(const ModelOperators& ops);
OperatorExpr central_form_q2(const ModelOperators& ops);

/// [K, X] for K1 against A1, B1 and both K2 variants against A2, B2.
AuditReport casimir_commutation_check(const ModelOperators& ops);

/// Fit of k over {H^2, H*A, A^2, H, A, 1} (A = A2 or A1) with parameter degree
/// 2, escalated to 3 when needed.
StructureFit fit_central(const OperatorExpr& k, const std::string& complementary, const ModelOperators& ops);

/// K - K' for both subalgebras (printed and rederived K2), central refits of
/// any mismatch, and centrality of the central forms against the subalgebra
/// generators.
AuditReport casimir_central_check(const ModelOperators& ops);

}  // namespace superalg::model
