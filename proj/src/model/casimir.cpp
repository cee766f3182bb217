#include "superalg/model/casimir.h"

namespace superalg::model {

namespace {

const char* kK2Head =
    "C2^2 - 8*{A2^2,B2} - 8*(A1-H)*{A2,B2} - 16*c1*B2^2 - 16*c1*B2 - 16*(c3+c4-5)*A2^2";

AuditEntry bracket_entry(const std::string& id, const OperatorExpr& a, const OperatorExpr& b) {
  return {id, commutator(a, b), std::nullopt, std::nullopt};
}

}  // namespace

OperatorExpr casimir_q1(const ModelOperators& ops) {
  return ops.expand(
      "C1^2 - 4*c2*{A1,B1} - 16*c1*B1^2 - 8*c2*(A2-H)*B1 + 16*A1^3 + 32*(A2-H)*A1^2"
      " + (128*c1 + 16*H^2 - 32*H*A2 - 16*c1*(4*c4-3) + 16*A2^2)*A1");
}

OperatorExpr casimir_q2(const ModelOperators& ops) {
  return ops.expand(std::string(kK2Head) + " - 16*(2*c2-5)*(A1-H)*A2");
}

OperatorExpr casimir_q2_rederived(const ModelOperators& ops) {
  return ops.expand(std::string(kK2Head) + " - 16*(2*c3-5)*(A1-H)*A2");
}

OperatorExpr central_form_q1(const ModelOperators& ops) {
  return ops.expand("128*c1*H - 128*c1*A2 - 3*c2^2 + 4*c2^2*c4");
}

OperatorExpr central_form_q2(const ModelOperators& ops) {
  return ops.expand("4*(4*c3-3)*(H-A1)^2 - 16*(2*c1 - 3*c1*c3 - 3*c1*c4 + 4*c1*c3*c4)");
}

AuditReport casimir_commutation_check(const ModelOperators& ops) {
  AuditReport report{"casimir commutation", {}};
  OperatorExpr k1 = casimir_q1(ops), k2 = casimir_q2(ops), k2r = casimir_q2_rederived(ops);
  report.entries.push_back(bracket_entry("[K1,A1]", k1, ops.at("A1")));
  report.entries.push_back(bracket_entry("[K1,B1]", k1, ops.at("B1")));
  report.entries.push_back(bracket_entry("[K2,A2]", k2, ops.at("A2")));
  report.entries.push_back(bracket_entry("[K2,B2]", k2, ops.at("B2")));
  if (!report.entries.back().exact())
    report.entries.back().note = "printed K2 is not central; the factor 16(2c2-5) should read 16(2c3-5)";
  report.entries.push_back(bracket_entry("[K2(c3),A2]", k2r, ops.at("A2")));
  report.entries.push_back(bracket_entry("[K2(c3),B2]", k2r, ops.at("B2")));
  return report;
}

StructureFit fit_central(const OperatorExpr& k, const std::string& a, const ModelOperators& ops) {
  const std::vector<std::string> basis{"H*H", "H*" + a, a + "*" + a, "H", a, "1"};
  StructureFit fit = fit_structure_constants(k, basis, 2, ops);
  if (!fit.exact()) fit = fit_structure_constants(k, basis, 3, ops);
  return fit;
}

AuditReport casimir_central_check(const ModelOperators& ops) {
  AuditReport report{"casimir central forms", {}};
  auto central_entry = [&](const std::string& id, const OperatorExpr& k, const OperatorExpr& kp, const std::string& a) {
    AuditEntry entry{id, k - kp, std::nullopt, std::nullopt};
    if (!entry.exact()) {
      StructureFit fit = fit_central(k, a, ops);
      if (fit.exact())
        entry.corrected_rhs = fit.rhs_string();
      else
        entry.note = "not expressible through H and " + a + " with parameter degree <= 3";
    }
    report.entries.push_back(std::move(entry));
  };
  const OperatorExpr k1p = central_form_q1(ops), k2p = central_form_q2(ops);
  central_entry("K1-K1'", casimir_q1(ops), k1p, "A2");
  central_entry("K2-K2'", casimir_q2(ops), k2p, "A1");
  central_entry("K2(c3)-K2'", casimir_q2_rederived(ops), k2p, "A1");
  report.entries.push_back(bracket_entry("[K1',A1]", k1p, ops.at("A1")));
  report.entries.push_back(bracket_entry("[K1',B1]", k1p, ops.at("B1")));
  report.entries.push_back(bracket_entry("[K2',A2]", k2p, ops.at("A2")));
  report.entries.push_back(bracket_entry("[K2',B2]", k2p, ops.at("B2")));
  return report;
}

}  // namespace superalg::model
