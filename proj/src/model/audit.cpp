#include "superalg/model/audit.h"

#include <algorithm>

namespace superalg::model {

bool AuditReport::all_exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.exact(); });
}

std::size_t AuditReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) { return !e.exact(); }));
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json row{{"relation_id", e.relation_id}, {"residual", e.residual.to_string()}, {"verdict", e.verdict()}};
    if (e.corrected_rhs) row["corrected_rhs"] = *e.corrected_rhs;
    if (e.note) row["note"] = *e.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

AuditEntry audit_relation(const RelationSpec& rel, const ModelOperators& ops, bool refit) {
  OperatorExpr lhs = ops.expand(rel.lhs);
  AuditEntry entry{rel.id, lhs - ops.expand(rel.rhs), std::nullopt, std::nullopt};
  if (entry.exact() || !refit) return entry;
  StructureFit fit = fit_closure(lhs, ops);
  if (fit.exact()) {
    entry.corrected_rhs = fit.rhs_string();
  } else {
    entry.note = "no quadratic closure fit found";
  }
  return entry;
}

AuditReport verify_zero_relations(const ModelOperators& ops) {
  AuditReport report{"zero relations", {}};
  for (const char* lhs : {"[A1,H]", "[A2,H]", "[B1,H]", "[B2,H]", "[H,F]", "[A1,A2]", "[A1,B2]", "[A2,B1]"})
    report.entries.push_back(audit_relation({lhs, lhs, "0"}, ops, false));
  return report;
}

const std::vector<RelationSpec>& symmetry_relations() {
  static const std::vector<RelationSpec> relations = [] {
    const std::pair<const char*, const char*> rows[] = {
        {"[A1,C1]", "4*c2*A1 + 16*c1*B1 + 4*c2*(A2-H)"},
        {"[B1,C1]", "24*A1^2 + 32*(A2-H)*A1 - 4*c2*B1 + 8*H^2 - 16*H*A2 - 8*c1*(4*c4-3) + 8*A2^2"},
        {"[A2,C2]", "8*A2^2 + 8*(A1-H)*A2 + 8*c1*(2*B2+1)"},
        {"[B2,C2]", "-16*(c3+c4-1)*A2 - 8*{A2,B2} - 8*(A1-H)*B2 - 8*(2*c3-1)*A1 + 8*(2*c3-1)*H"},
        {"[A1,D]", "8*A2*B1 - 8*F*A1 - 8*A2*F + 8*H*F"},
        {"[C1,F]", "8*H*A2 - 8*A2*A1 - 8*A2^2 - 16*c1*B2 - 8*c1"},
        {"[C1,B2]", "8*A2*B1 - 8*A1*F - 8*A2*F + 8*H*F"},
        {"[E1,A2]", "16*c1*F + 4*c2*A2"},
        {"[E1,B2]", "8*H*F - 8*F*A1 - 8*A2*F + 8*B1*A2"},
        {"[E1,F]", "16*A2*A1 - 4*c2*F - 8*A2^2 + 8*c1*(4*c3-3)"},
        {"[E1,A1]", "-16*c1*F - 4*c2*A2"},
        {"[C2,B1]", "4*c2*B2 - 8*F*A2 - 8*A1*F + 8*H*F + 2*c2"},
        {"[E2,A2]", "-4*c2*A2 - 16*c1*F"},
        {"[E2,B1]", "8*A2^2 + 8*(A1-H)*A2 + 16*c1*B2 + 8*c1"},
        {"[E2,B2]", "8*A2*F + 8*A1*F - 8*H*F - 8*B1*A2"},
        {"[E2,F]", "8*A2^2 - 16*A1*A2 + 4*c2*F - 8*c1*(4*c3-3)"},
        {"[B1,D]", "8*F*B1 - 8*(A2+3*A1-H)*B2 - 8*(2*c4-1)*A2 - 12*A1 + 4*H"},
        {"[D,B2]", "8*(B1*B2+B2*B1) + 8*F*B2 + 8*(2*c3-1)*B1 + 8*(2*c4-1)*F - 8*B1*B2"},
        {"[E3,B1]", "8*(A1+A2-H)*F - 4*c2*B2 - 2*c2"},
        {"[E3,B2]",
         "8*F*B1 - 8*(2*c3-1)*A1 - 16*(c3+c4-1)*A2 + 8*(2*c3-1)*H - 8*A1*B2 - 16*A2*B2 + 8*B2 - 8*B1*F"},
        {"[E3,F]", "8*A2*B1 - 4*c2*B2 - 2*c2"},
        {"[E4,A1]", "-8*(A1+A2-H)*F + 8*B1*A2"},
        {"[E4,B2]", "-8*(B2*F+F*B2) + 8*F*B2 - 8*(2*c4-1)*F - 8*B1*B2 - 8*(2*c3-1)*B1"},
        {"[E4,F]", "-8*(2*A1-A2)*B2 + 8*B1*F - 4*(4*c3-3)*H + 4*(4*c3-5)*A1 + 8*(2*c3-1)*A2"},
        {"[C1,C2]", "8*A2*C1 - 4*c2*C2 - 16*c1*D"},
        {"[C1,D]", "8*F*C1 - 8*A2*C2 - 24*A1*C2 + 8*H*C2 + 4*c2*D"},
        {"[C2,D]", "-8*B2*C1 - 8*F*C2 + 8*A2*D - 8*(2*c3-1)*C1"},
    };
    std::vector<RelationSpec> out;
    for (const auto& [lhs, rhs] : rows) out.push_back({lhs, lhs, rhs});
    return out;
  }();
  return relations;
}

AuditReport audit_symmetry_algebra(const ModelOperators& ops) {
  AuditReport report{"symmetry algebra", {}};
  for (const auto& rel : symmetry_relations()) report.entries.push_back(audit_relation(rel, ops));
  return report;
}

const std::vector<std::pair<std::string, std::string>>& commuting_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"H", "A1"}, {"H", "A2"}, {"H", "B1"}, {"H", "B2"}, {"H", "F"}, {"A1", "A2"}, {"A1", "B2"}, {"A2", "B1"}};
  return pairs;
}

std::vector<std::pair<std::string, std::string>> noncommuting_pairs() {
  const auto& names = integral_names();
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      std::pair<std::string, std::string> p{names[a], names[b]};
      if (std::find(commuting_pairs().begin(), commuting_pairs().end(), p) == commuting_pairs().end())
        out.push_back(p);
    }
  return out;
}

}  // namespace superalg::model
