#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "superalg/model/fit.h"

namespace superalg::model {

/// A claimed identity lhs = rhs; both sides are expressions over generator
/// names, brackets, anticommutators and products taken in written order.
struct RelationSpec {
  std::string id;
  std::string lhs;
  std::string rhs;
};

struct AuditEntry {
  std::string relation_id;
  OperatorExpr residual;                    // lhs - rhs
  std::optional<std::string> corrected_rhs; // exact refit of lhs, for mismatches
  std::optional<std::string> note;

  bool exact() const { return residual.is_zero(); }
  std::string verdict() const { return exact() ? "exact-match" : "mismatch"; }
};

struct AuditReport {
  std::string title;
  std::vector<AuditEntry> entries;

  bool all_exact() const;
  std::size_t mismatches() const;
  /// [{relation_id, residual, verdict, corrected_rhs?, note?}, ...]
  nlohmann::json to_json() const;
};

/// lhs - rhs, with a closure refit of lhs when the residual is nonzero.
AuditEntry audit_relation(const RelationSpec& rel, const ModelOperators& ops, bool refit = true);

/// The eight vanishing brackets among H, A1, A2, B1, B2, F.
AuditReport verify_zero_relations(const ModelOperators& ops);

/// Printed right-hand sides of the quadratic symmetry algebra, including the
/// brackets among C1, C2, D.
const std::vector<RelationSpec>& symmetry_relations();

AuditReport audit_symmetry_algebra(const ModelOperators& ops);

/// Generator pairs joined by the commutativity diagram.
const std::vector<std::pair<std::string, std::string>>& commuting_pairs();
/// Pairs of H, A1, A2, B1, B2, F not in the diagram; their brackets are nonzero.
std::vector<std::pair<std::string, std::string>> noncommuting_pairs();

}  // namespace superalg::model
