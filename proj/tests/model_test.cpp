#include <random>

#include "doctest.h"
#include "superalg/model/casimir.h"
#include "superalg/model/exact_linalg.h"

using namespace superalg;
using namespace superalg::model;

namespace {

const ModelOperators& ops() {
  static const ModelOperators instance = build_generators();
  return instance;
}

Coefficient coef(const std::string& text) {
  OperatorExpr e = cli::parse_and_lower(text);
  if (e.is_zero()) return {};
  return e.terms().at(WeylMonomial::identity());
}

Coefficient weight(const StructureFit& fit, const std::string& name) {
  for (std::size_t k = 0; k < fit.basis.size(); ++k)
    if (fit.basis[k] == name) return fit.coefficients[k];
  FAIL("basis element missing: " << name);
  return {};
}

}  // namespace

TEST_CASE("generators from coordinates") {
  using O = OperatorExpr;
  O x1 = O::x(1), p1 = O::p(1);
  CHECK(ops().at("A1") == p1 * p1 + O::c(1) * 4 * x1 * x1 + O::c(2) * x1);
  O j1 = O::x(2) * O::p(3) - O::x(3) * O::p(2);
  CHECK(ops().at("J1") == j1);
  CHECK(ops().at("B2") == j1 * j1 + O::c(3) * O::x(3, 2) * O::x(2, -2) + O::c(4) * O::x(2, 2) * O::x(3, -2));
  CHECK((ops().at("H") - ops().at("A1") - ops().at("A2") - ops().at("A3")).is_zero());
  CHECK(ops().at("C1") == commutator(ops().at("A1"), ops().at("B1")));
  CHECK(ops().at("E4") == commutator(ops().at("B2"), ops().at("F")));
  for (const auto& name : generator_names()) CHECK(ops().contains(name));
}

TEST_CASE("integrals are self-adjoint and second order") {
  for (const auto& name : integral_names()) {
    CHECK_MESSAGE(formal_adjoint(ops().at(name)) == ops().at(name), name);
    CHECK(momentum_degree(ops().at(name)) == 2);
  }
  for (const char* name : {"C1", "C2", "D", "E1", "E2", "E3", "E4"}) CHECK_MESSAGE(momentum_degree(ops().at(name)) == 3, name);
  // Brackets of self-adjoint operators are skew-adjoint.
  CHECK(formal_adjoint(ops().at("C1")) == -ops().at("C1"));
}

TEST_CASE("commutativity diagram") {
  for (const auto& [a, b] : commuting_pairs()) CHECK_MESSAGE(commutator(ops().at(a), ops().at(b)).is_zero(), a << b);
  auto others = noncommuting_pairs();
  CHECK(others.size() == 7);
  for (const auto& [a, b] : others) CHECK_MESSAGE(!commutator(ops().at(a), ops().at(b)).is_zero(), a << b);
}

TEST_CASE("linear independence") {
  CHECK(integrals_linearly_independent(ops()));
  CHECK(exact_rank({ops().at("A1"), ops().at("A2"), ops().at("A1") + ops().at("A2")}) == 2);
  CHECK(exact_rank({ops().at("H"), ops().at("A1"), ops().at("A2"), ops().at("A3")}) == 3);
}

TEST_CASE("zero relations") {
  AuditReport report = verify_zero_relations(ops());
  CHECK(report.entries.size() == 8);
  CHECK(report.all_exact());
  CHECK(report.entries.back().relation_id == "[A2,B1]");
}

TEST_CASE("fit examples") {
  StructureFit sa1 = fit_structure_constants(ops().expand("[A1,C1]"), {"A1", "B1", "A2", "H", "1"}, 1, ops());
  REQUIRE(sa1.exact());
  CHECK(weight(sa1, "A1") == coef("4*c2"));
  CHECK(weight(sa1, "B1") == coef("16*c1"));
  CHECK(weight(sa1, "A2") == coef("4*c2"));
  CHECK(weight(sa1, "H") == coef("-4*c2"));
  CHECK(weight(sa1, "1").is_zero());

  StructureFit split = fit_structure_constants(ops().at("H"), {"A1", "A2", "A3"}, 1, ops());
  REQUIRE(split.exact());
  for (const auto& c : split.coefficients) CHECK(c == coef("1"));

  StructureFit sa3 =
      fit_structure_constants(ops().expand("[A2,C2]"), {"A2*A2", "A1*A2", "H*A2", "B2", "1"}, 1, ops());
  REQUIRE(sa3.exact());
  CHECK(weight(sa3, "A2*A2") == coef("8"));
  CHECK(weight(sa3, "A1*A2") == coef("8"));
  CHECK(weight(sa3, "H*A2") == coef("-8"));
  CHECK(weight(sa3, "B2") == coef("16*c1"));
  CHECK(weight(sa3, "1") == coef("8*c1"));
}

TEST_CASE("fit edge cases") {
  StructureFit zero = fit_structure_constants(OperatorExpr(), {"H", "A1"}, 1, ops());
  CHECK(zero.exact());
  CHECK(zero.rhs_string() == "0");

  StructureFit none = fit_structure_constants(OperatorExpr::x(1), {"A1", "A2"}, 1, ops());
  CHECK(!none.exact());
  CHECK(none.residual == OperatorExpr::x(1));
  for (const auto& c : none.coefficients) CHECK(c.is_zero());

  // Duplicates and redundant sums resolve to the earliest single element.
  StructureFit dup = fit_structure_constants(ops().at("A1"), {"A1", "A1", "H - A2 - A3"}, 1, ops());
  CHECK(dup.coefficients[0] == coef("1"));
  CHECK(dup.coefficients[1].is_zero());
  CHECK(dup.coefficients[2].is_zero());

  StructureFit sum = fit_structure_constants(ops().at("H"), {"A1", "A2", "A3", "H"}, 1, ops());
  CHECK(sum.exact());
  CHECK(sum.coefficients[3] == coef("1"));  // one term beats three
  CHECK(sum.coefficients[0].is_zero());
}

TEST_CASE("fit round trip") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> basis = integral_names();
  const auto monos = param_monomials_up_to(1);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Coefficient> w(basis.size());
    OperatorExpr target;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (const auto& m : monos)
        if (rng() % 3 == 0) {
          Rational r(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
          r.canonicalize();
          w[k].add_term(m, GaussianRational(r));
        }
      target += w[k] * ops().at(basis[k]);
    }
    StructureFit fit = fit_structure_constants(target, basis, 1, ops());
    REQUIRE(fit.exact());
    for (std::size_t k = 0; k < basis.size(); ++k) CHECK(fit.coefficients[k] == w[k]);
  }
}

TEST_CASE("printed quadratic relations") {
  CHECK(audit_relation(symmetry_relations()[0], ops()).exact());
  CHECK(audit_relation(symmetry_relations()[2], ops()).exact());
  RelationSpec perturbed = symmetry_relations()[0];
  perturbed.rhs += " + 1";
  AuditEntry e = audit_relation(perturbed, ops(), false);
  CHECK(e.residual == OperatorExpr(-1));
  CHECK(e.verdict() == "mismatch");
}

TEST_CASE("quadratic closure of every relation") {
  AuditReport report = audit_symmetry_algebra(ops());
  CHECK(report.entries.size() == 27);
  CHECK(report.mismatches() == 4);
  for (const auto& entry : report.entries) {
    if (entry.exact()) continue;
    REQUIRE_MESSAGE(entry.corrected_rhs.has_value(), entry.relation_id);
    CHECK_MESSAGE((ops().expand(entry.relation_id) - ops().expand(*entry.corrected_rhs)).is_zero(), entry.relation_id);
  }
  auto json = report.to_json();
  CHECK(json.size() == 27);
  CHECK(json[0]["verdict"] == "exact-match");
  CHECK(json[0]["residual"] == "0");
}

TEST_CASE("term-for-term structure constants") {
  struct Row {
    const char* lhs;
    std::vector<std::string> basis;
    std::vector<const char*> expected;
  };
  const std::vector<Row> rows{
      {"[A1,C1]", {"A1", "B1", "A2", "H", "1"}, {"4*c2", "16*c1", "4*c2", "-4*c2", "0"}},
      {"[B1,C1]",
       {"A1*A1", "A2*A1", "H*A1", "B1", "H*H", "H*A2", "A2*A2", "1"},
       {"24", "32", "-32", "-4*c2", "8", "-16", "8", "24*c1 - 32*c1*c4"}},
      {"[A2,C2]", {"A2*A2", "A1*A2", "H*A2", "B2", "1"}, {"8", "8", "-8", "16*c1", "8*c1"}},
      {"[B2,C2]",
       {"{A2,B2}", "A2", "A1*B2", "H*B2", "H", "A1"},
       {"-8", "-16*(c3+c4-1)", "-8", "8", "8*(2*c3-1)", "-8*(2*c3-1)"}},
  };
  for (const auto& row : rows) {
    StructureFit fit = fit_structure_constants(ops().expand(row.lhs), row.basis, 2, ops());
    REQUIRE_MESSAGE(fit.exact(), row.lhs);
    for (std::size_t k = 0; k < row.basis.size(); ++k)
      CHECK_MESSAGE(fit.coefficients[k] == coef(row.expected[k]), row.lhs << " " << row.basis[k]);
  }
}

TEST_CASE("casimir commutation") {
  AuditReport report = casimir_commutation_check(ops());
  REQUIRE(report.entries.size() == 6);
  CHECK(report.entries[0].exact());
  CHECK(report.entries[1].exact());
  CHECK(report.entries[2].exact());
  CHECK(!report.entries[3].exact());  // printed K2 does not commute with B2
  CHECK(report.entries[4].exact());
  CHECK(report.entries[5].exact());
}

TEST_CASE("casimir at c1 = c2 = 0") {
  const std::array<Rational, 4> at{Rational(0), Rational(0), Rational(1, 2), Rational(3)};
  OperatorExpr expected = ops().expand("C1^2 + 16*A1^3 + 32*(A2-H)*A1^2 + (16*H^2 - 32*H*A2 + 16*A2^2)*A1");
  CHECK(substitute_params(casimir_q1(ops()), at) == substitute_params(expected, at));
}

TEST_CASE("central forms") {
  AuditReport report = casimir_central_check(ops());
  REQUIRE(report.entries.size() == 7);
  CHECK(report.entries[0].exact());
  CHECK(!report.entries[1].exact());
  CHECK(report.entries[1].note.has_value());
  CHECK(report.entries[2].exact());
  for (std::size_t k = 3; k < 7; ++k) CHECK(report.entries[k].exact());

  StructureFit k2 =
      fit_structure_constants(casimir_q2_rederived(ops()), {"(H-A1)^2", "H-A1", "1"}, 3, ops());
  REQUIRE(k2.exact());
  CHECK(k2.coefficients[0] == coef("4*(4*c3-3)"));
  CHECK(k2.coefficients[1].is_zero());
  CHECK(k2.coefficients[2] == coef("-16*(2*c1 - 3*c1*c3 - 3*c1*c4 + 4*c1*c3*c4)"));

  StructureFit k1 = fit_central(casimir_q1(ops()), "A2", ops());
  REQUIRE(k1.exact());
  CHECK(k1.param_degree == 3);
  CHECK(ops().expand(k1.rhs_string()) == central_form_q1(ops()));

  StructureFit zero = fit_central(OperatorExpr(), "A2", ops());
  CHECK(zero.exact());
  for (const auto& c : zero.coefficients) CHECK(c.is_zero());
}
