#include "superalg/qalg/quadratic_algebra.h"

namespace superalg::qalg {

namespace {

cli::Environment symbol_env(const QuadraticAlgebraSpec& spec, const model::ModelOperators& ops) {
  return {{"A", ops.at(spec.a_name)}, {"B", ops.at(spec.b_name)}, {"C", ops.at(spec.c_name)}};
}

}  // namespace

QuadraticAlgebraSpec q1_spec() {
  return {"A1", "B1", "C1", "A2",
          Coefficient(0), Coefficient(0), Coefficient(24),
          CentralPoly::parse("4*c2"), CentralPoly::parse("16*c1"), CentralPoly::parse("4*c2*(Z-H)"),
          CentralPoly::parse("32*(Z-H)"), CentralPoly::parse("8*H^2 - 16*H*Z - 8*c1*(4*c4-3) + 8*Z^2")};
}

QuadraticAlgebraSpec q2_spec() {
  return {"A2", "B2", "C2", "A1",
          Coefficient(8), Coefficient(0), Coefficient(0),
          CentralPoly::parse("8*(Z-H)"), CentralPoly::parse("16*c1"), CentralPoly::parse("8*c1"),
          CentralPoly::parse("-16*(c3+c4-1)"), CentralPoly::parse("8*(2*c3-1)*(H-Z)")};
}

QuadraticAlgebraSpec zero_spec() {
  return {"A1", "B1", "C1", "A2", {}, {}, {}, {}, {}, {}, {}, {}};
}

model::AuditReport verify_spec(const QuadraticAlgebraSpec& spec, const model::ModelOperators& ops) {
  const OperatorExpr& A = ops.at(spec.a_name);
  const OperatorExpr& B = ops.at(spec.b_name);
  const OperatorExpr& C = ops.at(spec.c_name);
  auto central = [&](const CentralPoly& p) { return p.to_operator(ops, spec.z_name); };
  OperatorExpr ac = spec.alpha * (A * A) + spec.gamma * anticommutator(A, B) + central(spec.delta) * A +
                    central(spec.epsilon) * B + central(spec.zeta);
  OperatorExpr bc = spec.a * (A * A) - spec.gamma * (B * B) - spec.alpha * anticommutator(A, B) +
                    central(spec.d) * A - central(spec.delta) * B + central(spec.z);
  model::AuditReport report{"quadratic algebra " + spec.a_name + "/" + spec.b_name, {}};
  report.entries.push_back({"[" + spec.a_name + "," + spec.b_name + "]", commutator(A, B) - C, {}, {}});
  report.entries.push_back({"[" + spec.a_name + "," + spec.c_name + "]", commutator(A, C) - ac, {}, {}});
  report.entries.push_back({"[" + spec.b_name + "," + spec.c_name + "]", commutator(B, C) - bc, {}, {}});
  return report;
}

GenericCasimir generic_casimir(const QuadraticAlgebraSpec& s) {
  const CentralPoly alpha(s.alpha), gamma(s.gamma), a(s.a);
  const CentralPoly two(2), third(Coefficient(GaussianRational(Rational(1, 3))));
  GenericCasimir k;
  auto add = [&k](CentralPoly w, const char* word) {
    if (!w.is_zero()) k.terms.push_back({std::move(w), word});
  };
  add(CentralPoly(1), "C^2");
  add(-alpha, "{A^2,B}");
  add(-gamma, "{A,B^2}");
  add(alpha * gamma - s.delta, "{A,B}");
  add(gamma * gamma - s.epsilon, "B^2");
  add(gamma * s.delta - two * s.zeta, "B");
  add(two * third * a, "A^3");
  add(s.d + third * a * gamma + alpha * alpha, "A^2");
  add(third * a * s.epsilon + alpha * s.delta + two * s.z, "A");
  return k;
}

OperatorExpr GenericCasimir::realize(const QuadraticAlgebraSpec& spec, const model::ModelOperators& ops) const {
  cli::Environment env = symbol_env(spec, ops);
  OperatorExpr out;
  for (const auto& term : terms) out += term.weight.to_operator(ops, spec.z_name) * cli::parse_and_lower(term.word, &env);
  return out;
}

std::string GenericCasimir::to_string(const QuadraticAlgebraSpec& spec) const {
  std::string out;
  for (const auto& term : terms) {
    std::string spelled;
    for (char ch : term.word) {
      if (ch == 'A') spelled += spec.a_name;
      else if (ch == 'B') spelled += spec.b_name;
      else if (ch == 'C') spelled += spec.c_name;
      else spelled += ch;
    }
    if (!out.empty()) out += " + ";
    const std::string w = term.weight.to_string(spec.z_name);
    out += (term.weight.terms().size() == 1 ? w : "(" + w + ")") + "*" + spelled;
  }
  return out.empty() ? "0" : out;
}

CentralPoly central_casimir_q1() { return CentralPoly::parse("128*c1*H - 128*c1*Z - 3*c2^2 + 4*c2^2*c4"); }

CentralPoly central_casimir_q2() {
  return CentralPoly::parse("4*(4*c3-3)*(H-Z)^2 - 16*(2*c1 - 3*c1*c3 - 3*c1*c4 + 4*c1*c3*c4)");
}

}  // namespace superalg::qalg
