#include <random>

#include "doctest.h"
#include "superalg/model/casimir.h"
#include "superalg/qalg/spectrum.h"
#include "superalg/qalg/structure_function.h"

using namespace superalg;
using namespace superalg::qalg;

namespace {

const model::ModelOperators& ops() {
  static const model::ModelOperators instance = model::build_generators();
  return instance;
}

Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

ModelParamsExact exact(long m1n, long m1d, long m2, long m3n, long m3d, long m4n, long m4d) {
  return {Rational(m1n, m1d), Rational(m2), Rational(m3n, m3d), Rational(m4n, m4d)};
}

// (c1, c2, c3, c4) = (1, 0, 3/4, 3/4)
const ModelParamsExact kBase{Rational(1), Rational(0), Rational(2), Rational(2)};

}  // namespace

TEST_CASE("couplings and derived parameters") {
  auto p = exact_params_from_couplings(Rational(1), Rational(0), Rational(3, 4), Rational(3, 4));
  REQUIRE(p.has_value());
  CHECK(p->m1 == 1);
  CHECK(p->m3 == 2);
  CHECK(p->c3() == Rational(3, 4));
  CHECK(!exact_params_from_couplings(Rational(2), Rational(0), Rational(0), Rational(0)).has_value());
  CHECK_THROWS_AS(params_from_couplings(0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(params_from_couplings(1, 0, -1, 0), std::invalid_argument);
  auto n = params_from_couplings(2, 1, 0, 2);
  CHECK(n.m1 == doctest::Approx(std::sqrt(2.0)));
  CHECK(n.m4 == doctest::Approx(3.0));
}

TEST_CASE("central polynomials") {
  CentralPoly z = CentralPoly::parse("8*H^2 - 16*H*Z - 8*c1*(4*c4-3) + 8*Z^2");
  CHECK(z.degree() == 2);
  CHECK(z == CentralPoly::parse(z.to_string()));
  CHECK(z.evaluate(kBase, Rational(10), Rational(4)) == Rational(8 * 100 - 16 * 40 - 8 * 0 + 8 * 16));
  CHECK(z.to_operator(ops(), "A2") == ops().expand("8*H^2 - 16*H*A2 - 8*c1*(4*c4-3) + 8*A2^2"));
  CHECK((CentralPoly::H() * CentralPoly::Z() - CentralPoly::parse("Z*H")).is_zero());
  CHECK_THROWS(CentralPoly::parse("p1"));
}

TEST_CASE("subalgebra specs match the model brackets") {
  CHECK(verify_spec(q1_spec(), ops()).all_exact());
  CHECK(verify_spec(q2_spec(), ops()).all_exact());
}

TEST_CASE("generic casimir") {
  GenericCasimir zero = generic_casimir(zero_spec());
  REQUIRE(zero.terms.size() == 1);
  CHECK(zero.terms[0].word == "C^2");
  CHECK(zero.realize(zero_spec(), ops()) == ops().expand("C1^2"));

  CHECK(generic_casimir(q1_spec()).realize(q1_spec(), ops()) == model::casimir_q1(ops()));
  OperatorExpr k2 = generic_casimir(q2_spec()).realize(q2_spec(), ops());
  CHECK(k2 == model::casimir_q2_rederived(ops()));
  CHECK(!(k2 - model::casimir_q2(ops())).is_zero());
  // The printed text form expands back to the same operator.
  CHECK(ops().expand(generic_casimir(q1_spec()).to_string(q1_spec())) == model::casimir_q1(ops()));
}

TEST_CASE("central casimir forms match the model") {
  CHECK(central_casimir_q1().to_operator(ops(), "A2") == model::central_form_q1(ops()));
  CHECK(central_casimir_q2().to_operator(ops(), "A1") == model::central_form_q2(ops()));
}

TEST_CASE("generic structure function shapes") {
  auto g1 = generic_structure_function(q1_spec(), central_casimir_q1(), Branch::GammaZero, kBase, Rational(10), Rational(4));
  CHECK(g1.degree() == 3);
  CHECK(g1.coefficients[4] == 0);
  CHECK(g1.eigen_a == Poly<Rational>{Rational(0), Rational(4)});
  auto g2 = generic_structure_function(q2_spec(), central_casimir_q2(), Branch::GammaZero, kBase, Rational(10), Rational(2));
  CHECK(g2.degree() == 4);
  CHECK(g2.coefficients[4] == 16);

  auto zero = generic_structure_function(zero_spec(), CentralPoly(), Branch::GammaZero, kBase, Rational(3), Rational(1));
  CHECK(zero.degree() < 0);

  CHECK_THROWS_AS(generic_structure_function(q1_spec(), central_casimir_q1(), Branch::GammaNonzero, kBase, Rational(10),
                                             Rational(4)),
                  std::invalid_argument);
}

TEST_CASE("gamma nonzero branch against an independent expansion") {
  // gamma = 1, alpha = a = 0, every central weight constant, K = 0: only three
  // terms survive, each a product of shifted linear factors.
  QuadraticAlgebraSpec s = zero_spec();
  s.gamma = Coefficient(1);
  s.epsilon = CentralPoly(2);
  s.delta = CentralPoly(3);
  s.d = CentralPoly(5);
  for (int v2 = -3; v2 <= 5; ++v2) {
    const Rational v(v2, 2);
    auto phi = generic_structure_function(s, CentralPoly(), Branch::GammaNonzero, kBase, Rational(0), Rational(0));
    const Rational w = 2 * v;
    const Rational t3 = -48 * Rational(-5) * (w - 1) * (w - 1) * (w - 1) * (w - 1) * (w + 1) * (w + 1) * (w - 3);
    const Rational t4 = 32 * Rational(2 * 9 - 4 * 5 * 2) * (w - 1) * (w - 1) * (12 * v * v - 12 * v - 1);
    const Rational inner = -2 * 3 * 2;
    const Rational t5 = 768 * inner * inner;
    const Rational t6 = -256 * (w - 1) * (w - 1) * Rational(2 * 9 + 6 * 9 * 2 + 2 * 5 * 2 - 3 * 5 * 4);
    CHECK(phi.evaluate(v) == t3 + t4 + t5 + t6);
    CHECK(poly_eval(phi.eigen_a, v) == Rational(1, 2) * (v * v - 2 - Rational(1, 4)));
  }
}

TEST_CASE("factored structure functions") {
  const Rational E(10);
  BracketForm<Rational> phi1 = build_phi1(kBase, E);
  CHECK(phi1.brackets.size() == 3);
  CHECK(poly_trim(phi1.expand(Rational(4))).size() == 4);
  BracketForm<Rational> phi2 = build_phi2(kBase, E);
  CHECK(poly_trim(phi2.expand(Rational(2))).size() == 5);

  // Roots of the n = 0 conditions at the printed u-values.
  const auto p = exact(3, 2, 5, 7, 3, 5, 2);
  const Rational e(17, 3), E2(41, 2);
  const Rational u1a = Rational(1, 2) - p.m2 * p.m2 / (64 * p.m1 * p.m1 * p.m1);
  CHECK(build_phi1(p, E2).evaluate(u1a, e) == 0);
  for (int s1 : {1, -1}) {
    const Rational u1b = (E2 + 2 * p.m1 + s1 * p.m1 * p.m4 - e) / (4 * p.m1);
    CHECK(build_phi1(p, E2).evaluate(u1b, e) == 0);
    const Rational u2a = Rational(1, 2) + s1 * p.m3 / 4;
    CHECK(build_phi2(p, E2).evaluate(u2a, e) == 0);
    CHECK(build_phi2(p, E2).evaluate(u1b, e) == 0);
  }
  // Substituting e keeps values.
  CHECK(phi1.with_e(Rational(4)).evaluate(Rational(7, 3)) == phi1.evaluate(Rational(7, 3), Rational(4)));
}

TEST_CASE("unirrep constraints for the A1/B1 pair") {
  const Rational E(10);
  auto sols = solve_unirrep_constraints(build_phi1(kBase, E), 0, phi1_family(kBase, E, 0));
  std::vector<Rational> es;
  for (const auto& s : sols) {
    es.push_back(*s.central_eigen);
    CHECK(build_phi1(kBase, E).evaluate(s.u, *s.central_eigen) == 0);
    CHECK(build_phi1(kBase, E).evaluate(s.u + 1, *s.central_eigen) == 0);
    CHECK(s.sign_choices.size() == 2);  // the first sign does not enter
  }
  std::sort(es.begin(), es.end());
  CHECK(es == std::vector<Rational>{4, 8, 12, 16});
  // Physical value from the x2 oscillator ground state m1 (2 + m3) = 4.
  auto physical = std::find_if(sols.begin(), sols.end(), [](const auto& s) { return *s.central_eigen == 4; });
  REQUIRE(physical != sols.end());
  CHECK(physical->bounded_below);
  CHECK(physical->sign_choices[0][1] == -1);
  CHECK(physical->sign_choices[0][2] == -1);
}

TEST_CASE("unirrep constraints reproduce the closed-form families") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const ModelParamsExact p{q(1 + rng() % 5, 1 + rng() % 3), Rational(static_cast<int>(rng() % 7) - 3),
                             q(1 + rng() % 9, 1 + rng() % 2), q(1 + rng() % 9, 1 + rng() % 2)};
    const Rational E = q(20 + rng() % 40, 1 + rng() % 3);
    const int n = static_cast<int>(rng() % 4);
    for (int which : {1, 2}) {
      auto phi = which == 1 ? build_phi1(p, E) : build_phi2(p, E);
      auto fam = which == 1 ? phi1_family(p, E, n) : phi2_family(p, E, n);
      auto sols = solve_unirrep_constraints(phi, n, fam);
      for (const auto& s : sols) {
        CHECK(!s.sign_choices.empty());
        CHECK(phi.evaluate(s.u, *s.central_eigen) == 0);
        CHECK(phi.evaluate(s.u + n + 1, *s.central_eigen) == 0);
        for (int k = 1; k <= n; ++k) CHECK(phi.evaluate(s.u + k, *s.central_eigen) > 0);
      }
    }
  }
}

TEST_CASE("positivity at p = 3 on some branch") {
  const Rational E(22);
  for (int which : {1, 2}) {
    auto phi = which == 1 ? build_phi1(kBase, E) : build_phi2(kBase, E);
    auto sols = solve_unirrep_constraints(phi, 3);
    CHECK(!sols.empty());
    for (const auto& s : sols) CHECK(s.positivity_verified);
  }
}

TEST_CASE("coinciding brackets are deduplicated") {
  // m4 = 0 makes the first two brackets of phi1 identical.
  const ModelParamsExact p{Rational(1), Rational(0), Rational(2), Rational(0)};
  auto sols = solve_unirrep_constraints(build_phi1(p, Rational(10)), 0, phi1_family(p, Rational(10), 0));
  CHECK(sols.size() == 2);
}

TEST_CASE("structure functions with a given central eigenvalue") {
  // e substituted: only u is solved and the bracket pair must agree.
  auto phi = build_phi2(kBase, Rational(10)).with_e(Rational(2));
  auto sols = solve_unirrep_constraints(phi, 0);
  bool found = false;
  for (const auto& s : sols) {
    CHECK(!s.central_eigen.has_value());
    found = found || s.u == 1;
  }
  CHECK(found);
}

TEST_CASE("floating-point mode") {
  const ModelParamsNumeric p = params_from_couplings(2.0, 1.0, 0.3, 0.7);
  const double E = 30.0;
  auto sols = solve_unirrep_constraints(build_phi2(p, E), 2, phi2_family(p, E, 2));
  CHECK(!sols.empty());
  for (const auto& s : sols) {
    CHECK(!s.sign_choices.empty());
    CHECK(std::abs(build_phi2(p, E).evaluate(s.u, *s.central_eigen)) < 1e-9);
  }
}

TEST_CASE("proportionality of generic and factored structure functions") {
  for (Rational e : {Rational(4), Rational(8), Rational(13, 2)}) {
    auto g1 = generic_structure_function(q1_spec(), central_casimir_q1(), Branch::GammaZero, kBase, Rational(10), e);
    auto a1 = proportionality_audit(g1, build_phi1(kBase, Rational(10)), e);
    CHECK(a1.proportional);
    CHECK(a1.ratio == doctest::Approx(16));
    auto g2 = generic_structure_function(q2_spec(), central_casimir_q2(), Branch::GammaZero, kBase, Rational(10), e);
    auto a2 = proportionality_audit(g2, build_phi2(kBase, Rational(10)), e);
    CHECK(a2.proportional);
  }
}

TEST_CASE("algebraic spectrum oracles") {
  struct Row {
    double c1, c2, c3, c4, ground, spacing;
  };
  for (const Row& r : {Row{1, 0, 0.75, 0.75, 10, 4}, Row{1, 4, 0.75, 0.75, 9, 4}, Row{4, 0, 0, 0, 16, 8}}) {
    auto levels = algebraic_spectrum(params_from_couplings(r.c1, r.c2, r.c3, r.c4), 5);
    REQUIRE(levels.size() == 6);
    for (int n = 0; n <= 5; ++n) {
      CHECK(levels[n].E == doctest::Approx(r.ground + r.spacing * n).epsilon(1e-14));
      CHECK(levels[n].multiplicity() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
      for (const auto& q : levels[n].tuples) {
        CHECK(q[0] - q[1] == q[2] - q[3]);
        CHECK((q[2] >= 0 && q[2] <= q[0] && q[3] >= 0 && q[3] <= q[1]));
      }
    }
  }
  // Exact: E_N = 4N + 10 at (1, 0, 3/4, 3/4).
  for (int N = 0; N <= 5; ++N) CHECK(algebraic_energy(kBase, {N, 0, 0, N}) == 4 * N + 10);
}

TEST_CASE("ground energy and monotonicity") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const double c1 = 0.1 + (rng() % 100) / 10.0, c2 = (static_cast<int>(rng() % 100) - 50) / 10.0;
    const double c3 = (rng() % 100) / 10.0 - 0.25, c4 = (rng() % 100) / 10.0 - 0.25;
    auto p = params_from_couplings(c1, c2, c3, c4);
    auto levels = algebraic_spectrum(p, 4);
    CHECK(levels[0].E == doctest::Approx(p.m1 * (6 + p.m3 + p.m4) - p.m2 * p.m2 / (16 * p.m1 * p.m1)));
    for (std::size_t k = 1; k < levels.size(); ++k) {
      CHECK(levels[k].E > levels[k - 1].E);
      CHECK(levels[k].E - levels[k - 1].E == doctest::Approx(4 * p.m1));
    }
  }
}

TEST_CASE("spectrum serialization") {
  auto levels = algebraic_spectrum(params_from_couplings(1, 0, 0.75, 0.75), 1);
  auto j = spectrum_to_json(levels);
  CHECK(j.size() == 2);
  CHECK(j[0]["E"] == 10.0);
  CHECK(j[1]["multiplicity"] == 3);
  CHECK(j[0]["tuples"][0] == nlohmann::json::array({0, 0, 0, 0}));
  std::string csv = spectrum_to_csv(levels);
  CHECK(csv.rfind("N,E,multiplicity,tuples\n0,10,1,0 0 0 0\n", 0) == 0);
}

TEST_CASE("eigenvalues of A1 and A2") {
  auto values = eigen_operator_values(kBase);
  CHECK(values.e_a1(0) == 2);
  CHECK(values.e_a2(0, 1) == 4);
  // H = A1 + A2 + A3 with A3 = m1 (4l + 2 + m4): ground total 2 + 4 + 4 = 10.
  const Rational e_a3 = kBase.m1 * (2 + kBase.m4);
  CHECK(values.e_a1(0) + values.e_a2(0, 1) + e_a3 == algebraic_energy(kBase, {0, 0, 0, 0}));
  CHECK(values.e_a1_alt(0, Rational(10), Rational(4), -1) == 2 + 10 - 2 - 4);
  CHECK(values.e_a2_alt(1, Rational(10), Rational(2), 1) == 6 + 10 + 2 - 2);
}

TEST_CASE("mean-value identity") {
  CHECK(mean_value_identity_holds(kBase));
  CHECK(mean_value_identity_holds(exact(3, 2, -5, 7, 3, 1, 4)));
  CHECK(mean_value_identity_holds(params_from_couplings(2.5, 1.5, 0.1, 3.0)));
  // On admissible tuples the two partial energies coincide.
  auto e1 = energy_from_a1(kBase), e2 = energy_from_a2(kBase);
  const QuantumNumbers q{3, 1, 2, 0};
  Rational v1 = e1.constant, v2 = e2.constant;
  for (int k = 0; k < 4; ++k) {
    v1 += e1.slope[k] * q[k];
    v2 += e2.slope[k] * q[k];
  }
  CHECK(v1 == v2);
  CHECK(v1 == algebraic_energy(kBase, q));
}
