#include "superalg/cli/run.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "superalg/cli/parser.h"
#include "superalg/model/casimir.h"
#include "superalg/numeric/equivalence.h"
#include "superalg/numeric/separated.h"
#include "superalg/qalg/spectrum.h"
#include "superalg/qalg/structure_function.h"

namespace superalg::cli {

namespace {

using qalg::ModelParams;
using qalg::ModelParamsExact;
using qalg::ModelParamsNumeric;

const model::ModelOperators& ops() {
  static const model::ModelOperators instance = model::build_generators();
  return instance;
}

std::array<Rational, 4> exact_couplings(const RunConfig& config) {
  std::array<Rational, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    try {
      out[k] = parse_rational(config.couplings[k]);
    } catch (const std::invalid_argument& e) {
      throw UsageError("--c" + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return out;
}

ModelParamsNumeric numeric_params(const RunConfig& config) {
  const auto c = exact_couplings(config);
  try {
    return qalg::params_from_couplings(c[0].get_d(), c[1].get_d(), c[2].get_d(), c[3].get_d());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::optional<ModelParamsExact> exact_params(const RunConfig& config) {
  const auto c = exact_couplings(config);
  numeric_params(config);  // validation
  return qalg::exact_params_from_couplings(c[0], c[1], c[2], c[3]);
}

nlohmann::json couplings_json(const RunConfig& config) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : exact_couplings(config)) out.push_back(rational_text(c));
  return out;
}

void require_nonnegative(int value, const std::string& flag) {
  if (value < 0) throw UsageError(flag + " must be non-negative");
}

nlohmann::json value_json(const Rational& q) { return rational_text(q); }
nlohmann::json value_json(double x) { return x; }
std::string value_text(const Rational& q) { return rational_text(q); }
std::string value_text(double x) { return format_double(x); }

std::string audit_text(const model::AuditReport& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << e.relation_id << ": " << e.verdict();
    if (e.corrected_rhs) os << "; closure fit = " << *e.corrected_rhs;
    if (e.note) os << " (" << *e.note << ")";
    os << "\n";
  }
  return os.str();
}

std::size_t closure_failures(const model::AuditReport& report) {
  std::size_t n = 0;
  for (const auto& e : report.entries)
    if (!e.exact() && !e.corrected_rhs) ++n;
  return n;
}

Report verify_zero(const RunConfig&) {
  const model::AuditReport audit = model::verify_zero_relations(ops());
  Report r;
  r.payload = {{"relations", audit.entries.size()}, {"failed", audit.mismatches()}, {"results", audit.to_json()}};
  r.text = std::to_string(audit.entries.size()) + " relations, " + std::to_string(audit.mismatches()) + " failed\n" +
           audit_text(audit);
  r.exit_code = audit.all_exact() ? kExitOk : kExitMismatch;
  return r;
}

model::RelationSpec parse_relation(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("relation '" + text + "' must read 'lhs = rhs'");
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  model::RelationSpec rel{trim(text.substr(0, eq)), trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
  if (rel.lhs.empty() || rel.rhs.empty()) throw UsageError("relation '" + text + "' has an empty side");
  return rel;
}

Report audit_algebra(const RunConfig& config) {
  model::AuditReport audit;
  if (config.relations.empty()) {
    audit = model::audit_symmetry_algebra(ops());
  } else {
    audit.title = "relations";
    for (const auto& text : config.relations) audit.entries.push_back(model::audit_relation(parse_relation(text), ops()));
  }
  Report r;
  r.payload = {{"relations", audit.entries.size()},
               {"mismatches", audit.mismatches()},
               {"closure_failures", closure_failures(audit)},
               {"results", audit.to_json()}};
  r.text = std::to_string(audit.entries.size()) + " relations, " + std::to_string(audit.mismatches()) +
           " printed mismatches, " + std::to_string(closure_failures(audit)) + " without a closure fit\n" +
           audit_text(audit);
  r.exit_code = audit.all_exact() ? kExitOk : kExitMismatch;
  return r;
}

Report casimir(const RunConfig&) {
  const model::AuditReport commutation = model::casimir_commutation_check(ops());
  const model::AuditReport central = model::casimir_central_check(ops());
  const std::size_t mismatches = commutation.mismatches() + central.mismatches();
  Report r;
  r.payload = {{"commutation", commutation.to_json()}, {"central", central.to_json()}, {"mismatches", mismatches}};
  r.text = "commutation\n" + audit_text(commutation) + "central forms\n" + audit_text(central);
  r.exit_code = mismatches == 0 ? kExitOk : kExitMismatch;
  return r;
}

Report spectrum_algebraic(const RunConfig& config) {
  require_nonnegative(config.nmax, "--nmax");
  const auto levels = qalg::algebraic_spectrum(numeric_params(config), config.nmax);
  Report r;
  r.payload = {{"couplings", couplings_json(config)}, {"levels", qalg::spectrum_to_json(levels)}};
  r.csv = qalg::spectrum_to_csv(levels);
  std::ostringstream os;
  for (const auto& level : levels)
    os << "N=" << level.N << " E=" << format_double(level.E) << " multiplicity=" << level.multiplicity() << "\n";
  r.text = os.str();
  return r;
}

numeric::SpectrumOptions spectrum_options(const RunConfig& config, bool analytic) {
  numeric::SpectrumOptions options;
  options.gridPoints = config.grid;
  options.mode = analytic ? numeric::SolveMode::Analytic : numeric::SolveMode::Numeric;
  if (!analytic && config.grid < 64) throw UsageError("--grid must be at least 64");
  return options;
}

std::vector<numeric::NumericLevel> separated_levels(const std::string& method, const ModelParamsNumeric& p, int nmax,
                                                    const numeric::SpectrumOptions& options) {
  try {
    if (method == "cartesian") return numeric::cartesian_spectrum(p, nmax, options);
    if (method == "cylindrical") return numeric::cylindrical_spectrum(p, nmax, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("--method must be cartesian or cylindrical");
}

Report spectrum_numeric(const RunConfig& config) {
  require_nonnegative(config.nmax, "--nmax");
  const auto levels =
      separated_levels(config.method, numeric_params(config), config.nmax, spectrum_options(config, config.analytic));
  Report r;
  r.payload = {{"couplings", couplings_json(config)},
               {"method", config.method},
               {"mode", config.analytic ? "analytic" : "numeric"},
               {"grid", config.grid},
               {"levels", numeric::levels_to_json(levels)}};
  std::ostringstream csv, text;
  csv << "N,E,error,multiplicity,tuples\n";
  for (const auto& level : levels) {
    csv << level.N << "," << format_double(level.E) << "," << format_double(level.error) << "," << level.multiplicity()
        << ",";
    for (std::size_t k = 0; k < level.states.size(); ++k) {
      const auto& q = level.states[k].quantum;
      csv << (k ? ";" : "") << q[0] << " " << q[1] << " " << q[2];
    }
    csv << "\n";
    text << "N=" << level.N << " E=" << format_double(level.E) << " +- " << format_double(level.error)
         << " multiplicity=" << level.multiplicity() << "\n";
  }
  r.csv = csv.str();
  r.text = text.str();
  return r;
}

Report compare(const RunConfig& config) {
  if (config.levels < 1) throw UsageError("--levels must be positive");
  if (!(config.tol > 0)) throw UsageError("--tol must be positive");
  const ModelParamsNumeric p = numeric_params(config);
  const int nmax = config.levels - 1;
  const auto algebraic = qalg::algebraic_spectrum(p, nmax);
  const auto options = spectrum_options(config, false);
  const auto cart = separated_levels("cartesian", p, nmax, options);
  const auto cyl = separated_levels("cylindrical", p, nmax, options);

  double max_delta = 0;
  bool multiplicities_agree = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv, text;
  csv << "N,algebraic,cartesian,cylindrical,delta,multiplicity\n";
  for (int n = 0; n < config.levels; ++n) {
    const double delta = std::max(std::abs(cart[n].E - algebraic[n].E), std::abs(cyl[n].E - algebraic[n].E));
    const bool same = cart[n].multiplicity() == algebraic[n].multiplicity() &&
                      cyl[n].multiplicity() == algebraic[n].multiplicity();
    max_delta = std::max(max_delta, delta);
    multiplicities_agree = multiplicities_agree && same;
    rows.push_back({{"N", n},
                    {"algebraic", algebraic[n].E},
                    {"cartesian", cart[n].E},
                    {"cylindrical", cyl[n].E},
                    {"delta", delta},
                    {"multiplicity", algebraic[n].multiplicity()},
                    {"multiplicity_agrees", same}});
    csv << n << "," << format_double(algebraic[n].E) << "," << format_double(cart[n].E) << ","
        << format_double(cyl[n].E) << "," << format_double(delta) << "," << algebraic[n].multiplicity() << "\n";
    text << "N=" << n << "  algebraic " << format_double(algebraic[n].E) << "  cartesian " << format_double(cart[n].E)
         << "  cylindrical " << format_double(cyl[n].E) << "  |delta| " << format_double(delta)
         << (same ? "" : "  multiplicity differs") << "\n";
  }
  const bool agree = max_delta <= config.tol && multiplicities_agree;
  text << "max |delta| = " << format_double(max_delta) << (agree ? " (within " : " (exceeds ") << config.tol << ")\n";

  Report r;
  r.payload = {{"couplings", couplings_json(config)}, {"grid", config.grid}, {"tol", config.tol},
               {"max_delta", max_delta}, {"agree", agree},       {"rows", rows}};
  r.csv = csv.str();
  r.text = text.str();
  r.exit_code = agree ? kExitOk : kExitMismatch;
  return r;
}

template <class T>
Report structure_function_report(const ModelParams<T>& p, const T& E, const RunConfig& config) {
  const int p_lo = config.scan ? 0 : config.nmax, p_hi = config.nmax;
  const auto phi = config.sub == 1 ? qalg::build_phi1(p, E) : qalg::build_phi2(p, E);

  nlohmann::json brackets = nlohmann::json::array();
  for (const auto& b : phi.brackets)
    brackets.push_back({{"constant", value_json(b.constant)}, {"nu", value_json(b.nu)}, {"e", value_json(b.e)}});

  std::ostringstream text;
  text << "phi" << config.sub << " at E = " << value_text(E) << "\n";
  nlohmann::json reps = nlohmann::json::array();
  for (int dim = p_lo; dim <= p_hi; ++dim) {
    const auto family = config.sub == 1 ? qalg::phi1_family(p, E, dim) : qalg::phi2_family(p, E, dim);
    const auto solutions = qalg::solve_unirrep_constraints(phi, dim, family);
    nlohmann::json list = nlohmann::json::array();
    text << "p=" << dim << ": " << solutions.size() << " solutions\n";
    for (const auto& s : solutions) {
      nlohmann::json row{{"u", value_json(s.u)},
                         {"dimension", s.dimension},
                         {"sign_choices", s.sign_choices},
                         {"positive", s.positivity_verified},
                         {"bounded_below", s.bounded_below}};
      if (s.central_eigen) row["e"] = value_json(*s.central_eigen);
      list.push_back(std::move(row));
      text << "  u=" << value_text(s.u);
      if (s.central_eigen) text << " e=" << value_text(*s.central_eigen);
      text << (s.bounded_below ? " bounded-below" : "") << "\n";
    }
    reps.push_back({{"p", dim}, {"solutions", list}});
  }

  Report r;
  r.payload = {{"couplings", couplings_json(config)},
               {"subalgebra", config.sub},
               {"exact", qalg::Scalar<T>::exact},
               {"E", value_json(E)},
               {"prefactor", value_json(phi.prefactor)},
               {"brackets", brackets},
               {"representations", reps}};
  r.text = text.str();
  return r;
}

Report structure_function(const RunConfig& config) {
  if (config.sub != 1 && config.sub != 2) throw UsageError("--sub must be 1 or 2");
  require_nonnegative(config.nmax, "--nmax");
  if (config.use_float) {
    const ModelParamsNumeric p = numeric_params(config);
    double E = qalg::algebraic_energy(p, {0, 0, 0, 0});
    if (config.energy) {
      try {
        E = parse_rational(*config.energy).get_d();
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--E: ") + e.what());
      }
    }
    return structure_function_report(p, E, config);
  }
  const auto p = exact_params(config);
  if (!p) throw UsageError("sqrt(c1), sqrt(4 c3 + 1) or sqrt(4 c4 + 1) is irrational; pass --float");
  Rational E = qalg::algebraic_energy(*p, {0, 0, 0, 0});
  if (config.energy) {
    try {
      E = parse_rational(*config.energy);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--E: ") + e.what());
    }
  }
  return structure_function_report(*p, E, config);
}

Report eval(const RunConfig& config) {
  if (config.expression.empty()) throw UsageError("eval needs an expression");
  OperatorExpr result = ops().expand(config.expression);
  if (config.commutator_with) result = commutator(result, ops().expand(*config.commutator_with));
  Report r;
  r.payload = {{"expression", config.expression}, {"result", result.to_string()}, {"zero", result.is_zero()}};
  if (config.commutator_with) r.payload["commutator_with"] = *config.commutator_with;
  r.text = result.to_string() + "\n";
  return r;
}

Report equivalence_check(const RunConfig&) {
  using numeric::Identification;
  const auto report =
      numeric::formula_equivalence(numeric::default_equivalence_grid(), numeric::default_equivalence_tuples());
  Report r;
  r.payload = report.to_json();
  r.payload["literal_holds"] = report.holds(Identification::Literal);
  r.payload["corrected_holds"] = report.holds(Identification::Corrected);
  std::ostringstream text;
  text << report.points << " parameter points x " << report.tuples << " tuples\n";
  for (const auto& c : report.checks) {
    text << c.formula << " (" << numeric::to_string(c.identification) << "): " << c.mismatches << "/" << c.cases
         << " mismatches, " << c.parity_flagged << " inadmissible labels\n";
    for (const auto& ex : c.examples) text << "  " << ex << "\n";
  }
  r.text = text.str();
  r.exit_code = report.holds(Identification::Literal) ? kExitOk : kExitMismatch;
  return r;
}

Report convergence(const RunConfig& config) {
  const ModelParamsNumeric p = numeric_params(config);
  if (config.grid < 64) throw UsageError("--grid must be at least 64");
  numeric::NumericProblem problem;
  if (config.method == "axial") {
    problem = numeric::axial_problem(p, 1, config.grid);
  } else if (config.method == "radial") {
    problem = numeric::radial_problem(p, numeric::angular_constant(p, 0), 1, config.grid);
  } else if (config.method == "angular") {
    problem = numeric::angular_problem(p, 1, config.grid);
  } else {
    throw UsageError("--method must be axial, radial or angular for convergence");
  }
  const int g = config.grid;
  const auto rows = numeric::convergence_study(problem, 0, {g, 2 * g, 4 * g, 8 * g});
  nlohmann::json list = nlohmann::json::array(), factors = nlohmann::json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    list.push_back({{"grid", rows[k].grid}, {"eigenvalue", rows[k].eigenvalue}, {"error", rows[k].error}});
    if (k > 0) factors.push_back(rows[k - 1].error / rows[k].error);
  }
  Report r;
  r.payload = {{"couplings", couplings_json(config)}, {"problem", config.method}, {"rows", list}, {"factors", factors}};
  r.csv = numeric::convergence_to_csv(rows);
  r.text = *r.csv;
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& commands() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> table{
      {"verify-zero", verify_zero},
      {"audit-algebra", audit_algebra},
      {"casimir", casimir},
      {"spectrum-algebraic", spectrum_algebraic},
      {"spectrum-numeric", spectrum_numeric},
      {"compare", compare},
      {"structure-function", structure_function},
      {"eval", eval},
      {"equivalence-check", equivalence_check},
      {"convergence", convergence},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : commands()) out.push_back(name);
    return out;
  }();
  return names;
}

Report execute(const RunConfig& config) {
  const auto it = commands().find(config.command);
  if (it == commands().end()) throw UsageError("unknown command '" + config.command + "'");
  try {
    return it->second(config);
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  } catch (const DegreeLimitError& e) {
    throw UsageError(e.what());
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Report report = execute(config);
    const std::string rendered = render(report, config.command, config.format);
    if (config.output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw UsageError("cannot write " + config.output);
      file << rendered;
    }
    return report.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace superalg::cli
