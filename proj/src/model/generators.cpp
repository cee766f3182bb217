#include "superalg/model/generators.h"

#include <stdexcept>

#include "superalg/model/exact_linalg.h"

namespace superalg::model {

const OperatorExpr& ModelOperators::at(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::out_of_range("unknown generator '" + name + "'");
  return it->second;
}

OperatorExpr ModelOperators::expand(const std::string& expression) const {
  return cli::parse_and_lower(expression, &ops_);
}

ModelOperators build_generators() {
  cli::Environment env;
  auto define = [&env](const std::string& name, const std::string& src) {
    env[name] = cli::parse_and_lower(src, &env);
  };
  define("H", "p1^2 + p2^2 + p3^2 + c1*(4*x1^2 + x2^2 + x3^2) + c2*x1 + c3*x2^-2 + c4*x3^-2");
  define("A1", "p1^2 + 4*c1*x1^2 + c2*x1");
  define("A2", "p2^2 + c1*x2^2 + c3*x2^-2");
  define("A3", "p3^2 + c1*x3^2 + c4*x3^-2");
  define("J1", "x2*p3 - x3*p2");
  define("J2", "x3*p1 - x1*p3");
  define("J3", "x1*p2 - x2*p1");
  define("B1", "J2*p3 + p3*J2 + 2*c1*x1*x3^2 + 1/2*c2*x3^2 - 2*c4*x1*x3^-2");
  define("B2", "J1^2 + c3*x3^2*x2^-2 + c4*x2^2*x3^-2");
  define("F", "p2*J3 + J3*p2 - 2*c1*x1*x2^2 - 1/2*c2*x2^2 + 2*c3*x1*x2^-2");
  define("C1", "[A1, B1]");
  define("C2", "[A2, B2]");
  define("D", "[B1, B2]");
  define("E1", "[A1, F]");
  define("E2", "[A2, F]");
  define("E3", "[B1, F]");
  define("E4", "[B2, F]");
  return ModelOperators(std::move(env));
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"H",  "A1", "A2", "B1", "B2", "F",  "J1", "J2",
                                              "J3", "C1", "C2", "D",  "E1", "E2", "E3", "E4"};
  return names;
}

const std::vector<std::string>& integral_names() {
  static const std::vector<std::string> names{"H", "A1", "A2", "B1", "B2", "F"};
  return names;
}

bool integrals_linearly_independent(const ModelOperators& ops) {
  std::vector<OperatorExpr> columns;
  for (const auto& name : integral_names()) columns.push_back(ops.at(name));
  return exact_rank(columns) == columns.size();
}

}  // namespace superalg::model
