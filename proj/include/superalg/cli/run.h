#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superalg/cli/report.h"

namespace superalg::cli {

struct RunConfig {
  std::string command;
  /// c1..c4 as typed: integers, decimals or "num/den"; converted exactly.
  std::array<std::string, 4> couplings{"1", "0", "0.75", "0.75"};
  int nmax = 5;
  int levels = 5;
  double tol = 5e-3;
  int grid = 2000;
  OutputFormat format = OutputFormat::Json;
  std::string output;  // empty: stdout
  bool use_float = false;

  std::string method = "cartesian";  // spectrum-numeric, convergence
  bool analytic = false;             // spectrum-numeric closed-form mode
  int sub = 1;                       // structure-function
  std::optional<std::string> energy;
  bool scan = false;
  std::string expression;  // eval
  std::optional<std::string> commutator_with;
  std::vector<std::string> relations;  // audit-algebra, "lhs = rhs"
};

const std::vector<std::string>& command_names();

/// Runs one command and returns its report. Throws UsageError for invalid
/// configurations.
Report execute(const RunConfig& config);

/// execute + render + write to config.output (or `out`). Errors go to `err`.
/// Returns 0 when every check passes, 1 on audited mismatches, 2 on usage or
/// configuration errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace superalg::cli
