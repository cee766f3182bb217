#include <iostream>

#include "CLI11.hpp"
#include "superalg/cli/run.h"

using superalg::cli::OutputFormat;
using superalg::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetry-algebra and spectrum checks for the four-parameter nondegenerate 3D system"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json";
  app.add_option("--c1", config.couplings[0], "Coupling c1 (integer, decimal or num/den)");
  app.add_option("--c2", config.couplings[1], "Coupling c2");
  app.add_option("--c3", config.couplings[2], "Coupling c3");
  app.add_option("--c4", config.couplings[3], "Coupling c4");
  app.add_option("--nmax", config.nmax, "Highest level index (or representation size p)");
  app.add_option("--levels", config.levels, "Number of levels to compare");
  app.add_option("--tol", config.tol, "Agreement tolerance for compare");
  app.add_option("--grid", config.grid, "Finite-difference subintervals");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", config.output, "Write the report to this file");
  app.add_flag("--float", config.use_float, "Double precision where exact arithmetic is not required");

  app.add_subcommand("verify-zero", "Vanishing brackets of the integrals");
  auto* audit = app.add_subcommand("audit-algebra", "Printed quadratic relations and their closure fits");
  audit->add_option("--relation", config.relations, "Audit 'lhs = rhs' instead of the built-in relations");
  app.add_subcommand("casimir", "Casimir commutation and central forms");
  app.add_subcommand("spectrum-algebraic", "Spectrum from the representation constraints");
  auto* numeric = app.add_subcommand("spectrum-numeric", "Spectrum from separated 1D eigenproblems");
  numeric->add_option("--method", config.method, "cartesian or cylindrical")
      ->check(CLI::IsMember({"cartesian", "cylindrical"}));
  numeric->add_flag("--analytic", config.analytic, "Closed-form 1D eigenvalues instead of finite differences");
  app.add_subcommand("compare", "Algebraic, Cartesian and cylindrical spectra side by side");
  auto* sf = app.add_subcommand("structure-function", "Deformed-oscillator structure functions and unirreps");
  sf->add_option("--sub", config.sub, "Subalgebra 1 (A1, B1) or 2 (A2, B2)")->check(CLI::IsMember({1, 2}));
  sf->add_option("--E", config.energy, "Energy (default: ground level)");
  sf->add_flag("--scan", config.scan, "All representation sizes p = 0..nmax");
  auto* eval = app.add_subcommand("eval", "Normal-ordered form of an operator expression");
  eval->add_option("expression", config.expression, "Expression over x1..x3, p1..p3, c1..c4 and generator names")
      ->required();
  eval->add_option("--commutator-with", config.commutator_with, "Return [expression, other]");
  app.add_subcommand("equivalence-check", "Separated-coordinate energy formulas against the algebraic one");
  auto* conv = app.add_subcommand("convergence", "Grid-doubling study of a separated 1D problem");
  conv->add_option("--method", config.method, "axial, radial or angular")
      ->check(CLI::IsMember({"axial", "radial", "angular"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return superalg::cli::kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "convergence" && conv->count("--method") == 0) config.method = "axial";
  config.format = *superalg::cli::parse_format(format);
  return superalg::cli::run(config, std::cout, std::cerr);
}
