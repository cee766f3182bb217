#include "superalg/numeric/separated.h"

#include <algorithm>
#include <cmath>
#include <future>

namespace superalg::numeric {

namespace {

struct AxisValues {
  std::vector<double> values;
  std::vector<double> errors;
};

AxisValues solve_axis(const NumericProblem& problem, int count) {
  EigResult r = fd_eigensolve(problem, count);
  return {std::move(r.eigenvalues), std::move(r.errorEstimates)};
}

template <class F>
AxisValues analytic_axis(int count, F value) {
  AxisValues out;
  for (int i = 0; i < count; ++i) {
    out.values.push_back(value(i));
    out.errors.push_back(0.0);
  }
  return out;
}

void check_inputs(const ModelParamsNumeric& p, int nmax, const SpectrumOptions& options) {
  if (!(p.m1 > 0)) throw std::invalid_argument("separated spectra need c1 > 0");
  if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
  if (options.mode == SolveMode::Numeric && options.gridPoints / 4 < nmax + 2)
    throw std::invalid_argument("gridPoints too small for the requested number of levels");
}

std::vector<NumericLevel> assemble_levels(std::vector<SeparatedState> states, int count, int wanted, double tol) {
  auto tolerance = [tol](double e) { return tol * std::max(1.0, std::abs(e)); };
  // Eigenvalues grow with every index, so any state outside the index box lies
  // at or above the cheapest state on its outer face.
  double cutoff = HUGE_VAL;
  for (const auto& s : states)
    if (*std::max_element(s.quantum.begin(), s.quantum.end()) == count - 1) cutoff = std::min(cutoff, s.E);

  std::sort(states.begin(), states.end(), [](const auto& a, const auto& b) { return a.E < b.E; });
  std::vector<NumericLevel> levels;
  for (auto& s : states) {
    if (s.E >= cutoff - tolerance(cutoff)) break;
    if (levels.empty() || s.E - levels.back().states.front().E > tolerance(s.E)) {
      if (static_cast<int>(levels.size()) == wanted) break;
      levels.emplace_back();
      levels.back().N = static_cast<int>(levels.size()) - 1;
    }
    levels.back().states.push_back(std::move(s));
  }
  if (static_cast<int>(levels.size()) < wanted) throw std::runtime_error("could not resolve the requested levels");
  for (auto& level : levels) {
    double sum = 0;
    for (const auto& s : level.states) {
      sum += s.E;
      level.error = std::max(level.error, s.error);
    }
    level.E = sum / static_cast<double>(level.states.size());
  }
  return levels;
}

}  // namespace

NumericProblem axial_problem(const ModelParamsNumeric& p, int k, int gridPoints) {
  return make_problem(ShiftedOscillator{p.c1(), p.c2()}, k, gridPoints);
}

NumericProblem radial_problem(const ModelParamsNumeric& p, double A, int k, int gridPoints) {
  // G = rho^(-1/2) g removes the first-derivative term and shifts the barrier.
  return make_problem(SingularOscillator{p.c1(), A - 0.25}, k, gridPoints);
}

NumericProblem angular_problem(const ModelParamsNumeric& p, int k, int gridPoints) {
  return make_problem(PoeschlTeller{p.c3(), p.c4()}, k, gridPoints);
}

NumericProblem cartesian_problem(const ModelParamsNumeric& p, int axis, int k, int gridPoints) {
  if (axis != 2 && axis != 3) throw std::invalid_argument("cartesian barrier axis must be 2 or 3");
  return make_problem(SingularOscillator{p.c1(), axis == 2 ? p.c3() : p.c4()}, k, gridPoints);
}

std::vector<NumericLevel> cylindrical_spectrum(const ModelParamsNumeric& params, int nmax,
                                               const SpectrumOptions& options) {
  check_inputs(params, nmax, options);
  const int count = nmax + 2;
  const int grid = options.gridPoints;

  AxisValues axial, angular;
  std::vector<AxisValues> radial(static_cast<std::size_t>(count));
  if (options.mode == SolveMode::Analytic) {
    axial = analytic_axis(count, [&](int j) { return axial_eigenvalue(params, j); });
    angular = analytic_axis(count, [&](int n) { return angular_constant(params, n); });
    for (int n = 0; n < count; ++n)
      radial[n] = analytic_axis(count, [&](int k) { return radial_eigenvalue(params, k, n); });
  } else {
    auto axial_job = std::async(std::launch::async, [&] { return solve_axis(axial_problem(params, count, grid), count); });
    angular = solve_axis(angular_problem(params, count, grid), count);
    std::vector<std::future<AxisValues>> jobs;
    for (int n = 0; n < count; ++n) {
      const double A = angular.values[n];
      jobs.push_back(std::async(std::launch::async,
                                [&params, A, count, grid] { return solve_axis(radial_problem(params, A, count, grid), count); }));
    }
    for (int n = 0; n < count; ++n) radial[n] = jobs[n].get();
    axial = axial_job.get();
  }

  std::vector<SeparatedState> states;
  for (int j = 0; j < count; ++j)
    for (int k = 0; k < count; ++k)
      for (int n = 0; n < count; ++n) {
        SeparatedState s;
        s.quantum = {j, k, n};
        s.E = axial.values[j] + radial[n].values[k];
        s.error = axial.errors[j] + radial[n].errors[k] + angular.errors[n];
        s.separation = SeparationConstants{angular.values[n], -radial[n].values[k]};
        states.push_back(s);
      }
  return assemble_levels(std::move(states), count, nmax + 1, options.cluster_tol);
}

std::vector<NumericLevel> cartesian_spectrum(const ModelParamsNumeric& params, int nmax,
                                             const SpectrumOptions& options) {
  check_inputs(params, nmax, options);
  const int count = nmax + 2;
  const int grid = options.gridPoints;

  std::array<AxisValues, 3> axes;
  if (options.mode == SolveMode::Analytic) {
    axes[0] = analytic_axis(count, [&](int j) { return axial_eigenvalue(params, j); });
    axes[1] = analytic_axis(count, [&](int k) { return half_line_eigenvalue(params.m1, params.m3, k); });
    axes[2] = analytic_axis(count, [&](int l) { return half_line_eigenvalue(params.m1, params.m4, l); });
  } else {
    auto x1 = std::async(std::launch::async, [&] { return solve_axis(axial_problem(params, count, grid), count); });
    auto x2 = std::async(std::launch::async, [&] { return solve_axis(cartesian_problem(params, 2, count, grid), count); });
    axes[2] = solve_axis(cartesian_problem(params, 3, count, grid), count);
    axes[0] = x1.get();
    axes[1] = x2.get();
  }

  std::vector<SeparatedState> states;
  for (int j = 0; j < count; ++j)
    for (int k = 0; k < count; ++k)
      for (int l = 0; l < count; ++l) {
        SeparatedState s;
        s.quantum = {j, k, l};
        s.E = axes[0].values[j] + axes[1].values[k] + axes[2].values[l];
        s.error = axes[0].errors[j] + axes[1].errors[k] + axes[2].errors[l];
        states.push_back(s);
      }
  return assemble_levels(std::move(states), count, nmax + 1, options.cluster_tol);
}

nlohmann::json levels_to_json(const std::vector<NumericLevel>& levels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& level : levels) {
    nlohmann::json tuples = nlohmann::json::array();
    for (const auto& s : level.states) tuples.push_back(s.quantum);
    out.push_back({{"E", level.E},
                   {"N", level.N},
                   {"error", level.error},
                   {"tuples", tuples},
                   {"multiplicity", level.multiplicity()}});
  }
  return out;
}

}  // namespace superalg::numeric
