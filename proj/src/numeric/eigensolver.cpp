#include "superalg/numeric/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace superalg::numeric {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kBisectionTol = 1e-10;
constexpr int kMinGrid = 64;

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};

// Scaled matrix h^2 T: diagonal 2 + h^2 V(x_i), off-diagonal -1.
class ScaledTridiagonal {
 public:
  ScaledTridiagonal(const NumericProblem& problem, int grid) {
    const double h = (problem.hi - problem.lo) / grid;
    h2_ = h * h;
    diag_.resize(static_cast<std::size_t>(grid - 1));
    for (int i = 1; i < grid; ++i) diag_[i - 1] = 2.0 + h2_ * evaluate_potential(problem.potential, problem.lo + i * h);
  }

  double h2() const { return h2_; }
  double lower_bound() const { return *std::min_element(diag_.begin(), diag_.end()) - 2.0; }

  // Number of eigenvalues strictly below x (signs of the LDL^T pivots).
  int count_below(double x) const {
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      q = diag_[i] - x - (i == 0 ? 0.0 : 1.0 / q);
      if (q == 0.0) q = -std::numeric_limits<double>::min();
      if (q < 0.0) ++count;
    }
    return count;
  }

 private:
  double h2_ = 0;
  std::vector<double> diag_;
};

// Smallest r >= start with f(r) >= target, refined to within 1e-9 relative.
template <class F>
double reach(F f, double start, double target) {
  double lo = start;
  double hi = std::max(start, 1.0);
  while (f(hi) < target) {
    lo = hi;
    hi *= 2;
    if (hi > 1e12) throw std::runtime_error("potential does not reach the requested level");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-9 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return hi;
}

bool contains_lattice_point(double lo, double hi, double offset) {
  return std::ceil((lo - offset) / std::numbers::pi) <= std::floor((hi - offset) / std::numbers::pi);
}

}  // namespace

double evaluate_potential(const Potential& v, double x) {
  return std::visit(Overloaded{
                        [x](const ShiftedOscillator& p) { return 4 * p.c1 * x * x + p.c2 * x; },
                        [x](const SingularOscillator& p) { return p.omega2 * x * x + (p.alpha == 0 ? 0 : p.alpha / (x * x)); },
                        [x](const PoeschlTeller& p) {
                          const double s = std::sin(x), c = std::cos(x);
                          return (p.c3 == 0 ? 0 : p.c3 / (s * s)) + (p.c4 == 0 ? 0 : p.c4 / (c * c));
                        },
                    },
                    v);
}

std::string potential_name(const Potential& v) {
  return std::visit(Overloaded{
                        [](const ShiftedOscillator&) { return std::string("shifted-oscillator"); },
                        [](const SingularOscillator&) { return std::string("singular-oscillator"); },
                        [](const PoeschlTeller&) { return std::string("poeschl-teller"); },
                    },
                    v);
}

void validate(const NumericProblem& problem) {
  if (problem.gridPoints < kMinGrid) throw std::invalid_argument("gridPoints must be at least 64");
  if (!(problem.lo < problem.hi) || !std::isfinite(problem.lo) || !std::isfinite(problem.hi))
    throw std::invalid_argument("empty or non-finite domain");
  const bool singular = std::visit(
      Overloaded{
          [](const ShiftedOscillator&) { return false; },
          [&](const SingularOscillator& p) { return p.alpha != 0 && problem.lo <= 0 && problem.hi >= 0; },
          [&](const PoeschlTeller& p) {
            return (p.c3 != 0 && contains_lattice_point(problem.lo, problem.hi, 0)) ||
                   (p.c4 != 0 && contains_lattice_point(problem.lo, problem.hi, kHalfPi));
          },
      },
      problem.potential);
  if (singular) throw std::invalid_argument("domain contains a singular point of the " + potential_name(problem.potential));
}

std::vector<double> fd_eigenvalues(const NumericProblem& problem, int gridPoints, int k) {
  if (k < 1 || k > gridPoints / 4) throw std::invalid_argument("requested eigenvalue count exceeds gridPoints / 4");
  const ScaledTridiagonal t(problem, gridPoints);
  const double tol = kBisectionTol * t.h2();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k));
  double floor_value = t.lower_bound();
  for (int j = 0; j < k; ++j) {
    double lo = floor_value;
    double step = std::max(1e-3, std::abs(lo)) * 1e-2;
    double hi = lo + step;
    while (t.count_below(hi) < j + 1) {
      lo = hi;
      step *= 2;
      hi = lo + step;
    }
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (t.count_below(mid) < j + 1 ? lo : hi) = mid;
    }
    const double value = 0.5 * (lo + hi);
    out.push_back(value / t.h2());
    floor_value = value;
  }
  return out;
}

EigResult fd_eigensolve(const NumericProblem& problem, int k) {
  validate(problem);
  if (k < 1 || k > problem.gridPoints / 4)
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds gridPoints / 4");
  auto fine_job = std::async(std::launch::async, [&] { return fd_eigenvalues(problem, 2 * problem.gridPoints, k); });
  const auto coarse = fd_eigenvalues(problem, problem.gridPoints, k);
  const auto fine = fine_job.get();

  EigResult out;
  out.gridUsed = 2 * problem.gridPoints;
  for (int j = 0; j < k; ++j) {
    out.eigenvalues.push_back((4 * fine[j] - coarse[j]) / 3);
    out.errorEstimates.push_back(std::abs(fine[j] - coarse[j]) / 3);
  }
  for (int j = 1; j < k; ++j)
    if (!(out.eigenvalues[j] > out.eigenvalues[j - 1]))
      throw std::runtime_error("extrapolated eigenvalues are not strictly increasing; refine the grid");
  return out;
}

NumericProblem make_problem(const Potential& v, int k, int gridPoints, double margin) {
  NumericProblem problem{v, 0, 1, gridPoints, Boundary::Dirichlet};
  if (const auto* pt = std::get_if<PoeschlTeller>(&v)) {
    const double eps = kHalfPi / gridPoints;
    problem.lo = pt->c3 != 0 ? eps : 0;
    problem.hi = kHalfPi - (pt->c4 != 0 ? eps : 0);
    return problem;
  }

  auto fit_domain = [&](double target) {
    if (const auto* so = std::get_if<ShiftedOscillator>(&v)) {
      if (!(so->c1 > 0)) throw std::invalid_argument("shifted oscillator needs c1 > 0");
      const double center = -so->c2 / (8 * so->c1);
      auto f = [&](double w) {
        return std::min(evaluate_potential(v, center + w), evaluate_potential(v, center - w));
      };
      const double w = reach(f, 0.0, target);
      problem.lo = center - w;
      problem.hi = center + w;
    } else {
      const auto& sing = std::get<SingularOscillator>(v);
      if (!(sing.omega2 > 0)) throw std::invalid_argument("singular oscillator needs omega^2 > 0");
      const double start = sing.alpha > 0 ? std::pow(sing.alpha / sing.omega2, 0.25) : 0.0;
      const double L = reach([&](double x) { return evaluate_potential(v, x); }, start, target);
      problem.lo = sing.alpha != 0 ? L / gridPoints : 0;
      problem.hi = L;
    }
  };

  // Extrapolated coarse estimates of lambda_k, with 1% headroom for their error.
  const int coarse = std::max(256, 8 * k);
  double target = margin;
  for (int it = 0; it < 8; ++it) {
    fit_domain(target);
    NumericProblem trial = problem;
    trial.gridPoints = coarse;
    const double top = fd_eigensolve(trial, k).eigenvalues.back();
    const double needed = top + 0.01 * std::abs(top) + margin;
    if (needed <= target) break;
    target = needed;
  }
  fit_domain(target);
  return problem;
}

std::vector<ConvergenceRow> convergence_study(const NumericProblem& problem, int index, const std::vector<int>& grids) {
  std::vector<ConvergenceRow> rows;
  for (int g : grids) {
    NumericProblem p = problem;
    p.gridPoints = g;
    const EigResult r = fd_eigensolve(p, index + 1);
    rows.push_back({g, r.eigenvalues[index], r.errorEstimates[index]});
  }
  return rows;
}

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os.precision(12);
  os << "grid,eigenvalue,error\n";
  for (const auto& r : rows) os << r.grid << "," << r.eigenvalue << "," << r.error << "\n";
  return os.str();
}

}  // namespace superalg::numeric
