#include "superalg/model/fit.h"

#include <algorithm>
#include <numeric>

#include "superalg/model/exact_linalg.h"

namespace superalg::model {

std::string StructureFit::rhs_string() const {
  std::string out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coefficients[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coefficients[k].to_string() + ")";
    if (basis[k] != "1") out += "*" + basis[k];
  }
  return out.empty() ? "0" : out;
}

std::vector<ParamMonomial> param_monomials_up_to(int degree) {
  std::vector<ParamMonomial> out;
  for (int total = 0; total <= degree; ++total)
    for (int a = total; a >= 0; --a)
      for (int b = total - a; b >= 0; --b)
        for (int c = total - a - b; c >= 0; --c) {
          ParamMonomial m;
          m.exponents = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
                         static_cast<std::uint8_t>(total - a - b - c)};
          out.push_back(m);
        }
  return out;
}

StructureFit fit_structure_constants(const OperatorExpr& target, const std::vector<std::string>& basis,
                                     int max_param_degree, const ModelOperators& ops) {
  StructureFit fit{basis, std::vector<Coefficient>(basis.size()), target, max_param_degree};
  if (target.is_zero()) return fit;

  std::vector<OperatorExpr> elements;
  elements.reserve(basis.size());
  for (const auto& name : basis) elements.push_back(ops.expand(name));

  struct Slot {
    std::size_t element;
    ParamMonomial mono;
  };
  std::vector<Slot> slots;
  std::vector<ExactColumn> columns;
  const auto monos = param_monomials_up_to(max_param_degree);
  for (std::size_t e = 0; e < elements.size(); ++e) {
    if (elements[e].is_zero()) continue;
    for (const auto& m : monos) {
      if (m.degree() + param_degree(elements[e]) > superalg::max_param_degree()) continue;
      slots.push_back({e, m});
      columns.push_back(to_column(Coefficient(m, GaussianRational(1)) * elements[e]));
    }
  }
  if (columns.empty()) return fit;

  CompressedSystem system(columns, to_column(target));
  std::vector<std::size_t> all(columns.size());
  std::iota(all.begin(), all.end(), 0);
  ModularSolve basic = system.solve(all);
  if (!basic.consistent) return fit;

  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (basic.values[k] != 0) support.push_back(k);

  // Drop columns from the least preferred end while the system stays solvable;
  // `keep` is tried last.
  auto prune = [&system](std::vector<std::size_t> cols, std::size_t keep) {
    std::vector<std::size_t> order;
    for (std::size_t k = cols.size(); k-- > 0;)
      if (cols[k] != keep) order.push_back(cols[k]);
    if (std::find(cols.begin(), cols.end(), keep) != cols.end()) order.push_back(keep);
    for (std::size_t victim : order) {
      std::vector<std::size_t> trial;
      for (auto c : cols)
        if (c != victim) trial.push_back(c);
      if (trial.size() == cols.size()) continue;
      ModularSolve s = system.solve(trial);
      if (!s.consistent) continue;
      cols.clear();
      for (std::size_t j = 0; j < trial.size(); ++j)
        if (s.values[j] != 0) cols.push_back(trial[j]);
    }
    return cols;
  };
  support = prune(support, all.size());
  // Exchange step: bring in one outside column and prune again; accept only
  // strictly smaller supports.
  for (bool improved = true; improved && support.size() > 1;) {
    improved = false;
    for (std::size_t j = 0; j < all.size() && !improved; ++j) {
      if (std::binary_search(support.begin(), support.end(), j)) continue;
      std::vector<std::size_t> trial = support;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), j), j);
      trial = prune(trial, j);
      if (trial.size() < support.size()) {
        support = std::move(trial);
        improved = true;
      }
    }
  }

  std::vector<ExactColumn> chosen;
  for (auto k : support) chosen.push_back(columns[k]);
  auto weights = exact_weights(chosen, to_column(target));
  if (!weights) return fit;

  OperatorExpr model_sum;
  for (std::size_t j = 0; j < support.size(); ++j) {
    const Slot& slot = slots[support[j]];
    fit.coefficients[slot.element].add_term(slot.mono, (*weights)[j]);
  }
  for (std::size_t e = 0; e < elements.size(); ++e)
    if (!fit.coefficients[e].is_zero()) model_sum += fit.coefficients[e] * elements[e];
  fit.residual = target - model_sum;
  if (!fit.residual.is_zero()) {
    // Unlucky prime: fall back to the honest "no fit" answer.
    fit.coefficients.assign(basis.size(), Coefficient());
    fit.residual = target;
  }
  return fit;
}

std::vector<std::string> closure_basis() {
  static const std::vector<std::string> linear{"H", "A1", "A2", "B1", "B2", "F", "C1", "C2", "D"};
  std::vector<std::string> out{"1"};
  out.insert(out.end(), linear.begin(), linear.end());
  for (const auto& a : linear)
    for (const auto& b : linear) out.push_back(a + "*" + b);
  return out;
}

std::vector<std::string> closure_basis_for(const OperatorExpr& target, const ModelOperators& ops) {
  if (target.is_zero()) return {"1"};
  const int limit = momentum_degree(target);
  std::vector<std::string> out;
  for (const auto& name : closure_basis()) {
    OperatorExpr e = ops.expand(name);
    if (e.is_zero() || momentum_degree(e) <= limit) out.push_back(name);
  }
  return out;
}

StructureFit fit_closure(const OperatorExpr& target, const ModelOperators& ops) {
  auto pruned = closure_basis_for(target, ops);
  StructureFit fit = fit_structure_constants(target, pruned, 1, ops);
  if (fit.exact()) return fit;
  fit = fit_structure_constants(target, pruned, 2, ops);
  if (fit.exact()) return fit;
  return fit_structure_constants(target, closure_basis(), 2, ops);
}

}  // namespace superalg::model
