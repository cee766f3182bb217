#include "superalg/numeric/equivalence.h"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace superalg::numeric {

namespace {

Rational half(int v) {
  Rational q(v, 2);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string describe(const ModelParamsExact& p, const QuantumNumbers& q, const Rational& got, const Rational& want) {
  return "m=(" + superalg::to_string(p.m1) + "," + superalg::to_string(p.m2) + "," + superalg::to_string(p.m3) + "," + superalg::to_string(p.m4) + ") q=(" +
         std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," + std::to_string(q[3]) +
         "): " + superalg::to_string(got) + " vs " + superalg::to_string(want);
}

Rational random_ratio(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

std::string to_string(Identification id) { return id == Identification::Literal ? "literal" : "corrected"; }

LabelPair cylindrical_labels(const QuantumNumbers& q, Identification id) {
  const int s = q[0] + q[1], t = q[2] + q[3];
  if (id == Identification::Literal || s % 2 == 1) return {half(s + 1), half(t)};
  return {half(s), half(t + 1)};
}

LabelPair paraboloidal_labels(const QuantumNumbers& q, Identification id) {
  const int s = q[0] + q[1], t = q[2] + q[3];
  if (id == Identification::Literal) return {half(s + 1), half(t)};
  if (s % 2 == 0) return {half(s), half(t)};
  return {half(s - 1), half(t + 1)};
}

bool cylindrical_labels_admissible(const LabelPair& labels) {
  return is_integer(labels.first) && sgn(labels.first) >= 0 && is_integer(labels.second - Rational(1, 2)) &&
         sgn(labels.second) > 0;
}

bool paraboloidal_labels_admissible(const LabelPair& labels) {
  return is_integer(labels.first) && is_integer(labels.second) && sgn(labels.first) >= 0 && sgn(labels.second) >= 0;
}

const FormulaCheck& EquivalenceReport::find(const std::string& formula, Identification id) const {
  for (const auto& c : checks)
    if (c.formula == formula && c.identification == id) return c;
  throw std::out_of_range("no check for " + formula + "/" + to_string(id));
}

bool EquivalenceReport::holds(Identification id) const {
  return std::all_of(checks.begin(), checks.end(),
                     [id](const FormulaCheck& c) { return c.identification != id || c.holds(); });
}

nlohmann::json EquivalenceReport::to_json() const {
  nlohmann::json out = {{"points", points}, {"tuples", tuples}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks)
    list.push_back({{"formula", c.formula},
                    {"identification", to_string(c.identification)},
                    {"cases", c.cases},
                    {"mismatches", c.mismatches},
                    {"parity_flagged", c.parity_flagged},
                    {"examples", c.examples}});
  out["checks"] = list;
  return out;
}

EquivalenceReport formula_equivalence(const std::vector<ModelParamsExact>& grid,
                                      const std::vector<QuantumNumbers>& tuples) {
  if (grid.size() < 20) throw std::invalid_argument("formula equivalence needs at least 20 parameter points");
  for (const auto& p : grid)
    if (sgn(p.m1) <= 0) throw std::invalid_argument("formula equivalence needs c1 > 0");

  EquivalenceReport report;
  report.points = grid.size();
  report.tuples = tuples.size();
  for (Identification id : {Identification::Literal, Identification::Corrected}) {
    FormulaCheck cyl{"cylindrical", id, 0, 0, 0, {}}, par{"paraboloidal", id, 0, 0, 0, {}};
    for (const auto& p : grid)
      for (const auto& q : tuples) {
        const Rational want = qalg::algebraic_energy(p, q);
        auto record = [&](FormulaCheck& check, bool admissible, const Rational& got) {
          ++check.cases;
          if (!admissible) ++check.parity_flagged;
          if (got != want) {
            ++check.mismatches;
            if (check.examples.size() < 5) check.examples.push_back(describe(p, q, got, want));
          }
        };
        const LabelPair c = cylindrical_labels(q, id);
        record(cyl, cylindrical_labels_admissible(c), cylindrical_formula_energy(p, c.first, c.second));
        const LabelPair b = paraboloidal_labels(q, id);
        record(par, paraboloidal_labels_admissible(b), paraboloidal_formula_energy(p, b.first, b.second));
      }
    report.checks.push_back(std::move(cyl));
    report.checks.push_back(std::move(par));
  }
  return report;
}

std::vector<ModelParamsExact> default_equivalence_grid(std::size_t points, std::uint64_t seed) {
  std::vector<ModelParamsExact> out;
  out.push_back({Rational(1), Rational(0), Rational(2), Rational(2)});
  out.push_back({Rational(1), Rational(0), Rational(1), Rational(1)});
  std::mt19937_64 rng(seed);
  while (out.size() < points)
    out.push_back({random_ratio(rng, 1, 9, 5), random_ratio(rng, -9, 9, 5), random_ratio(rng, 0, 9, 4),
                   random_ratio(rng, 0, 9, 4)});
  out.resize(points);
  return out;
}

std::vector<QuantumNumbers> default_equivalence_tuples(std::size_t count) {
  std::vector<QuantumNumbers> all;
  const int bound = static_cast<int>(count);
  for (int p1 = 0; p1 <= bound; ++p1)
    for (int p2 = 0; p2 <= bound; ++p2)
      for (int n1 = 0; n1 <= p1; ++n1) {
        const int n2 = n1 - p1 + p2;
        if (n2 >= 0 && n2 <= p2) all.push_back({p1, p2, n1, n2});
      }
  std::sort(all.begin(), all.end(), [](const QuantumNumbers& a, const QuantumNumbers& b) {
    const int sa = a[0] + a[1] + a[2] + a[3], sb = b[0] + b[1] + b[2] + b[3];
    return sa != sb ? sa < sb : a < b;
  });
  if (all.size() > count) all.resize(count);
  return all;
}

}  // namespace superalg::numeric
