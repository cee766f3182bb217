#include "superalg/model/exact_linalg.h"

namespace superalg::model {

ExactColumn to_column(const OperatorExpr& op) {
  ExactColumn col;
  for (const auto& [word, coef] : op.terms())
    for (const auto& [mono, value] : coef.terms()) col.emplace(RowKey{word, mono}, value);
  return col;
}

std::size_t exact_rank(const std::vector<OperatorExpr>& columns) {
  std::map<RowKey, std::vector<GaussianRational>> rows;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [key, value] : to_column(columns[j])) {
      auto& row = rows[key];
      row.resize(columns.size());
      row[j] = value;
    }
  std::vector<std::vector<GaussianRational>> m;
  for (auto& [key, row] : rows) m.push_back(std::move(row));

  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size() && rank < m.size(); ++j) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][j].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][j].is_zero()) continue;
      GaussianRational factor = m[r][j] / m[rank][j];
      for (std::size_t c = j; c < columns.size(); ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<GaussianRational>> solve_square(std::vector<std::vector<GaussianRational>> a,
                                                          std::vector<GaussianRational> b) {
  const std::size_t n = b.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t piv = j;
    while (piv < n && a[piv][j].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[j]);
    std::swap(b[piv], b[j]);
    for (std::size_t r = j + 1; r < n; ++r) {
      if (a[r][j].is_zero()) continue;
      GaussianRational factor = a[r][j] / a[j][j];
      for (std::size_t c = j; c < n; ++c)
        if (!a[j][c].is_zero()) a[r][c] -= factor * a[j][c];
      b[r] -= factor * b[j];
    }
  }
  std::vector<GaussianRational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    GaussianRational v = b[k];
    for (std::size_t c = k + 1; c < n; ++c)
      if (!a[k][c].is_zero()) v -= a[k][c] * x[c];
    x[k] = v / a[k][k];
  }
  return x;
}

std::optional<std::vector<GaussianRational>> exact_weights(const std::vector<ExactColumn>& columns,
                                                           const ExactColumn& target) {
  const std::size_t s = columns.size();
  if (s == 0) return std::vector<GaussianRational>{};
  std::map<RowKey, std::vector<GaussianRational>> rows;
  for (std::size_t j = 0; j < s; ++j)
    for (const auto& [key, value] : columns[j]) {
      auto& row = rows[key];
      row.resize(s);
      row[j] = value;
    }

  // Pick s rows that are independent mod p; they are then independent over Q(i).
  const PrimeField& f = PrimeField::instance();
  std::vector<std::vector<std::uint64_t>> basis;  // reduced rows, basis[k] has leading entry at lead[k]
  std::vector<std::size_t> lead;
  std::vector<const RowKey*> chosen;
  for (const auto& [key, row] : rows) {
    std::vector<std::uint64_t> v(s);
    for (std::size_t c = 0; c < s; ++c) v[c] = f.from(row[c]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::uint64_t factor = v[lead[k]];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < s; ++c) v[c] = f.sub(v[c], f.mul(factor, basis[k][c]));
    }
    std::size_t l = 0;
    while (l < s && v[l] == 0) ++l;
    if (l == s) continue;
    std::uint64_t scale = f.inv(v[l]);
    for (auto& e : v) e = f.mul(e, scale);
    basis.push_back(std::move(v));
    lead.push_back(l);
    chosen.push_back(&key);
    if (chosen.size() == s) break;
  }
  if (chosen.size() < s) return std::nullopt;

  std::vector<std::vector<GaussianRational>> a;
  std::vector<GaussianRational> b;
  for (const RowKey* key : chosen) {
    a.push_back(rows.at(*key));
    auto it = target.find(*key);
    b.push_back(it == target.end() ? GaussianRational() : it->second);
  }
  return solve_square(std::move(a), std::move(b));
}

}  // namespace superalg::model
