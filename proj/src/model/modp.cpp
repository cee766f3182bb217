#include <algorithm>
#include <stdexcept>

#include "superalg/model/exact_linalg.h"

namespace superalg::model {

namespace {

// 15 * 2^27 + 1; a compile-time modulus lets the compiler strength-reduce '%'.
constexpr std::uint64_t kPrime = 2013265921ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

PrimeField::PrimeField() : p_(kPrime) {
  for (std::uint64_t a = 2; a < 1000; ++a) {
    std::uint64_t r = pow(a, (p_ - 1) / 4);
    if (mul(r, r) == p_ - 1) {
      sqrt_minus_one_ = r;
      return;
    }
  }
  throw std::logic_error("no square root of -1 found");
}

const PrimeField& PrimeField::instance() {
  static const PrimeField field;
  return field;
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % kPrime; }

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= kPrime;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return pow(a, kPrime - 2);
}

std::uint64_t PrimeField::from_rational(const Rational& q) const {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) throw std::domain_error("denominator divisible by the working prime");
  return mul(num, inv(den));
}

std::uint64_t PrimeField::from(const GaussianRational& q) const {
  return add(from_rational(q.re()), mul(sqrt_minus_one_, from_rational(q.im())));
}

std::size_t ModularSolve::support_size() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](auto v) { return v != 0; }));
}

CompressedSystem::CompressedSystem(const std::vector<ExactColumn>& columns, const ExactColumn& target,
                                   std::uint64_t seed) {
  const PrimeField& f = PrimeField::instance();
  std::map<RowKey, std::size_t> index;
  auto register_keys = [&index](const ExactColumn& col) {
    for (const auto& [key, v] : col) index.emplace(key, 0);
  };
  for (const auto& col : columns) register_keys(col);
  register_keys(target);
  std::size_t n = 0;
  for (auto& [key, id] : index) id = n++;
  const std::size_t full_rows = n;

  // Random projection onto a few more rows than unknowns preserves rank and
  // span membership with overwhelming probability.
  rows_ = std::min(full_rows, columns.size() + 12);
  std::vector<std::uint64_t> projection(rows_ * full_rows);
  for (std::size_t t = 0; t < rows_; ++t)
    for (std::size_t r = 0; r < full_rows; ++r)
      projection[t * full_rows + r] = splitmix64(seed ^ (t * 0x100000001B3ULL) ^ (r << 32) ^ r) % kPrime;

  auto compress_column = [&](const ExactColumn& col) {
    std::vector<std::uint64_t> out(rows_, 0);
    for (const auto& [key, v] : col) {
      std::size_t r = index.at(key);
      std::uint64_t value = f.from(v);
      if (value == 0) continue;
      const std::uint64_t* row = &projection[r];
      for (std::size_t t = 0; t < rows_; ++t) out[t] = (out[t] + row[t * full_rows] * value) % kPrime;
    }
    return out;
  };
  cols_.reserve(columns.size());
  for (const auto& col : columns) cols_.push_back(compress_column(col));
  target_ = compress_column(target);
}

ModularSolve CompressedSystem::solve(const std::vector<std::size_t>& subset) const {
  const PrimeField& f = PrimeField::instance();
  const std::size_t s = subset.size();
  const std::size_t width = s + 1;
  // Any s + 12 of the random rows form a projection just as good as all of them.
  const std::size_t rows = std::min(rows_, s + 12);
  std::vector<std::uint64_t> a(rows * width);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < s; ++j) a[r * width + j] = cols_[subset[j]][r];
    a[r * width + s] = target_[r];
  }

  ModularSolve out;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t j = 0; j < s && rank < rows; ++j) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * width + j] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + piv * width + j, a.begin() + (piv + 1) * width, a.begin() + rank * width + j);
    std::uint64_t* prow = &a[rank * width];
    const std::uint64_t scale = f.inv(prow[j]);
    for (std::size_t c = j; c < width; ++c) prow[c] = f.mul(prow[c], scale);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t* row = &a[r * width];
      const std::uint64_t factor = row[j];
      if (factor == 0) continue;
      const std::uint64_t neg = kPrime - factor;
      for (std::size_t c = j; c < width; ++c) row[c] = (row[c] + neg * prow[c]) % kPrime;
    }
    pivot_cols.push_back(j);
    ++rank;
  }

  out.consistent = true;
  for (std::size_t r = rank; r < rows; ++r)
    if (a[r * width + s] != 0) {
      out.consistent = false;
      break;
    }

  out.values.assign(s, 0);
  for (std::size_t k = rank; k-- > 0;) {
    const std::uint64_t* row = &a[k * width];
    std::uint64_t v = row[s];
    for (std::size_t m = k + 1; m < rank; ++m) {
      std::size_t c = pivot_cols[m];
      if (row[c] != 0) v = f.sub(v, f.mul(row[c], out.values[c]));
    }
    out.values[pivot_cols[k]] = v;
  }
  out.pivots = std::move(pivot_cols);
  return out;
}

}  // namespace superalg::model
