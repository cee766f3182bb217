#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superalg/weylcore/operator_expr.h"

namespace superalg::model {

/// Arithmetic modulo the fixed prime p = 15*2^27 + 1 (p = 1 mod 4), with i
/// mapped to a square root of -1. Used only to choose pivots and supports; every result
/// that leaves this module is recomputed exactly.
class PrimeField {
 public:
  static const PrimeField& instance();

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t from(const GaussianRational& q) const;

 private:
  PrimeField();
  std::uint64_t from_rational(const Rational& q) const;
  std::uint64_t p_ = 0;
  std::uint64_t sqrt_minus_one_ = 0;
};

/// Row key of a linear system whose unknowns multiply operators: one equation
/// per (Weyl monomial, parameter monomial) pair.
using RowKey = std::pair<WeylMonomial, ParamMonomial>;

/// Sparse exact column: row key -> value.
using ExactColumn = std::map<RowKey, GaussianRational>;

ExactColumn to_column(const OperatorExpr& op);

/// Rank of a set of operators viewed as vectors over Q(i).
std::size_t exact_rank(const std::vector<OperatorExpr>& columns);

/// Solves the square system a x = b exactly over Q(i). Returns nullopt when a
/// is singular.
std::optional<std::vector<GaussianRational>> solve_square(std::vector<std::vector<GaussianRational>> a,
                                                          std::vector<GaussianRational> b);

/// Result of a mod-p least-index (basic) solve over an ordered column subset.
struct ModularSolve {
  bool consistent = false;
  std::vector<std::size_t> pivots;              // indices into the subset, ascending
  std::vector<std::uint64_t> values;            // one per subset column; zero off pivots
  std::size_t support_size() const;
};

/// Dense matrix over the prime field in column-major storage, obtained from a
/// random row compression of an exact system. The target column is kept
/// separately.
class CompressedSystem {
 public:
  CompressedSystem(const std::vector<ExactColumn>& columns, const ExactColumn& target, std::uint64_t seed = 0x5eed);

  std::size_t columns() const { return cols_.size(); }

  /// Basic solution using columns `subset` (in the given order): pivots are the
  /// earliest independent columns, free columns are set to zero.
  ModularSolve solve(const std::vector<std::size_t>& subset) const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<std::uint64_t>> cols_;
  std::vector<std::uint64_t> target_;
};

/// Exact weights for `columns` reproducing `target` when possible. Equations
/// are selected by a mod-p row-independence scan and the square subsystem is
/// solved exactly; callers verify the residual.
std::optional<std::vector<GaussianRational>> exact_weights(const std::vector<ExactColumn>& columns,
                                                           const ExactColumn& target);

}  // namespace superalg::model
