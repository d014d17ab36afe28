#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "supervar/sparse_matrix.hpp"

namespace supervar {

/// Machine-word prime used for the fast rank path. The default leaves plenty
/// of headroom below 2^31 so products fit in 64 bits.
constexpr uint64_t kDefaultPrime = 2147483629ULL;
/// Independent confirmation prime (2^31 - 1).
constexpr uint64_t kConfirmPrime = 2147483647ULL;

struct PrimeFieldConfig {
  uint64_t prime = kDefaultPrime;
};

bool is_prime_u64(uint64_t n);

/// Validates the invariants of a PrimeFieldConfig against a matrix dimension.
void check_prime_config(const PrimeFieldConfig& cfg, int dimension);

enum class RankMode { exact, modular };

/// Reduces a rational to the prime field. Throws BadPrime when a denominator
/// vanishes mod p (the caller should retry with another prime).
uint64_t rat_mod(const Rat& r, uint64_t p);

/// Incremental row-space rank over F_p. Rows are fed one at a time and
/// reduced against the pivot rows collected so far.
class ModRowReducer {
 public:
  ModRowReducer(int cols, uint64_t prime);

  bool add_row(std::vector<std::pair<int, uint64_t>> row);
  bool add_row_rat(const std::vector<std::pair<int, Rat>>& row);

  int rank() const { return static_cast<int>(rows_.size()); }
  uint64_t prime() const { return p_; }
  int cols() const { return cols_; }

 private:
  int cols_;
  uint64_t p_;
  std::map<int, size_t> pivot_of_col_;  // leading column -> index into rows_
  std::vector<std::vector<std::pair<int, uint64_t>>> rows_;  // leading coeff 1
};

/// Incremental fraction-free elimination over the integers (rows are scaled
/// to primitive integer vectors; combinations are cross-multiplied and
/// divided by their content). Supports rank and right-kernel extraction.
class ExactRowReducer {
 public:
  explicit ExactRowReducer(int cols);

  bool add_row(std::vector<std::pair<int, Int>> row);
  bool add_row_rat(const std::vector<std::pair<int, Rat>>& row);

  /// Reduces a row against the collected pivots without inserting it.
  std::vector<std::pair<int, Int>> reduce(
      std::vector<std::pair<int, Int>> row) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::map<int, size_t>& pivots() const { return pivot_of_col_; }

  /// Basis of the right null space of the row span.
  std::vector<Vec> kernel() const;

 private:
  int cols_;
  std::map<int, size_t> pivot_of_col_;
  std::vector<std::vector<std::pair<int, Int>>> rows_;
};

/// Rank of a sparse rational matrix. Exact mode is fraction-free elimination
/// over the rationals; modular mode computes the rank over F_p, a lower bound
/// that agrees with the true rank for all but finitely many primes.
int rank(const SparseMatrix& m, RankMode mode = RankMode::exact,
         const PrimeFieldConfig& cfg = {});

/// Basis of the right null space; m * v = 0 exactly for every returned v,
/// and the count is cols - rank(m).
std::vector<Vec> kernel_basis(const SparseMatrix& m);

/// Any particular solution of m * x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);

}  // namespace supervar
