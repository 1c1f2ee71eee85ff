#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace medianshape {

/// Dense integer matrix for total-unimodularity analysis. Entries are kept
/// small (|entry| <= 10, checked by module entry points).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::int64_t>> a;

  static IntMatrix make(std::vector<std::vector<std::int64_t>> entries);
  std::int64_t& at(int i, int j) { return a[i][j]; }
  std::int64_t at(int i, int j) const { return a[i][j]; }
};

bool operator==(const IntMatrix& x, const IntMatrix& y);

/// Violating square submatrix: row/column index sets (0-based, ascending) and
/// its determinant (|det| >= 2).
struct TUWitness {
  std::vector<int> row_set;
  std::vector<int> col_set;
  std::int64_t det = 0;
};

struct TUReport {
  bool tu = false;
  std::optional<TUWitness> witness;
};

/// N-fold I-sum: n_fold copies of the n x n identity across the top, the
/// input repeated block-diagonally below; shape (m*n_fold + n) x (n*n_fold).
IntMatrix i_sum(const IntMatrix& A, int n_fold);

/// Exhaustive total-unimodularity test: every square submatrix determinant
/// must lie in {0, +1, -1}. Level-by-level minor expansion with memoization;
/// guarded at min(rows, cols) <= 12 and a submatrix-count budget. Throws
/// std::invalid_argument when the guard is exceeded.
TUReport is_totally_unimodular(const IntMatrix& M);

/// Estimated number of square submatrices the exhaustive test would visit.
double tu_enumeration_size(const IntMatrix& M);

/// Randomized check: sample square submatrices of every size and test their
/// determinants (fraction-free Bareiss over exact integers). Can certify NOT
/// TU; a pass is evidence, not proof.
TUReport is_tu_sampled(const IntMatrix& M, std::int64_t samples, std::uint64_t seed);

/// Exact integer determinant (fraction-free Bareiss).
std::int64_t det_bareiss(const IntMatrix& M);

// The five TU-preserving transformations.
IntMatrix permute_rows(const IntMatrix& M, const std::vector<int>& perm);
IntMatrix permute_cols(const IntMatrix& M, const std::vector<int>& perm);
IntMatrix transpose(const IntMatrix& M);
IntMatrix negate_row(const IntMatrix& M, int i);
IntMatrix negate_col(const IntMatrix& M, int j);
IntMatrix append_zero_row(const IntMatrix& M);
IntMatrix append_zero_col(const IntMatrix& M);
/// Append a row/column whose single nonzero is sign (+1/-1) at the given index.
IntMatrix append_singleton_row(const IntMatrix& M, int col, int sign);
IntMatrix append_singleton_col(const IntMatrix& M, int row, int sign);
IntMatrix repeat_row(const IntMatrix& M, int i);
IntMatrix repeat_col(const IntMatrix& M, int j);

}  // namespace medianshape
