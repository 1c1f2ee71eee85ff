#include "medianshape/tu.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace medianshape {

IntMatrix IntMatrix::make(std::vector<std::vector<std::int64_t>> entries) {
  IntMatrix M;
  M.rows = static_cast<int>(entries.size());
  M.cols = M.rows > 0 ? static_cast<int>(entries[0].size()) : 0;
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != M.cols)
      throw std::invalid_argument("IntMatrix: ragged rows");
    for (auto v : row)
      if (v < -10 || v > 10) throw std::invalid_argument("IntMatrix: |entry| must be <= 10");
  }
  M.a = std::move(entries);
  return M;
}

bool operator==(const IntMatrix& x, const IntMatrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

IntMatrix i_sum(const IntMatrix& A, int n_fold) {
  if (n_fold < 1) throw std::invalid_argument("i_sum: n_fold must be >= 1");
  const int m = A.rows, n = A.cols;
  IntMatrix R;
  R.rows = m * n_fold + n;
  R.cols = n * n_fold;
  R.a.assign(R.rows, std::vector<std::int64_t>(R.cols, 0));
  for (int f = 0; f < n_fold; ++f) {
    for (int j = 0; j < n; ++j) R.a[j][f * n + j] = 1;  // identity blocks on top
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) R.a[n + f * m + i][f * n + j] = A.a[i][j];
  }
  return R;
}

std::int64_t det_bareiss(const IntMatrix& M) {
  if (M.rows != M.cols) throw std::invalid_argument("det_bareiss: square matrix required");
  const int n = M.rows;
  if (n == 0) return 1;
  std::vector<std::vector<std::int64_t>> a = M.a;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

double tu_enumeration_size(const IntMatrix& M) {
  const int kmax = std::min(M.rows, M.cols);
  double total = 0;
  for (int k = 1; k <= kmax; ++k) {
    double cr = 1, cc = 1;
    for (int t = 0; t < k; ++t) {
      cr = cr * (M.rows - t) / (t + 1);
      cc = cc * (M.cols - t) / (t + 1);
    }
    total += cr * cc;
  }
  return total;
}

namespace {

// Enumerate k-subsets of {0..n-1} as bitmasks, ascending.
std::vector<std::uint32_t> subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k > n) return out;
  std::uint32_t mask = (k == 0) ? 0 : ((1u << k) - 1);
  const std::uint32_t limit = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  while (true) {
    out.push_back(mask);
    if (k == 0) break;
    // Gosper's hack.
    std::uint32_t c = mask & (~mask + 1);
    std::uint32_t r = mask + c;
    if (r < mask || r > limit) break;  // r < mask: unsigned wraparound
    mask = (((r ^ mask) >> 2) / c) | r;
    if (mask > limit) break;
  }
  return out;
}

std::vector<int> mask_to_indices(std::uint32_t mask) {
  std::vector<int> idx;
  for (int b = 0; b < 32; ++b)
    if (mask & (1u << b)) idx.push_back(b);
  return idx;
}

}  // namespace

TUReport is_totally_unimodular(const IntMatrix& M) {
  if (std::min(M.rows, M.cols) > 12)
    throw std::invalid_argument("is_totally_unimodular: min dimension exceeds the guard (12)");
  if (M.rows > 32 || M.cols > 32)
    throw std::invalid_argument("is_totally_unimodular: matrix too large for full enumeration");
  if (tu_enumeration_size(M) > 5e6)
    throw std::invalid_argument(
        "is_totally_unimodular: enumeration budget exceeded; use is_tu_sampled");

  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (M.a[i][j] < -1 || M.a[i][j] > 1)
        return {false, TUWitness{{i}, {j}, M.a[i][j]}};

  const int kmax = std::min(M.rows, M.cols);
  // dets[(rowmask, colmask)] for the previous level; expansion along the
  // lowest selected row shares all (k-1)-minors.
  std::unordered_map<std::uint64_t, std::int64_t> prev;
  prev[0] = 1;  // det of the empty matrix
  for (int k = 1; k <= kmax; ++k) {
    std::unordered_map<std::uint64_t, std::int64_t> cur;
    auto rsets = subsets(M.rows, k);
    auto csets = subsets(M.cols, k);
    cur.reserve(rsets.size() * csets.size());
    for (std::uint32_t rm : rsets) {
      auto ridx = mask_to_indices(rm);
      const int r0 = ridx.front();
      const std::uint32_t rm_rest = rm & (rm - 1);  // rm without its lowest bit
      for (std::uint32_t cm : csets) {
        auto cidx = mask_to_indices(cm);
        std::int64_t det = 0;
        if (k == 1) {
          det = M.a[r0][cidx[0]];
        } else {
          int sgn = 1;
          for (int t = 0; t < k; ++t) {
            std::int64_t entry = M.a[r0][cidx[t]];
            if (entry != 0) {
              std::uint64_t key =
                  (static_cast<std::uint64_t>(rm_rest) << 32) | (cm & ~(1u << cidx[t]));
              det += sgn * entry * prev.at(key);
            }
            sgn = -sgn;
          }
        }
        if (det < -1 || det > 1)
          return {false, TUWitness{ridx, cidx, det}};
        cur[(static_cast<std::uint64_t>(rm) << 32) | cm] = det;
      }
    }
    prev = std::move(cur);
  }
  return {true, std::nullopt};
}

TUReport is_tu_sampled(const IntMatrix& M, std::int64_t samples, std::uint64_t seed) {
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (M.a[i][j] < -1 || M.a[i][j] > 1)
        return {false, TUWitness{{i}, {j}, M.a[i][j]}};
  std::mt19937_64 rng(seed);
  const int kmax = std::min(M.rows, M.cols);
  if (kmax < 2) return {true, std::nullopt};  // 1x1 minors already scanned
  std::vector<int> rpool(M.rows), cpool(M.cols);
  for (int i = 0; i < M.rows; ++i) rpool[i] = i;
  for (int j = 0; j < M.cols; ++j) cpool[j] = j;
  for (std::int64_t t = 0; t < samples; ++t) {
    int k = std::uniform_int_distribution<int>(2, kmax)(rng);
    std::shuffle(rpool.begin(), rpool.end(), rng);
    std::shuffle(cpool.begin(), cpool.end(), rng);
    std::vector<int> ridx(rpool.begin(), rpool.begin() + k);
    std::vector<int> cidx(cpool.begin(), cpool.begin() + k);
    std::sort(ridx.begin(), ridx.end());
    std::sort(cidx.begin(), cidx.end());
    IntMatrix S;
    S.rows = S.cols = k;
    S.a.assign(k, std::vector<std::int64_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) S.a[i][j] = M.a[ridx[i]][cidx[j]];
    std::int64_t det = det_bareiss(S);
    if (det < -1 || det > 1) return {false, TUWitness{ridx, cidx, det}};
  }
  return {true, std::nullopt};
}

namespace {

void check_permutation(const std::vector<int>& perm, int n, const char* what) {
  if (static_cast<int>(perm.size()) != n) throw std::out_of_range(what);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i) throw std::invalid_argument(what);
}

}  // namespace

IntMatrix permute_rows(const IntMatrix& M, const std::vector<int>& perm) {
  check_permutation(perm, M.rows, "permute_rows: not a permutation");
  IntMatrix R = M;
  for (int i = 0; i < M.rows; ++i) R.a[i] = M.a.at(perm[i]);
  return R;
}

IntMatrix permute_cols(const IntMatrix& M, const std::vector<int>& perm) {
  check_permutation(perm, M.cols, "permute_cols: not a permutation");
  IntMatrix R = M;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) R.a[i][j] = M.a[i].at(perm[j]);
  return R;
}

IntMatrix transpose(const IntMatrix& M) {
  IntMatrix R;
  R.rows = M.cols;
  R.cols = M.rows;
  R.a.assign(R.rows, std::vector<std::int64_t>(R.cols));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) R.a[j][i] = M.a[i][j];
  return R;
}

IntMatrix negate_row(const IntMatrix& M, int i) {
  IntMatrix R = M;
  for (auto& v : R.a.at(i)) v = -v;
  return R;
}

IntMatrix negate_col(const IntMatrix& M, int j) {
  if (j < 0 || j >= M.cols) throw std::out_of_range("negate_col: index");
  IntMatrix R = M;
  for (int i = 0; i < M.rows; ++i) R.a[i][j] = -R.a[i][j];
  return R;
}

IntMatrix append_zero_row(const IntMatrix& M) {
  IntMatrix R = M;
  R.a.emplace_back(M.cols, 0);
  ++R.rows;
  return R;
}

IntMatrix append_zero_col(const IntMatrix& M) {
  IntMatrix R = M;
  for (auto& row : R.a) row.push_back(0);
  ++R.cols;
  return R;
}

IntMatrix append_singleton_row(const IntMatrix& M, int col, int sign) {
  if (col < 0 || col >= M.cols) throw std::out_of_range("append_singleton_row: index");
  if (sign != 1 && sign != -1) throw std::invalid_argument("append_singleton_row: sign");
  IntMatrix R = append_zero_row(M);
  R.a.back()[col] = sign;
  return R;
}

IntMatrix append_singleton_col(const IntMatrix& M, int row, int sign) {
  if (row < 0 || row >= M.rows) throw std::out_of_range("append_singleton_col: index");
  if (sign != 1 && sign != -1) throw std::invalid_argument("append_singleton_col: sign");
  IntMatrix R = append_zero_col(M);
  R.a[row].back() = sign;
  return R;
}

IntMatrix repeat_row(const IntMatrix& M, int i) {
  IntMatrix R = M;
  R.a.push_back(M.a.at(i));
  ++R.rows;
  return R;
}

IntMatrix repeat_col(const IntMatrix& M, int j) {
  if (j < 0 || j >= M.cols) throw std::out_of_range("repeat_col: index");
  IntMatrix R = M;
  for (int i = 0; i < M.rows; ++i) R.a[i].push_back(M.a[i][j]);
  ++R.cols;
  return R;
}

}  // namespace medianshape
