#include "doctest.h"

#include "medianshape/complex.hpp"
#include "medianshape/tu.hpp"

#include <stdexcept>
#include <random>

using namespace medianshape;

namespace {

IntMatrix mk(std::vector<std::vector<std::int64_t>> rows) { return IntMatrix::make(std::move(rows)); }

// The 3x4 incidence-style matrix whose 2-fold I-sum is not TU.
IntMatrix counterexample_block() {
  return mk({{0, 1, -1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}});
}

// Naive cofactor determinant, the oracle for det_bareiss.
std::int64_t det_cofactor(const IntMatrix& M) {
  int n = M.rows;
  if (n == 1) return M.at(0, 0);
  std::int64_t det = 0;
  for (int j = 0; j < n; ++j) {
    if (M.at(0, j) == 0) continue;
    IntMatrix sub;
    sub.rows = sub.cols = n - 1;
    sub.a.assign(n - 1, std::vector<std::int64_t>(n - 1));
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) sub.a[r - 1][cc++] = M.at(r, c);
    }
    det += (j % 2 ? -1 : 1) * M.at(0, j) * det_cofactor(sub);
  }
  return det;
}

// Exhaustive TU oracle: check every square submatrix with the cofactor
// determinant. Independent of the production minor-expansion path.
bool tu_oracle(const IntMatrix& M) {
  int kmax = std::min(M.rows, M.cols);
  std::vector<int> rs, cs;
  auto submatrix_det = [&]() {
    int k = (int)rs.size();
    IntMatrix S;
    S.rows = S.cols = k;
    S.a.assign(k, std::vector<std::int64_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) S.a[i][j] = M.at(rs[i], cs[j]);
    std::int64_t d = det_cofactor(S);
    return d >= -1 && d <= 1;
  };
  auto choose_cols = [&](auto&& self, int from, int k) -> bool {
    if ((int)cs.size() == k) return submatrix_det();
    for (int j = from; j < M.cols; ++j) {
      cs.push_back(j);
      if (!self(self, j + 1, k)) return false;
      cs.pop_back();
    }
    return true;
  };
  auto choose_rows = [&](auto&& self, int from, int k) -> bool {
    if ((int)rs.size() == k) return choose_cols(choose_cols, 0, k);
    for (int i = from; i < M.rows; ++i) {
      rs.push_back(i);
      if (!self(self, i + 1, k)) return false;
      rs.pop_back();
    }
    return true;
  };
  for (int k = 1; k <= kmax; ++k)
    if (!choose_rows(choose_rows, 0, k)) return false;
  return true;
}

IntMatrix submatrix(const IntMatrix& M, const std::vector<int>& rs, const std::vector<int>& cs) {
  IntMatrix S;
  S.rows = (int)rs.size();
  S.cols = (int)cs.size();
  S.a.assign(S.rows, std::vector<std::int64_t>(S.cols));
  for (int i = 0; i < S.rows; ++i)
    for (int j = 0; j < S.cols; ++j) S.a[i][j] = M.at(rs[i], cs[j]);
  return S;
}

IntMatrix boundary_as_matrix(const SimplicialComplex& K, int p) {
  auto B = boundary_matrix(K, p);
  IntMatrix M;
  M.rows = B.rows;
  M.cols = B.cols;
  M.a.assign(M.rows, std::vector<std::int64_t>(M.cols, 0));
  for (int j = 0; j < B.cols; ++j)
    for (auto& [i, s] : B.col_entries[j]) M.a[i][j] = s;
  return M;
}

}  // namespace

TEST_CASE("IntMatrix validation") {
  CHECK_THROWS_AS(mk({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(mk({{11}}), std::invalid_argument);
  CHECK(mk({{1, 0}, {0, 1}}) == mk({{1, 0}, {0, 1}}));
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> E(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + (int)(rng() % 5);
    IntMatrix M;
    M.rows = M.cols = n;
    M.a.assign(n, std::vector<std::int64_t>(n));
    for (auto& row : M.a)
      for (auto& v : row) v = E(rng);
    CHECK(det_bareiss(M) == det_cofactor(M));
  }
  CHECK_THROWS_AS(det_bareiss(mk({{1, 0}})), std::invalid_argument);
}

TEST_CASE("i_sum shape and layout") {
  auto A = counterexample_block();
  auto S1 = i_sum(A, 1);
  CHECK(S1.rows == 3 + 4);
  CHECK(S1.cols == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(S1.at(i, j) == (i == j ? 1 : 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) CHECK(S1.at(4 + i, j) == A.at(i, j));

  auto S2 = i_sum(A, 2);
  CHECK(S2.rows == 3 * 2 + 4);
  CHECK(S2.cols == 4 * 2);
  // Identity blocks across the top, A block-diagonal below.
  IntMatrix expected = mk({
      {1, 0, 0, 0, 1, 0, 0, 0},
      {0, 1, 0, 0, 0, 1, 0, 0},
      {0, 0, 1, 0, 0, 0, 1, 0},
      {0, 0, 0, 1, 0, 0, 0, 1},
      {0, 1, -1, 1, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, -1, 1},
      {0, 0, 0, 0, 1, 0, 1, 0},
      {0, 0, 0, 0, 1, 1, 0, 0},
  });
  CHECK(S2 == expected);

  CHECK_THROWS_AS(i_sum(A, 0), std::invalid_argument);
}

TEST_CASE("identity and the counterexample block are TU") {
  CHECK(is_totally_unimodular(mk({{1, 0}, {0, 1}})).tu);
  auto rep = is_totally_unimodular(counterexample_block());
  CHECK(rep.tu);
  CHECK_FALSE(rep.witness.has_value());
  CHECK(is_totally_unimodular(i_sum(counterexample_block(), 1)).tu);
}

TEST_CASE("the 2-fold I-sum of the counterexample block is not TU") {
  auto S2 = i_sum(counterexample_block(), 2);
  auto rep = is_totally_unimodular(S2);
  REQUIRE_FALSE(rep.tu);
  REQUIRE(rep.witness.has_value());
  const auto& w = *rep.witness;
  CHECK((w.det >= 2 || w.det <= -2));
  auto sub = submatrix(S2, w.row_set, w.col_set);
  CHECK(det_cofactor(sub) == w.det);

  // The specific 6x6 violating submatrix: det -2.
  auto S = submatrix(S2, {0, 3, 4, 6, 7, 8}, {0, 1, 3, 4, 6, 7});
  CHECK(det_bareiss(S) == -2);
  CHECK(det_cofactor(S) == -2);
}

TEST_CASE("entries outside {-1,0,1} give a 1x1 witness") {
  auto rep = is_totally_unimodular(mk({{1, 2}, {0, 1}}));
  REQUIRE_FALSE(rep.tu);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->row_set == std::vector<int>{0});
  CHECK(rep.witness->col_set == std::vector<int>{1});
  CHECK(rep.witness->det == 2);
}

TEST_CASE("exhaustive test agrees with the cofactor oracle on random matrices") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::int64_t> E(-1, 1);
  int not_tu_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int r = 2 + (int)(rng() % 4), c = 2 + (int)(rng() % 4);
    IntMatrix M;
    M.rows = r;
    M.cols = c;
    M.a.assign(r, std::vector<std::int64_t>(c));
    for (auto& row : M.a)
      for (auto& v : row) v = E(rng);
    auto rep = is_totally_unimodular(M);
    CHECK(rep.tu == tu_oracle(M));
    if (!rep.tu) {
      ++not_tu_seen;
      REQUIRE(rep.witness.has_value());
      auto sub = submatrix(M, rep.witness->row_set, rep.witness->col_set);
      std::int64_t d = det_cofactor(sub);
      CHECK(d == rep.witness->det);
      CHECK((d >= 2 || d <= -2));
    }
  }
  CHECK(not_tu_seen > 5);  // the sample must exercise both outcomes
}

TEST_CASE("exhaustive test guards oversized inputs") {
  IntMatrix big;
  big.rows = 20;
  big.cols = 20;
  big.a.assign(20, std::vector<std::int64_t>(20, 0));
  CHECK_THROWS_AS(is_totally_unimodular(big), std::invalid_argument);
  CHECK(tu_enumeration_size(big) > 1e6);
}

TEST_CASE("sampled checker finds the I-sum violation and passes TU inputs") {
  auto S2 = i_sum(counterexample_block(), 2);
  auto rep = is_tu_sampled(S2, 20000, 7);
  REQUIRE_FALSE(rep.tu);
  REQUIRE(rep.witness.has_value());
  auto sub = submatrix(S2, rep.witness->row_set, rep.witness->col_set);
  CHECK(det_cofactor(sub) == rep.witness->det);

  CHECK(is_tu_sampled(counterexample_block(), 5000, 7).tu);
  // Deterministic per seed.
  auto a = is_tu_sampled(S2, 5000, 11);
  auto b = is_tu_sampled(S2, 5000, 11);
  CHECK(a.tu == b.tu);
  if (a.witness && b.witness) {
    CHECK(a.witness->row_set == b.witness->row_set);
    CHECK(a.witness->col_set == b.witness->col_set);
  }
}

TEST_CASE("boundary matrices of 2d grids are TU") {
  auto K = build_grid_2d(2, 2, 1.0, 1.0);
  CHECK(is_totally_unimodular(boundary_as_matrix(K, 1)).tu);
  CHECK(is_totally_unimodular(boundary_as_matrix(K, 0)).tu);
}

TEST_CASE("TU-preserving operations") {
  auto A = counterexample_block();
  CHECK(transpose(transpose(A)) == A);
  CHECK(negate_row(negate_row(A, 1), 1) == A);
  CHECK(negate_col(negate_col(A, 2), 2) == A);
  CHECK(permute_rows(A, {0, 1, 2}) == A);
  CHECK(permute_cols(A, {3, 2, 1, 0}).at(0, 0) == A.at(0, 3));
  CHECK(append_zero_row(A).rows == A.rows + 1);
  CHECK(append_zero_col(A).cols == A.cols + 1);
  CHECK(append_singleton_row(A, 2, -1).at(A.rows, 2) == -1);
  CHECK(append_singleton_col(A, 1, 1).at(1, A.cols) == 1);
  CHECK(repeat_row(A, 0).a[A.rows] == A.a[0]);
  auto rc = repeat_col(A, 3);
  for (int i = 0; i < A.rows; ++i) CHECK(rc.at(i, A.cols) == A.at(i, 3));

  CHECK_THROWS_AS(permute_rows(A, {0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(negate_row(A, 5), std::out_of_range);

  // Random op sequences keep a TU matrix TU.
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix M = A;
    for (int step = 0; step < 6; ++step) {
      switch (rng() % 7) {
        case 0: M = transpose(M); break;
        case 1: M = negate_row(M, (int)(rng() % M.rows)); break;
        case 2: M = negate_col(M, (int)(rng() % M.cols)); break;
        case 3: M = append_zero_row(M); break;
        case 4: M = append_singleton_row(M, (int)(rng() % M.cols), rng() % 2 ? 1 : -1); break;
        case 5: M = repeat_row(M, (int)(rng() % M.rows)); break;
        case 6: M = repeat_col(M, (int)(rng() % M.cols)); break;
      }
      if (std::min(M.rows, M.cols) > 9) break;  // keep the exhaustive check cheap
    }
    if (std::min(M.rows, M.cols) <= 9) CHECK(is_totally_unimodular(M).tu);
  }
}
