#pragma once

#include "medianshape/rational.hpp"

#include <cstdint>
#include <vector>

namespace medianshape {

/// Sparse column-major matrix over exact rationals.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Rational>>> col_entries;

  void add(int i, int j, Rational v) { col_entries[j].emplace_back(i, std::move(v)); }
};

/// min c.x  s.t.  A x = b, x >= 0, all data exact rationals.
struct StandardFormLP {
  std::vector<Rational> c;
  SparseMatrix A;
  std::vector<Rational> b;

  int n_vars() const { return A.cols; }
  int n_cons() const { return A.rows; }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Optimal;
  std::vector<Rational> x;
  Rational objective;
  std::vector<int> basis;
  std::int64_t iterations = 0;
};

enum class PricingRule {
  Bland,          // smallest-index entering column; never cycles
  DantzigBland,   // most-negative reduced cost, falling back to Bland on
                  // long degenerate runs (termination still guaranteed)
};

struct SimplexOptions {
  PricingRule pricing = PricingRule::DantzigBland;
  std::int64_t max_iterations = 50'000'000;
  // When nonempty: n_cons column indices forming a feasible starting basis
  // (skips phase 1). Columns must be structurally independent.
  std::vector<int> initial_basis;
};

/// Two-phase revised simplex over exact rationals. Statuses, never throws on
/// infeasible/unbounded inputs; throws std::runtime_error if max_iterations
/// is exceeded (watchdog).
LPSolution solve_lp(const StandardFormLP& lp, const SimplexOptions& opts = {});

/// True iff every coordinate of the optimal solution is an integer
/// (denominator 1 after reduction). Throws on non-optimal solutions.
bool is_integral(const LPSolution& sol);

}  // namespace medianshape
