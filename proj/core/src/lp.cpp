#include "medianshape/lp.hpp"

#include <stdexcept>

namespace medianshape {

namespace {

using Column = std::vector<std::pair<int, Rational>>;

struct SimplexState {
  int m = 0;
  const std::vector<Column>* cols = nullptr;  // all candidate columns
  std::vector<Rational> costs;                // per column, current phase
  std::vector<int> basis;                     // m entries, column indices
  std::vector<char> in_basis;
  std::vector<std::vector<Rational>> binv;  // dense m x m
  std::vector<Rational> xb;                 // basic values, >= 0
  std::vector<Rational> y;                  // duals c_B B^-1
  std::vector<std::vector<Rational>> lex;   // B^-1 B0 for the lexicographic rule
  int n_enterable = 0;  // columns [0, n_enterable) may enter the basis
};

Rational dot_col(const std::vector<Rational>& row_or_y, const Column& a) {
  Rational acc(0);
  for (const auto& [i, v] : a) acc += row_or_y[i] * v;
  return acc;
}

void compute_duals(SimplexState& st) {
  st.y.assign(st.m, Rational(0));
  for (int r = 0; r < st.m; ++r) {
    const Rational& cb = st.costs[st.basis[r]];
    if (cb == 0) continue;
    for (int k = 0; k < st.m; ++k)
      if (st.binv[r][k] != 0) st.y[k] += cb * st.binv[r][k];
  }
}

enum class RunResult { Optimal, Unbounded };

RunResult run_simplex(SimplexState& st, const SimplexOptions& opts, std::int64_t& iters) {
  compute_duals(st);
  const auto& cols = *st.cols;
  std::int64_t degenerate_run = 0;

  while (true) {
    if (++iters > opts.max_iterations)
      throw std::runtime_error("solve_lp: iteration watchdog exceeded");

    const bool bland =
        opts.pricing == PricingRule::Bland || degenerate_run > 200;

    // Pricing.
    int enter = -1;
    Rational enter_rc(0);
    for (int j = 0; j < st.n_enterable; ++j) {
      if (st.in_basis[j]) continue;
      Rational rc = st.costs[j] - dot_col(st.y, cols[j]);
      if (rc < 0) {
        if (bland) {
          enter = j;
          enter_rc = std::move(rc);
          break;
        }
        if (enter < 0 || rc < enter_rc) {
          enter = j;
          enter_rc = std::move(rc);
        }
      }
    }
    if (enter < 0) return RunResult::Optimal;

    // Direction d = B^-1 a_enter.
    std::vector<Rational> d(st.m, Rational(0));
    for (const auto& [i, v] : cols[enter])
      for (int r = 0; r < st.m; ++r)
        if (st.binv[r][i] != 0) d[r] += st.binv[r][i] * v;

    // Lexicographic ratio test: ties on xb[r]/d[r] are broken by the rows of
    // lex/d[r], i.e. the perturbation b + B0 (eps, eps^2, ...). Every row of
    // (xb | lex) stays lexicographically positive, so no basis can repeat.
    int leave = -1;
    Rational theta(0);
    std::vector<int> ties;
    for (int r = 0; r < st.m; ++r) {
      if (d[r] <= 0) continue;
      Rational ratio = st.xb[r] / d[r];
      if (leave < 0 || ratio < theta) {
        leave = r;
        theta = std::move(ratio);
        ties.assign(1, r);
      } else if (ratio == theta) {
        ties.push_back(r);
      }
    }
    if (leave < 0) return RunResult::Unbounded;
    for (int k = 0; k < st.m && ties.size() > 1; ++k) {
      Rational best(0);
      bool have = false;
      std::vector<int> keep;
      for (int r : ties) {
        Rational v = st.lex[r][k] / d[r];
        if (!have || v < best) {
          best = std::move(v);
          have = true;
          keep.assign(1, r);
        } else if (v == best) {
          keep.push_back(r);
        }
      }
      ties.swap(keep);
    }
    leave = ties.front();
    degenerate_run = (theta == 0) ? degenerate_run + 1 : 0;

    // Dual update uses the pre-pivot row of B^-1.
    const Rational scale = enter_rc / d[leave];
    for (int k = 0; k < st.m; ++k)
      if (st.binv[leave][k] != 0) st.y[k] += scale * st.binv[leave][k];

    // Pivot: update inverse, lex matrix, and basic values.
    auto& prow = st.binv[leave];
    auto& lrow = st.lex[leave];
    if (d[leave] != 1) {
      for (auto& v : prow)
        if (v != 0) v /= d[leave];
      for (auto& v : lrow)
        if (v != 0) v /= d[leave];
    }
    std::vector<int> pnz, lnz;
    for (int k = 0; k < st.m; ++k) {
      if (prow[k] != 0) pnz.push_back(k);
      if (lrow[k] != 0) lnz.push_back(k);
    }
    for (int r = 0; r < st.m; ++r) {
      if (r == leave || d[r] == 0) continue;
      auto& row = st.binv[r];
      for (int k : pnz) row[k] -= d[r] * prow[k];
      auto& xrow = st.lex[r];
      for (int k : lnz) xrow[k] -= d[r] * lrow[k];
      st.xb[r] -= d[r] * theta;
    }
    st.xb[leave] = theta;
    st.in_basis[st.basis[leave]] = 0;
    st.in_basis[enter] = 1;
    st.basis[leave] = enter;
  }
}

}  // namespace

LPSolution solve_lp(const StandardFormLP& lp, const SimplexOptions& opts) {
  const int m = lp.n_cons();
  const int n = lp.n_vars();
  if (static_cast<int>(lp.c.size()) != n || static_cast<int>(lp.b.size()) != m ||
      static_cast<int>(lp.A.col_entries.size()) != n)
    throw std::invalid_argument("solve_lp: inconsistent LP dimensions");

  // Row signs flip constraints so that the working rhs is nonnegative.
  std::vector<int> row_sign(m, 1);
  for (int r = 0; r < m; ++r)
    if (lp.b[r] < 0) row_sign[r] = -1;

  std::vector<Column> cols(n);
  for (int j = 0; j < n; ++j) {
    cols[j].reserve(lp.A.col_entries[j].size());
    for (const auto& [i, v] : lp.A.col_entries[j])
      cols[j].emplace_back(i, row_sign[i] < 0 ? -v : v);
  }
  std::vector<Rational> b(m);
  for (int r = 0; r < m; ++r) b[r] = row_sign[r] < 0 ? -lp.b[r] : lp.b[r];

  // Clearing cost denominators keeps duals and reduced costs integral for
  // integral bases, which avoids gcd normalization in the pricing hot path.
  // Scaling by a positive constant changes no pivoting decision; the final
  // objective is recomputed from the original costs.
  Integer cost_scale = 1;
  for (const auto& v : lp.c) cost_scale = lcm(cost_scale, denominator(v));
  std::vector<Rational> scaled_c(lp.c);
  if (cost_scale != 1)
    for (auto& v : scaled_c) v *= cost_scale;

  SimplexState st;
  st.m = m;
  LPSolution sol;

  if (!opts.initial_basis.empty()) {
    if (static_cast<int>(opts.initial_basis.size()) != m)
      throw std::invalid_argument("solve_lp: initial basis size mismatch");
    st.cols = &cols;
    st.costs = scaled_c;
    st.basis = opts.initial_basis;
    st.in_basis.assign(n, 0);
    for (int j : st.basis) st.in_basis[j] = 1;
    st.n_enterable = n;
    // Invert the basis by Gauss-Jordan.
    std::vector<std::vector<Rational>> bmat(m, std::vector<Rational>(m, Rational(0)));
    st.binv.assign(m, std::vector<Rational>(m, Rational(0)));
    for (int r = 0; r < m; ++r) {
      st.binv[r][r] = 1;
      for (const auto& [i, v] : cols[st.basis[r]]) bmat[i][r] = v;
    }
    for (int k = 0; k < m; ++k) {
      int piv = -1;
      for (int r = k; r < m; ++r)
        if (bmat[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::invalid_argument("solve_lp: initial basis is singular");
      std::swap(bmat[piv], bmat[k]);
      std::swap(st.binv[piv], st.binv[k]);
      if (bmat[k][k] != 1) {
        Rational f = bmat[k][k];
        for (int c = 0; c < m; ++c) {
          if (bmat[k][c] != 0) bmat[k][c] /= f;
          if (st.binv[k][c] != 0) st.binv[k][c] /= f;
        }
      }
      for (int r = 0; r < m; ++r) {
        if (r == k || bmat[r][k] == 0) continue;
        Rational f = bmat[r][k];
        for (int c = 0; c < m; ++c) {
          if (bmat[k][c] != 0) bmat[r][c] -= f * bmat[k][c];
          if (st.binv[k][c] != 0) st.binv[r][c] -= f * st.binv[k][c];
        }
      }
    }
    st.xb.assign(m, Rational(0));
    for (int r = 0; r < m; ++r)
      for (int k = 0; k < m; ++k)
        if (st.binv[r][k] != 0 && b[k] != 0) st.xb[r] += st.binv[r][k] * b[k];
    for (const auto& v : st.xb)
      if (v < 0) throw std::invalid_argument("solve_lp: initial basis infeasible");
    st.lex.assign(m, std::vector<Rational>(m, Rational(0)));
    for (int r = 0; r < m; ++r) st.lex[r][r] = 1;
  } else {
    // Phase 1 with artificial variables.
    std::vector<Column> cols1 = cols;
    for (int r = 0; r < m; ++r) cols1.push_back({{r, Rational(1)}});
    st.cols = &cols1;
    st.costs.assign(n + m, Rational(0));
    for (int r = 0; r < m; ++r) st.costs[n + r] = 1;
    st.basis.resize(m);
    st.in_basis.assign(n + m, 0);
    for (int r = 0; r < m; ++r) {
      st.basis[r] = n + r;
      st.in_basis[n + r] = 1;
    }
    st.binv.assign(m, std::vector<Rational>(m, Rational(0)));
    for (int r = 0; r < m; ++r) st.binv[r][r] = 1;
    st.lex = st.binv;
    st.xb = b;
    st.n_enterable = n + m;

    run_simplex(st, opts, sol.iterations);
    Rational phase1(0);
    for (int r = 0; r < m; ++r) phase1 += st.costs[st.basis[r]] * st.xb[r];
    if (phase1 != 0) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Drive artificials out of the basis where possible. Rows where no
    // original column has a nonzero entry are redundant; their artificial
    // stays basic at zero and can never change value.
    for (int r = 0; r < m; ++r) {
      if (st.basis[r] < n) continue;
      for (int j = 0; j < n && st.basis[r] >= n; ++j) {
        if (st.in_basis[j]) continue;
        Rational drj(0);
        for (const auto& [i, v] : cols[j]) drj += st.binv[r][i] * v;
        if (drj == 0) continue;
        // Pivot j in at row r (degenerate: xb[r] == 0).
        std::vector<Rational> d(m, Rational(0));
        for (const auto& [i, v] : cols[j])
          for (int rr = 0; rr < m; ++rr)
            if (st.binv[rr][i] != 0) d[rr] += st.binv[rr][i] * v;
        auto& prow = st.binv[r];
        auto& lrow = st.lex[r];
        if (d[r] != 1) {
          for (auto& v : prow)
            if (v != 0) v /= d[r];
          for (auto& v : lrow)
            if (v != 0) v /= d[r];
        }
        for (int rr = 0; rr < m; ++rr) {
          if (rr == r || d[rr] == 0) continue;
          for (int k = 0; k < m; ++k) {
            if (prow[k] != 0) st.binv[rr][k] -= d[rr] * prow[k];
            if (lrow[k] != 0) st.lex[rr][k] -= d[rr] * lrow[k];
          }
        }
        st.in_basis[st.basis[r]] = 0;
        st.in_basis[j] = 1;
        st.basis[r] = j;
      }
    }
    // Phase 2 setup: original costs, artificials sealed out.
    st.cols = &cols;
    // Keep cols1 alive through phase 2 for basic artificial lookups: swap in
    // a cost vector covering artificial indices with zero cost instead.
    st.costs.assign(n + m, Rational(0));
    for (int j = 0; j < n; ++j) st.costs[j] = scaled_c[j];
    st.n_enterable = n;
    // st.cols must cover basic artificial indices for dual computation; use
    // the extended column set but forbid artificials from entering.
    st.cols = &cols1;
    RunResult rr = run_simplex(st, opts, sol.iterations);
    if (rr == RunResult::Unbounded) {
      sol.status = LPStatus::Unbounded;
      return sol;
    }
    sol.status = LPStatus::Optimal;
    sol.x.assign(n, Rational(0));
    for (int r = 0; r < m; ++r)
      if (st.basis[r] < n) sol.x[st.basis[r]] = st.xb[r];
    sol.objective = 0;
    for (int j = 0; j < n; ++j)
      if (sol.x[j] != 0) sol.objective += lp.c[j] * sol.x[j];
    sol.basis = st.basis;
    return sol;
  }

  // Warm-started path (initial basis supplied).
  RunResult rr = run_simplex(st, opts, sol.iterations);
  if (rr == RunResult::Unbounded) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }
  sol.status = LPStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (int r = 0; r < m; ++r) sol.x[st.basis[r]] = st.xb[r];
  sol.objective = 0;
  for (int j = 0; j < n; ++j)
    if (sol.x[j] != 0) sol.objective += lp.c[j] * sol.x[j];
  sol.basis = st.basis;
  return sol;
}

bool is_integral(const LPSolution& sol) {
  if (sol.status != LPStatus::Optimal)
    throw std::invalid_argument("is_integral: solution is not optimal");
  for (const auto& v : sol.x)
    if (!is_integer(v)) return false;
  return true;
}

}  // namespace medianshape
