#include "medianshape/median.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace medianshape {

void MedianProblem::validate() const {
  if (K == nullptr) throw std::invalid_argument("median: no complex");
  if (inputs.empty()) throw std::invalid_argument("median: need at least one input chain");
  if (lambda < 0 || mu < 0) throw std::invalid_argument("median: lambda, mu must be >= 0");
  const int p = inputs.front().dim;
  for (const auto& t : inputs) {
    if (t.dim != p || static_cast<int>(t.coeffs.size()) != K->count(p))
      throw std::invalid_argument("median: input chain dimension mismatch");
  }
  if (p + 1 > K->dim() || K->count(p + 1) == 0)
    throw std::invalid_argument("median: complex has no (p+1)-simplices");
  if (!alpha.empty() && static_cast<int>(alpha.size()) != n_inputs())
    throw std::invalid_argument("median: alpha length mismatch");
  for (double a : effective_alpha())
    if (a < 0) throw std::invalid_argument("median: alpha must be >= 0");
}

namespace {

struct Layout {
  int m, n, N;
  int block() const { return 2 * m + 2 * n; }
  int t_plus(int i) const { return i; }
  int t_minus(int i) const { return m + i; }
  int r_plus(int h, int i) const { return 2 * m + h * block() + i; }
  int r_minus(int h, int i) const { return 2 * m + h * block() + m + i; }
  int s_plus(int h, int j) const { return 2 * m + h * block() + 2 * m + j; }
  int s_minus(int h, int j) const { return 2 * m + h * block() + 2 * m + n + j; }
  int n_vars() const { return 2 * m + N * block(); }
  int n_cons() const { return N * m; }
  int row(int h, int i) const { return h * m + i; }
};

Layout layout_for(const MedianProblem& prob) {
  const int p = prob.inputs.front().dim;
  return Layout{prob.K->count(p), prob.K->count(p + 1), prob.n_inputs()};
}

}  // namespace

StandardFormLP assemble_median_lp(const MedianProblem& prob) {
  prob.validate();
  const int p = prob.inputs.front().dim;
  const Layout L = layout_for(prob);
  const BoundaryMatrix B = boundary_matrix(*prob.K, p);
  const std::vector<Rational> w = rational_volumes(*prob.K, p, prob.sig_digits);
  const std::vector<Rational> v = rational_volumes(*prob.K, p + 1, prob.sig_digits);
  const Rational lam = rationalize(prob.lambda, prob.sig_digits);
  const Rational mu = rationalize(prob.mu, prob.sig_digits);
  std::vector<Rational> al;
  for (double a : prob.effective_alpha()) al.push_back(rationalize(a, prob.sig_digits));

  StandardFormLP lp;
  lp.A.rows = L.n_cons();
  lp.A.cols = L.n_vars();
  lp.A.col_entries.resize(lp.A.cols);
  lp.c.assign(lp.A.cols, Rational(0));
  lp.b.resize(lp.A.rows);

  for (int i = 0; i < L.m; ++i) {
    lp.c[L.t_plus(i)] = mu * w[i];
    lp.c[L.t_minus(i)] = mu * w[i];
  }
  for (int h = 0; h < L.N; ++h) {
    for (int i = 0; i < L.m; ++i) {
      lp.A.add(L.row(h, i), L.t_plus(i), Rational(1));
      lp.A.add(L.row(h, i), L.t_minus(i), Rational(-1));
      lp.A.add(L.row(h, i), L.r_plus(h, i), Rational(-1));
      lp.A.add(L.row(h, i), L.r_minus(h, i), Rational(1));
      lp.c[L.r_plus(h, i)] = al[h] * w[i];
      lp.c[L.r_minus(h, i)] = al[h] * w[i];
      lp.b[L.row(h, i)] = Rational(prob.inputs[h].coeffs[i]);
    }
    for (int j = 0; j < L.n; ++j) {
      for (const auto& [i, sign] : B.col_entries[j]) {
        lp.A.add(L.row(h, i), L.s_plus(h, j), Rational(-sign));
        lp.A.add(L.row(h, i), L.s_minus(h, j), Rational(sign));
      }
      lp.c[L.s_plus(h, j)] = al[h] * lam * v[j];
      lp.c[L.s_minus(h, j)] = al[h] * lam * v[j];
    }
  }
  return lp;
}

MedianSolution solve_median(const MedianProblem& prob) {
  prob.validate();
  const int p = prob.inputs.front().dim;
  const Layout L = layout_for(prob);
  StandardFormLP lp = assemble_median_lp(prob);

  // Feasible crash basis: t = 0, r_h = -t_h, met by one signed r column per
  // row. Skips phase 1 entirely.
  SimplexOptions opts;
  opts.initial_basis.resize(L.n_cons());
  for (int h = 0; h < L.N; ++h)
    for (int i = 0; i < L.m; ++i)
      opts.initial_basis[L.row(h, i)] =
          (prob.inputs[h].coeffs[i] >= 0) ? L.r_minus(h, i) : L.r_plus(h, i);

  LPSolution sol = solve_lp(lp, opts);
  assert(sol.status == LPStatus::Optimal);  // infeasibility impossible by construction
  if (!is_integral(sol)) throw FractionalOptimumError(sol.x, sol.objective);

  auto as_int = [&](int idx_plus, int idx_minus) {
    return (numerator(sol.x[idx_plus]) - numerator(sol.x[idx_minus])).convert_to<std::int64_t>();
  };

  MedianSolution out;
  out.lp_iterations = sol.iterations;
  out.objective = sol.objective;
  out.integral = true;
  out.t_hat = zero_chain(*prob.K, p);
  for (int i = 0; i < L.m; ++i) out.t_hat.coeffs[i] = as_int(L.t_plus(i), L.t_minus(i));
  for (int h = 0; h < L.N; ++h) {
    Chain r = zero_chain(*prob.K, p);
    Chain s = zero_chain(*prob.K, p + 1);
    for (int i = 0; i < L.m; ++i) r.coeffs[i] = as_int(L.r_plus(h, i), L.r_minus(h, i));
    for (int j = 0; j < L.n; ++j) s.coeffs[j] = as_int(L.s_plus(h, j), L.s_minus(h, j));
    out.per_input.emplace_back(std::move(r), std::move(s));
  }
  return out;
}

Rational evaluate_objective(const MedianProblem& prob, const Chain& t_hat,
                            const std::vector<std::pair<Chain, Chain>>& per_input) {
  prob.validate();
  const int p = prob.inputs.front().dim;
  if (static_cast<int>(per_input.size()) != prob.n_inputs())
    throw std::invalid_argument("evaluate_objective: per_input count mismatch");
  const BoundaryMatrix B = boundary_matrix(*prob.K, p);
  for (int h = 0; h < prob.n_inputs(); ++h) {
    const auto& [r, s] = per_input[h];
    // t_hat - t_h = r_h + B s_h, exact over the integers.
    Chain lhs = t_hat - prob.inputs[h] - r;
    for (int j = 0; j < B.cols; ++j) {
      if (s.coeffs[j] == 0) continue;
      for (const auto& [i, sign] : B.col_entries[j]) lhs.coeffs[i] -= sign * s.coeffs[j];
    }
    if (!lhs.is_zero())
      throw std::invalid_argument("evaluate_objective: homology constraint violated");
  }

  const std::vector<Rational> w = rational_volumes(*prob.K, p, prob.sig_digits);
  const std::vector<Rational> v = rational_volumes(*prob.K, p + 1, prob.sig_digits);
  const Rational lam = rationalize(prob.lambda, prob.sig_digits);
  const Rational mu = rationalize(prob.mu, prob.sig_digits);
  std::vector<Rational> al;
  for (double a : prob.effective_alpha()) al.push_back(rationalize(a, prob.sig_digits));

  Rational total(0);
  for (size_t i = 0; i < t_hat.coeffs.size(); ++i)
    if (t_hat.coeffs[i] != 0) total += mu * w[i] * std::llabs(t_hat.coeffs[i]);
  for (int h = 0; h < prob.n_inputs(); ++h) {
    const auto& [r, s] = per_input[h];
    Rational d(0);
    for (size_t i = 0; i < r.coeffs.size(); ++i)
      if (r.coeffs[i] != 0) d += w[i] * std::llabs(r.coeffs[i]);
    for (size_t j = 0; j < s.coeffs.size(); ++j)
      if (s.coeffs[j] != 0) d += lam * v[j] * std::llabs(s.coeffs[j]);
    total += al[h] * d;
  }
  return total;
}

MedianSolution brute_force_median(const MedianProblem& prob, std::int64_t coeff_bound) {
  prob.validate();
  const int p = prob.inputs.front().dim;
  std::set<int> support_set;
  for (const auto& t : prob.inputs)
    for (int i : t.support()) support_set.insert(i);
  std::vector<int> support(support_set.begin(), support_set.end());

  const std::int64_t radix = 2 * coeff_bound + 1;
  double space = std::pow(static_cast<double>(radix), static_cast<double>(support.size()));
  if (space > 1e6) throw std::invalid_argument("brute_force_median: search space too large");

  const std::vector<Rational> w = rational_volumes(*prob.K, p, prob.sig_digits);
  const Rational mu = rationalize(prob.mu, prob.sig_digits);
  std::vector<Rational> al;
  for (double a : prob.effective_alpha()) al.push_back(rationalize(a, prob.sig_digits));

  MedianSolution best;
  bool have_best = false;
  std::vector<std::int64_t> coeff(support.size(), -coeff_bound);
  while (true) {
    Chain t_hat = zero_chain(*prob.K, p);
    for (size_t k = 0; k < support.size(); ++k) t_hat.coeffs[support[k]] = coeff[k];
    Rational val(0);
    for (size_t i = 0; i < t_hat.coeffs.size(); ++i)
      if (t_hat.coeffs[i] != 0) val += mu * w[i] * std::llabs(t_hat.coeffs[i]);
    std::vector<std::pair<Chain, Chain>> per_input;
    for (int h = 0; h < prob.n_inputs(); ++h) {
      FlatNormDecomposition d = brute_force_flat_norm(*prob.K, t_hat - prob.inputs[h],
                                                      prob.lambda, coeff_bound, prob.sig_digits);
      val += al[h] * d.value;
      per_input.emplace_back(std::move(d.x), std::move(d.s));
    }
    if (!have_best || val < best.objective) {
      have_best = true;
      best.objective = val;
      best.t_hat = std::move(t_hat);
      best.per_input = std::move(per_input);
    }
    size_t carry = 0;
    while (carry < coeff.size() && coeff[carry] == coeff_bound) coeff[carry++] = -coeff_bound;
    if (carry == coeff.size()) break;
    ++coeff[carry];
  }
  best.integral = true;
  return best;
}

std::set<int> envelope_support(const MedianProblem& prob) {
  prob.validate();
  std::set<int> env;
  const int N = prob.n_inputs();
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      Chain diff = prob.inputs[i] - prob.inputs[j];
      if (diff.is_zero()) continue;
      double lam = prob.lambda;
      bool filled = false;
      for (int halvings = 0; halvings <= 40; ++halvings) {
        FlatNormDecomposition d = flat_norm(*prob.K, diff, lam, prob.sig_digits);
        if (d.x.is_zero()) {
          for (int idx : d.s.support()) env.insert(idx);
          filled = true;
          break;
        }
        lam /= 2;
      }
      if (!filled)
        throw EnvelopeError("envelope_support: pairwise difference never fills; envelope undefined");
    }
  }
  return env;
}

std::set<int> envelope_closure_edges(const MedianProblem& prob) {
  const int p = prob.inputs.front().dim;
  std::set<int> env = envelope_support(prob);
  std::set<int> edges;
  for (int tri : env) {
    const auto& s = prob.K->simplices_by_dim[p + 1][tri];
    for (size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face;
      for (size_t t = 0; t < s.size(); ++t)
        if (t != drop) face.push_back(s[t]);
      int e = prob.K->find(p, face);
      if (e >= 0) edges.insert(e);
    }
  }
  // Edges where every input carries the same coefficient are shared; the
  // median may coincide with the inputs there.
  for (int i = 0; i < prob.K->count(p); ++i) {
    bool shared = true;
    for (const auto& t : prob.inputs)
      if (t.coeffs[i] != prob.inputs.front().coeffs[i]) shared = false;
    if (shared && prob.inputs.front().coeffs[i] != 0) edges.insert(i);
  }
  return edges;
}

std::vector<std::pair<std::vector<double>, MedianSolution>> interpolation_sweep(
    const MedianProblem& prob, int steps) {
  prob.validate();
  if (prob.n_inputs() != 2)
    throw std::invalid_argument("interpolation_sweep: exactly 2 inputs required");
  if (steps < 1) throw std::invalid_argument("interpolation_sweep: steps must be >= 1");
  std::vector<std::pair<std::vector<double>, MedianSolution>> out;
  for (int k = 0; k <= steps; ++k) {
    MedianProblem sub = prob;
    double a2 = static_cast<double>(k) / steps;
    sub.alpha = {1.0 - a2, a2};
    out.emplace_back(sub.alpha, solve_median(sub));
  }
  return out;
}

}  // namespace medianshape
