#include "medianshape/flatnorm.hpp"

#include <cmath>
#include <stdexcept>

namespace medianshape {

std::vector<Rational> rational_volumes(const SimplicialComplex& K, int q, int sig_digits) {
  std::vector<Rational> w;
  w.reserve(K.count(q));
  for (double v : K.volumes_by_dim[q]) w.push_back(rationalize(v, sig_digits));
  return w;
}

FlatNormDecomposition flat_norm(const SimplicialComplex& K, const Chain& t, double lambda,
                                int sig_digits) {
  if (lambda < 0) throw std::invalid_argument("flat_norm: lambda must be >= 0");
  const int p = t.dim;
  if (p + 1 > K.dim() || K.count(p + 1) == 0)
    throw std::invalid_argument("flat_norm: complex has no (p+1)-simplices");
  if (static_cast<int>(t.coeffs.size()) != K.count(p))
    throw std::invalid_argument("flat_norm: chain length mismatch");

  const int m = K.count(p);
  const int n = K.count(p + 1);
  const BoundaryMatrix B = boundary_matrix(K, p);
  const std::vector<Rational> w = rational_volumes(K, p, sig_digits);
  const std::vector<Rational> v = rational_volumes(K, p + 1, sig_digits);
  const Rational lam = rationalize(lambda, sig_digits);

  // Variables [x+ x- s+ s-]; rows: x+ - x- + B(s+ - s-) = t.
  StandardFormLP lp;
  lp.A.rows = m;
  lp.A.cols = 2 * m + 2 * n;
  lp.A.col_entries.resize(lp.A.cols);
  lp.c.resize(lp.A.cols);
  lp.b.resize(m);
  for (int i = 0; i < m; ++i) {
    lp.A.add(i, i, Rational(1));
    lp.A.add(i, m + i, Rational(-1));
    lp.c[i] = w[i];
    lp.c[m + i] = w[i];
    lp.b[i] = Rational(t.coeffs[i]);
  }
  for (int j = 0; j < n; ++j) {
    for (const auto& [i, sign] : B.col_entries[j]) {
      lp.A.add(i, 2 * m + j, Rational(sign));
      lp.A.add(i, 2 * m + n + j, Rational(-sign));
    }
    lp.c[2 * m + j] = lam * v[j];
    lp.c[2 * m + n + j] = lam * v[j];
  }

  SimplexOptions opts;
  opts.initial_basis.resize(m);
  for (int i = 0; i < m; ++i) opts.initial_basis[i] = (t.coeffs[i] >= 0) ? i : m + i;
  LPSolution sol = solve_lp(lp, opts);
  if (sol.status != LPStatus::Optimal)
    throw std::logic_error("flat_norm: LP must be feasible and bounded");
  if (!is_integral(sol)) throw FractionalOptimumError(sol.x, sol.objective);

  FlatNormDecomposition out;
  out.lambda = lam;
  out.value = sol.objective;
  out.x = zero_chain(K, p);
  out.s = zero_chain(K, p + 1);
  for (int i = 0; i < m; ++i)
    out.x.coeffs[i] = (numerator(sol.x[i]) - numerator(sol.x[m + i])).convert_to<std::int64_t>();
  for (int j = 0; j < n; ++j)
    out.s.coeffs[j] =
        (numerator(sol.x[2 * m + j]) - numerator(sol.x[2 * m + n + j])).convert_to<std::int64_t>();
  return out;
}

FlatNormDecomposition brute_force_flat_norm(const SimplicialComplex& K, const Chain& t,
                                            double lambda, std::int64_t coeff_bound,
                                            int sig_digits) {
  const int p = t.dim;
  const int m = K.count(p);
  const int n = K.count(p + 1);
  const std::int64_t radix = 2 * coeff_bound + 1;
  double space = std::pow(static_cast<double>(radix), n);
  if (space > 1e7) throw std::invalid_argument("brute_force_flat_norm: search space too large");

  const BoundaryMatrix B = boundary_matrix(K, p);
  const std::vector<Rational> w = rational_volumes(K, p, sig_digits);
  const std::vector<Rational> v = rational_volumes(K, p + 1, sig_digits);
  const Rational lam = rationalize(lambda, sig_digits);

  FlatNormDecomposition best;
  bool have_best = false;
  std::vector<std::int64_t> s(n, -coeff_bound);
  while (true) {
    Rational val(0);
    Chain x = t;
    for (int j = 0; j < n; ++j) {
      if (s[j] == 0) continue;
      val += lam * v[j] * std::llabs(s[j]);
      for (const auto& [i, sign] : B.col_entries[j]) x.coeffs[i] -= sign * s[j];
    }
    for (int i = 0; i < m; ++i)
      if (x.coeffs[i] != 0) val += w[i] * std::llabs(x.coeffs[i]);
    if (!have_best || val < best.value) {
      have_best = true;
      best.value = val;
      best.x = x;
      best.s = zero_chain(K, p + 1);
      best.s.coeffs = s;
      best.lambda = lam;
    }
    int carry = 0;
    while (carry < n && s[carry] == coeff_bound) s[carry++] = -coeff_bound;
    if (carry == n) break;
    ++s[carry];
  }
  return best;
}

}  // namespace medianshape
