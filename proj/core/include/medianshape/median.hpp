#pragma once

#include "medianshape/flatnorm.hpp"

#include <set>
#include <vector>

namespace medianshape {

/// Inputs of the (mass-regularized, weighted) median shape problem: N
/// p-chains t_h on one complex, scale lambda, regularization mu, and
/// per-input weights alpha.
struct MedianProblem {
  const SimplicialComplex* K = nullptr;
  std::vector<Chain> inputs;
  double lambda = 1e-3;
  double mu = 1e-5;
  std::vector<double> alpha;  // empty means all ones
  int sig_digits = 12;

  int n_inputs() const { return static_cast<int>(inputs.size()); }
  std::vector<double> effective_alpha() const {
    return alpha.empty() ? std::vector<double>(inputs.size(), 1.0) : alpha;
  }
  void validate() const;
};

struct MedianSolution {
  Chain t_hat;
  std::vector<std::pair<Chain, Chain>> per_input;  // (r_h, s_h)
  Rational objective;
  bool integral = true;
  std::int64_t lp_iterations = 0;
};

struct EnvelopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Standard-form LP with variable layout
/// [t+ t- | r1+ r1- s1+ s1- | ... | rN+ rN- sN+ sN-], one constraint block
/// t - t_h = (r_h+ - r_h-) + B(s_h+ - s_h-) per input, and objective
/// [mu.w mu.w | alpha_h (w w lambda.v lambda.v) ...].
StandardFormLP assemble_median_lp(const MedianProblem& prob);

/// Solve the median LP exactly and reconstruct the chains from the split
/// variables. Throws FractionalOptimumError when the vertex optimum is not
/// integral.
MedianSolution solve_median(const MedianProblem& prob);

/// mu.sum_i w_i|t_i| + sum_h alpha_h (sum_i w_i|r_hi| + lambda sum_j v_j|s_hj|),
/// exact. Verifies t_hat - t_h = r_h + B s_h for every h and throws on
/// violation.
Rational evaluate_objective(const MedianProblem& prob, const Chain& t_hat,
                            const std::vector<std::pair<Chain, Chain>>& per_input);

/// Exhaustive minimum over candidate medians with support restricted to the
/// union of input supports and coefficients bounded by coeff_bound;
/// per-input distances via brute_force_flat_norm. Test oracle only.
MedianSolution brute_force_median(const MedianProblem& prob, std::int64_t coeff_bound);

/// Discrete envelope: for each input pair, the support of the (p+1)-chain
/// filling their difference (lambda halved until the flat-norm decomposition
/// leaves no residual p-chain), united over pairs. Throws EnvelopeError when
/// some pairwise difference never fills.
std::set<int> envelope_support(const MedianProblem& prob);

/// Edges of the envelope triangles plus edges on which all inputs carry the
/// same coefficient; the discrete closure used for containment checks.
std::set<int> envelope_closure_edges(const MedianProblem& prob);

/// Weighted medians at alpha = (1-k/steps, k/steps), k = 0..steps. N must
/// be 2; endpoints reproduce the inputs when mu = 0.
std::vector<std::pair<std::vector<double>, MedianSolution>> interpolation_sweep(
    const MedianProblem& prob, int steps);

}  // namespace medianshape
