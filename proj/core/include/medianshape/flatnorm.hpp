#pragma once

#include "medianshape/chain.hpp"
#include "medianshape/lp.hpp"

#include <stdexcept>
#include <vector>

namespace medianshape {

/// Raised when an LP optimum that should be integral is fractional; carries
/// the exact rational optimum for inspection. Never silently rounded.
struct FractionalOptimumError : std::runtime_error {
  std::vector<Rational> x;
  Rational objective;
  FractionalOptimumError(std::vector<Rational> x_, Rational obj)
      : std::runtime_error("LP optimum is fractional"), x(std::move(x_)), objective(std::move(obj)) {}
};

/// Decomposition t = x + [d_{p+1}] s minimizing the lambda-scaled sum of
/// weighted volumes of x and s.
struct FlatNormDecomposition {
  Chain x;
  Chain s;
  Rational value;
  Rational lambda;
};

/// Rationalized simplex volumes of dimension q (decimal rounding at
/// sig_digits significant digits). All LP data flows through this so exact
/// checks stay consistent.
std::vector<Rational> rational_volumes(const SimplicialComplex& K, int q, int sig_digits = 12);

/// Multiscale simplicial flat norm of the p-chain t at scale lambda, via the
/// +/- variable-splitting LP over exact rationals.
FlatNormDecomposition flat_norm(const SimplicialComplex& K, const Chain& t, double lambda,
                                int sig_digits = 12);

/// Exhaustive minimum over (p+1)-chains s with |s_j| <= coeff_bound; the
/// p-chain x is determined by s. Test oracle; guards its search space.
FlatNormDecomposition brute_force_flat_norm(const SimplicialComplex& K, const Chain& t,
                                            double lambda, std::int64_t coeff_bound,
                                            int sig_digits = 12);

}  // namespace medianshape
