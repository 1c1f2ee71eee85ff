#pragma once

#include "medianshape/complex.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace medianshape {

/// Integer p-chain: one coefficient per p-simplex of its complex.
struct Chain {
  int dim = 0;
  std::vector<std::int64_t> coeffs;

  bool is_zero() const {
    for (auto c : coeffs)
      if (c != 0) return false;
    return true;
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
      if (coeffs[i] != 0) s.push_back(i);
    return s;
  }
};

Chain zero_chain(const SimplicialComplex& K, int p);

Chain operator+(const Chain& a, const Chain& b);
Chain operator-(const Chain& a, const Chain& b);
Chain operator-(const Chain& a);
bool operator==(const Chain& a, const Chain& b);

/// [d_p] c, an integer (p-1)-chain.
Chain apply_boundary(const SimplicialComplex& K, const Chain& c);

/// Weighted l1 mass: sum_i V_p(sigma_i) |c_i|.
double mass(const SimplicialComplex& K, const Chain& c);

struct UnreachableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Snap an ordered polyline onto the 1-skeleton: each point goes to its
/// nearest vertex, consecutive snapped vertices are joined by a shortest edge
/// path (Dijkstra over edge lengths, ties broken toward the smaller vertex
/// index), and traversal-signed coefficients are summed into a 1-chain.
/// Throws UnreachableError when a leg has no path.
Chain snap_polyline(const SimplicialComplex& K, const std::vector<std::vector<double>>& points);

/// True iff the two chains have exactly equal boundaries.
bool shares_boundary(const SimplicialComplex& K, const Chain& a, const Chain& b);

}  // namespace medianshape
