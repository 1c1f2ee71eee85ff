#pragma once

#include <map>
#include <span>
#include <vector>

namespace medianshape {

/// Finite simplicial complex with vertex coordinates, oriented simplices per
/// dimension, and Euclidean volumes. Immutable after construction.
///
/// A q-simplex is stored as a tuple of distinct vertex indices; the stored
/// order fixes its orientation (even permutations of the stored order are the
/// positive class). Lookup is by sorted vertex tuple.
class SimplicialComplex {
 public:
  int dim_ambient = 0;
  std::vector<std::vector<double>> vertices;
  // simplices_by_dim[q][i] = vertex tuple of the i-th q-simplex, stored in
  // orientation order (not necessarily sorted).
  std::vector<std::vector<std::vector<int>>> simplices_by_dim;
  std::vector<std::vector<double>> volumes_by_dim;

  int dim() const { return static_cast<int>(simplices_by_dim.size()) - 1; }
  int count(int q) const {
    if (q < 0 || q > dim()) return 0;
    return static_cast<int>(simplices_by_dim[q].size());
  }

  /// Index of the q-simplex with the given vertices (any order), or -1.
  int find(int q, std::vector<int> verts) const;

  /// Recompute lookup tables and volumes from vertices/simplices. Throws
  /// std::invalid_argument on malformed data (bad indices, duplicates).
  void finalize();

  /// Check the closure property: every facet of every simplex is present.
  bool closed() const;

 private:
  std::vector<std::map<std::vector<int>, int>> index_;
};

/// Signed incidence matrix between p- and (p+1)-simplices; entries in
/// {-1,0,+1}, stored column-major.
struct BoundaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> col_entries;  // (row, sign)

  int entry(int i, int j) const {
    for (auto& [r, s] : col_entries[j])
      if (r == i) return s;
    return 0;
  }
};

/// q-dimensional Euclidean volume of the simplex spanned by q+1 points:
/// sqrt(det(G^T G)) / q! with G the matrix of edge vectors. Degenerate
/// simplices return 0.
double simplex_volume(const std::vector<std::vector<double>>& coords);

/// The (p+1)-boundary matrix [d_{p+1}] of K.
BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int p);

/// Triangulated rectangle: (nx+1)(ny+1) vertices, each cell split along its
/// lower-left to upper-right diagonal, triangles oriented counterclockwise.
SimplicialComplex build_grid_2d(int nx, int ny, double width, double height);

/// Box tetrahedralized with 6 tetrahedra per cube (Kuhn triangulation).
SimplicialComplex build_grid_3d(int nx, int ny, int nz, double ex, double ey, double ez);

/// Add every missing face of every simplex (sorted vertex tuples), then
/// finalize. Used by loaders that auto-complete closure.
void complete_closure(SimplicialComplex& K);

}  // namespace medianshape
