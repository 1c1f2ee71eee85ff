#include "medianshape/complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace medianshape {

namespace {

// Parity of the permutation taking sequence `from` to sequence `to`
// (same elements, distinct). Returns +1 or -1.
int permutation_sign(const std::vector<int>& from, const std::vector<int>& to) {
  const int n = static_cast<int>(from.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    perm[i] = static_cast<int>(it - to.begin());
  }
  int sign = 1;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

int SimplicialComplex::find(int q, std::vector<int> verts) const {
  if (q < 0 || q >= static_cast<int>(index_.size())) return -1;
  std::sort(verts.begin(), verts.end());
  auto it = index_[q].find(verts);
  return it == index_[q].end() ? -1 : it->second;
}

void SimplicialComplex::finalize() {
  const int nv = static_cast<int>(vertices.size());
  for (auto& v : vertices)
    if (static_cast<int>(v.size()) != dim_ambient)
      throw std::invalid_argument("vertex coordinate arity mismatch");

  index_.assign(simplices_by_dim.size(), {});
  volumes_by_dim.assign(simplices_by_dim.size(), {});
  for (int q = 0; q <= dim(); ++q) {
    volumes_by_dim[q].reserve(simplices_by_dim[q].size());
    for (int i = 0; i < count(q); ++i) {
      const auto& s = simplices_by_dim[q][i];
      if (static_cast<int>(s.size()) != q + 1)
        throw std::invalid_argument("simplex vertex count mismatch");
      std::vector<int> key = s;
      std::sort(key.begin(), key.end());
      for (int v : key)
        if (v < 0 || v >= nv) throw std::invalid_argument("vertex index out of range");
      if (std::adjacent_find(key.begin(), key.end()) != key.end())
        throw std::invalid_argument("repeated vertex in simplex");
      if (!index_[q].emplace(std::move(key), i).second)
        throw std::invalid_argument("duplicate simplex");
      std::vector<std::vector<double>> coords;
      coords.reserve(s.size());
      for (int v : s) coords.push_back(vertices[v]);
      volumes_by_dim[q].push_back(simplex_volume(coords));
    }
  }
}

bool SimplicialComplex::closed() const {
  for (int q = 1; q <= dim(); ++q) {
    for (const auto& s : simplices_by_dim[q]) {
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> face;
        for (size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        if (find(q - 1, face) < 0) return false;
      }
    }
  }
  return true;
}

double simplex_volume(const std::vector<std::vector<double>>& coords) {
  const int q = static_cast<int>(coords.size()) - 1;
  if (q < 0) throw std::invalid_argument("empty point list");
  if (q == 0) return 1.0;  // a point carries unit 0-volume
  const int d = static_cast<int>(coords[0].size());
  // Edge vectors from the first point.
  std::vector<std::vector<double>> g(q, std::vector<double>(d));
  for (int i = 0; i < q; ++i)
    for (int c = 0; c < d; ++c) g[i][c] = coords[i + 1][c] - coords[0][c];
  // Gram matrix G G^T, then Cholesky-free determinant via Gaussian elimination.
  std::vector<std::vector<double>> gram(q, std::vector<double>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      double acc = 0;
      for (int c = 0; c < d; ++c) acc += g[i][c] * g[j][c];
      gram[i][j] = acc;
    }
  double det = 1.0;
  for (int k = 0; k < q; ++k) {
    int piv = k;
    for (int r = k + 1; r < q; ++r)
      if (std::fabs(gram[r][k]) > std::fabs(gram[piv][k])) piv = r;
    if (gram[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap(gram[piv], gram[k]);
      det = -det;
    }
    det *= gram[k][k];
    for (int r = k + 1; r < q; ++r) {
      double f = gram[r][k] / gram[k][k];
      for (int c = k; c < q; ++c) gram[r][c] -= f * gram[k][c];
    }
  }
  if (det <= 0.0) return 0.0;
  double fact = 1.0;
  for (int i = 2; i <= q; ++i) fact *= i;
  return std::sqrt(det) / fact;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& K, int p) {
  if (p < 0 || p >= K.dim()) throw std::invalid_argument("boundary_matrix: p out of range");
  BoundaryMatrix B;
  B.rows = K.count(p);
  B.cols = K.count(p + 1);
  B.col_entries.resize(B.cols);
  for (int j = 0; j < B.cols; ++j) {
    const auto& s = K.simplices_by_dim[p + 1][j];
    for (size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face;
      for (size_t t = 0; t < s.size(); ++t)
        if (t != drop) face.push_back(s[t]);
      int i = K.find(p, face);
      if (i < 0) throw std::invalid_argument("boundary_matrix: complex not closed");
      int sign = (drop % 2 == 0) ? 1 : -1;
      sign *= permutation_sign(face, K.simplices_by_dim[p][i]);
      B.col_entries[j].emplace_back(i, sign);
    }
  }
  return B;
}

namespace {

// Add all faces of the given top simplices, one dimension at a time.
// Faces are stored with sorted vertex tuples.
void close_complex(SimplicialComplex& K) {
  for (int q = K.dim(); q >= 1; --q) {
    std::set<std::vector<int>> seen;
    for (const auto& s : K.simplices_by_dim[q - 1]) {
      std::vector<int> key = s;
      std::sort(key.begin(), key.end());
      seen.insert(std::move(key));
    }
    for (const auto& s : K.simplices_by_dim[q]) {
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> face;
        for (size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        std::sort(face.begin(), face.end());
        if (seen.insert(face).second) K.simplices_by_dim[q - 1].push_back(face);
      }
    }
  }
}

}  // namespace

void complete_closure(SimplicialComplex& K) {
  close_complex(K);
  K.finalize();
}

SimplicialComplex build_grid_2d(int nx, int ny, double width, double height) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("build_grid_2d: grid dimensions must be >= 1");
  if (width <= 0 || height <= 0) throw std::invalid_argument("build_grid_2d: extents must be > 0");
  SimplicialComplex K;
  K.dim_ambient = 2;
  const double dx = width / nx, dy = height / ny;
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) K.vertices.push_back({i * dx, j * dy});
  K.simplices_by_dim.resize(3);
  for (int i = 0; i < static_cast<int>(K.vertices.size()); ++i)
    K.simplices_by_dim[0].push_back({i});
  auto vid = [&](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      int a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1), d = vid(i, j + 1);
      // Diagonal a-c; both triangles counterclockwise.
      K.simplices_by_dim[2].push_back({a, b, c});
      K.simplices_by_dim[2].push_back({a, c, d});
    }
  }
  close_complex(K);
  K.finalize();
  return K;
}

SimplicialComplex build_grid_3d(int nx, int ny, int nz, double ex, double ey, double ez) {
  if (nx < 1 || ny < 1 || nz < 1)
    throw std::invalid_argument("build_grid_3d: grid dimensions must be >= 1");
  if (ex <= 0 || ey <= 0 || ez <= 0) throw std::invalid_argument("build_grid_3d: extents must be > 0");
  SimplicialComplex K;
  K.dim_ambient = 3;
  const double dx = ex / nx, dy = ey / ny, dz = ez / nz;
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) K.vertices.push_back({i * dx, j * dy, k * dz});
  K.simplices_by_dim.resize(4);
  for (int i = 0; i < static_cast<int>(K.vertices.size()); ++i)
    K.simplices_by_dim[0].push_back({i});
  auto vid = [&](int i, int j, int k) { return (k * (ny + 1) + j) * (nx + 1) + i; };
  // Kuhn triangulation: one tetrahedron per permutation of the axes, walking
  // from the low corner to the high corner of each cube.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        for (const auto& perm : perms) {
          int step[3] = {0, 0, 0};
          std::vector<int> tet = {vid(i, j, k)};
          for (int axis : perm) {
            step[axis] = 1;
            tet.push_back(vid(i + step[0], j + step[1], k + step[2]));
          }
          K.simplices_by_dim[3].push_back(tet);
        }
      }
    }
  }
  close_complex(K);
  K.finalize();
  return K;
}

}  // namespace medianshape
