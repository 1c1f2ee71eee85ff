#include "medianshape/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace medianshape {

Chain zero_chain(const SimplicialComplex& K, int p) {
  Chain c;
  c.dim = p;
  c.coeffs.assign(K.count(p), 0);
  return c;
}

Chain operator+(const Chain& a, const Chain& b) {
  if (a.dim != b.dim || a.coeffs.size() != b.coeffs.size())
    throw std::invalid_argument("chain dimension mismatch");
  Chain r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Chain operator-(const Chain& a, const Chain& b) { return a + (-b); }

Chain operator-(const Chain& a) {
  Chain r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

bool operator==(const Chain& a, const Chain& b) {
  return a.dim == b.dim && a.coeffs == b.coeffs;
}

Chain apply_boundary(const SimplicialComplex& K, const Chain& c) {
  if (c.dim < 1) throw std::invalid_argument("apply_boundary: needs dim >= 1");
  BoundaryMatrix B = boundary_matrix(K, c.dim - 1);
  Chain r = zero_chain(K, c.dim - 1);
  for (int j = 0; j < B.cols; ++j) {
    if (c.coeffs[j] == 0) continue;
    for (auto& [i, sign] : B.col_entries[j]) r.coeffs[i] += sign * c.coeffs[j];
  }
  return r;
}

double mass(const SimplicialComplex& K, const Chain& c) {
  double total = 0;
  for (size_t i = 0; i < c.coeffs.size(); ++i)
    total += K.volumes_by_dim[c.dim][i] * std::llabs(c.coeffs[i]);
  return total;
}

namespace {

int nearest_vertex(const SimplicialComplex& K, const std::vector<double>& p) {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int v = 0; v < static_cast<int>(K.vertices.size()); ++v) {
    double d = 0;
    for (int c = 0; c < K.dim_ambient; ++c) {
      double diff = K.vertices[v][c] - (c < static_cast<int>(p.size()) ? p[c] : 0.0);
      d += diff * diff;
    }
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

}  // namespace

Chain snap_polyline(const SimplicialComplex& K, const std::vector<std::vector<double>>& points) {
  if (K.dim() < 1) throw std::invalid_argument("snap_polyline: complex has no edges");
  if (points.size() < 2) throw std::invalid_argument("snap_polyline: need at least 2 points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != K.dim_ambient)
      throw std::invalid_argument("snap_polyline: point arity does not match the ambient dimension");

  const int nv = static_cast<int>(K.vertices.size());
  const int ne = K.count(1);
  // Vertex adjacency over the 1-skeleton: (neighbor, edge index).
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (int e = 0; e < ne; ++e) {
    const auto& s = K.simplices_by_dim[1][e];
    adj[s[0]].emplace_back(s[1], e);
    adj[s[1]].emplace_back(s[0], e);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  Chain result = zero_chain(K, 1);
  int prev = nearest_vertex(K, points.front());
  for (size_t pt = 1; pt < points.size(); ++pt) {
    int target = nearest_vertex(K, points[pt]);
    if (target == prev) continue;

    std::vector<double> dist(nv, std::numeric_limits<double>::infinity());
    std::vector<int> pred_vertex(nv, -1), pred_edge(nv, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[prev] = 0;
    pq.emplace(0.0, prev);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      for (auto& [v, e] : adj[u]) {
        double nd = d + K.volumes_by_dim[1][e];
        if (nd < dist[v] || (nd == dist[v] && pred_vertex[v] > u)) {
          dist[v] = nd;
          pred_vertex[v] = u;
          pred_edge[v] = e;
          pq.emplace(nd, v);
        }
      }
    }
    if (pred_vertex[target] == -1)
      throw UnreachableError("snap_polyline: target vertex unreachable");
    for (int v = target; v != prev; v = pred_vertex[v]) {
      int e = pred_edge[v];
      // Edge stored (u0, u1); traversal u0 -> u1 counts +1.
      result.coeffs[e] += (K.simplices_by_dim[1][e][1] == v) ? +1 : -1;
    }
    prev = target;
  }
  return result;
}

bool shares_boundary(const SimplicialComplex& K, const Chain& a, const Chain& b) {
  if (a.dim != b.dim) throw std::invalid_argument("shares_boundary: dimension mismatch");
  if (a.dim < 1) throw std::invalid_argument("shares_boundary: needs dim >= 1");
  return apply_boundary(K, a) == apply_boundary(K, b);
}

}  // namespace medianshape
