#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace medianshape {

/// k-regular multigraph with a proper k-edge-coloring (a 1-factorization
/// witness). Parallel edges allowed; colors in {1..k}.
struct EdgeColoredGraph {
  struct Edge {
    int u = 0, v = 0, color = 0;
  };
  int n_vertices = 0;
  int k = 0;
  std::vector<Edge> edges;
};

struct CozyCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Connected, k-regular, properly k-edge-colored. Malformed input yields
/// false with a reason rather than an error.
CozyCheck is_cozy(const EdgeColoredGraph& g);

/// Maximum number of pairwise edge-disjoint u-v paths (max-flow with unit
/// edge capacities; colors ignored).
int max_edge_disjoint_paths(const EdgeColoredGraph& g, int u, int v);

/// Every vertex has some other vertex reachable by >= k edge-disjoint paths.
bool is_comfortable(const EdgeColoredGraph& g, int k);

struct SpinesAndRibs {
  std::vector<int> spines;  // edge indices with exactly one endpoint in U
  std::vector<int> ribs;    // edge indices with both endpoints in U
};
SpinesAndRibs spines_and_ribs(const EdgeColoredGraph& g, const std::set<int>& U);

/// Minimum number of edges whose removal disconnects g. Throws on
/// disconnected input.
int edge_connectivity(const EdgeColoredGraph& g);

/// Induced subgraph on U plus, per color, same-colored special edges pairing
/// the spine endpoints inside U (ascending vertex order). Requires U to have
/// fewer than k spines; the result is again k-cozy.
EdgeColoredGraph knit(const EdgeColoredGraph& g, const std::set<int>& U);

/// Union of k seeded random perfect matchings, resampled until connected
/// (cap 1000 attempts). Deterministic per seed.
EdgeColoredGraph random_cozy(int k, int n_vertices, std::uint64_t seed);

}  // namespace medianshape
