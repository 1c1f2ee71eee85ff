#include "medianshape/cozy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace medianshape {

namespace {

bool connected(const EdgeColoredGraph& g) {
  if (g.n_vertices == 0) return false;
  std::vector<std::vector<int>> adj(g.n_vertices);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(g.n_vertices, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == g.n_vertices;
}

}  // namespace

CozyCheck is_cozy(const EdgeColoredGraph& g) {
  if (g.n_vertices <= 0) return {false, "no vertices"};
  if (g.k < 0) return {false, "negative k"};
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.n_vertices || e.v < 0 || e.v >= g.n_vertices)
      return {false, "edge endpoint out of range"};
    if (e.u == e.v) return {false, "self-loop"};
    if (e.color < 1 || e.color > g.k) return {false, "edge color out of range"};
  }
  // Proper coloring at every vertex doubles as the k-regularity check: each
  // vertex must see each of the k colors exactly once.
  std::vector<std::vector<int>> seen(g.n_vertices, std::vector<int>(g.k + 1, 0));
  for (const auto& e : g.edges) {
    ++seen[e.u][e.color];
    ++seen[e.v][e.color];
  }
  for (int v = 0; v < g.n_vertices; ++v)
    for (int c = 1; c <= g.k; ++c)
      if (seen[v][c] != 1)
        return {false, seen[v][c] > 1 ? "coloring not proper" : "not k-regular"};
  if (!connected(g)) return {false, "not connected"};
  return {true, ""};
}

namespace {

// Unit-capacity max flow on the undirected multigraph (Edmonds-Karp).
struct FlowNet {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;  // arc 2i and 2i+1 are reverses of each other
  std::vector<std::vector<int>> adj;

  explicit FlowNet(const EdgeColoredGraph& g) : adj(g.n_vertices) {
    for (const auto& e : g.edges) {
      adj[e.u].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({e.v, 1});
      adj[e.v].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({e.u, 1});
    }
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (true) {
      std::vector<int> pred_arc(adj.size(), -1);
      std::queue<int> q;
      q.push(s);
      std::vector<char> seen(adj.size(), 0);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        int u = q.front();
        q.pop();
        for (int a : adj[u]) {
          if (arcs[a].cap == 0 || seen[arcs[a].to]) continue;
          seen[arcs[a].to] = 1;
          pred_arc[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
      }
      if (!seen[t]) return flow;
      for (int v = t; v != s;) {
        int a = pred_arc[v];
        --arcs[a].cap;
        ++arcs[a ^ 1].cap;
        v = arcs[a ^ 1].to;
      }
      ++flow;
    }
  }
};

}  // namespace

int max_edge_disjoint_paths(const EdgeColoredGraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("max_edge_disjoint_paths: u == v");
  if (u < 0 || v < 0 || u >= g.n_vertices || v >= g.n_vertices)
    throw std::invalid_argument("max_edge_disjoint_paths: vertex out of range");
  FlowNet net(g);
  return net.max_flow(u, v);
}

bool is_comfortable(const EdgeColoredGraph& g, int k) {
  if (g.n_vertices == 1 && k == 0) return true;
  for (int v = 0; v < g.n_vertices; ++v) {
    bool found = false;
    for (int v2 = 0; v2 < g.n_vertices && !found; ++v2)
      if (v2 != v && max_edge_disjoint_paths(g, v, v2) >= k) found = true;
    if (!found) return false;
  }
  return true;
}

SpinesAndRibs spines_and_ribs(const EdgeColoredGraph& g, const std::set<int>& U) {
  for (int v : U)
    if (v < 0 || v >= g.n_vertices)
      throw std::invalid_argument("spines_and_ribs: vertex out of range");
  SpinesAndRibs out;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int in_u = static_cast<int>(U.count(g.edges[e].u)) + static_cast<int>(U.count(g.edges[e].v));
    if (in_u == 1) out.spines.push_back(e);
    if (in_u == 2) out.ribs.push_back(e);
  }
  return out;
}

int edge_connectivity(const EdgeColoredGraph& g) {
  if (!connected(g)) throw std::invalid_argument("edge_connectivity: graph is disconnected");
  if (g.n_vertices == 1) throw std::invalid_argument("edge_connectivity: single vertex");
  int best = -1;
  for (int t = 1; t < g.n_vertices; ++t) {
    int f = max_edge_disjoint_paths(g, 0, t);
    if (best < 0 || f < best) best = f;
  }
  return best;
}

EdgeColoredGraph knit(const EdgeColoredGraph& g, const std::set<int>& U) {
  SpinesAndRibs sr = spines_and_ribs(g, U);
  if (static_cast<int>(sr.spines.size()) >= g.k)
    throw std::invalid_argument("knit: U must have fewer than k spines");

  std::map<int, int> relabel;
  for (int v : U) relabel.emplace(v, static_cast<int>(relabel.size()));

  EdgeColoredGraph h;
  h.n_vertices = static_cast<int>(U.size());
  h.k = g.k;
  for (int e : sr.ribs)
    h.edges.push_back({relabel.at(g.edges[e].u), relabel.at(g.edges[e].v), g.edges[e].color});

  // Per color, the spine endpoints inside U come in even numbers; pair them
  // in ascending vertex order with new same-colored special edges.
  for (int c = 1; c <= g.k; ++c) {
    std::vector<int> ends;
    for (int e : sr.spines) {
      if (g.edges[e].color != c) continue;
      ends.push_back(U.count(g.edges[e].u) ? g.edges[e].u : g.edges[e].v);
    }
    std::sort(ends.begin(), ends.end());
    if (ends.size() % 2 != 0) throw std::logic_error("knit: odd spine count for a color");
    for (size_t i = 0; i + 1 < ends.size(); i += 2)
      h.edges.push_back({relabel.at(ends[i]), relabel.at(ends[i + 1]), c});
  }
  return h;
}

EdgeColoredGraph random_cozy(int k, int n_vertices, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_cozy: k must be >= 1");
  if (n_vertices < 2 || n_vertices % 2 != 0)
    throw std::invalid_argument("random_cozy: n_vertices must be even and >= 2");

  std::mt19937_64 rng(seed);
  std::vector<int> order(n_vertices);
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    EdgeColoredGraph g;
    g.n_vertices = n_vertices;
    g.k = k;
    for (int c = 1; c <= k; ++c) {
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i + 1 < n_vertices; i += 2) g.edges.push_back({order[i], order[i + 1], c});
    }
    if (connected(g)) return g;
  }
  throw std::runtime_error("random_cozy: resample cap exceeded");
}

}  // namespace medianshape
