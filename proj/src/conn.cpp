#include "flatfold/conn.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace flatfold {

namespace {

constexpr int kInfCap = 1 << 28;

// Edmonds-Karp on a dense capacity matrix; small graphs only.
struct MaxFlow {
  int n;
  std::vector<std::vector<int>> cap;

  explicit MaxFlow(int nn) : n(nn), cap(nn, std::vector<int>(nn, 0)) {}

  int run(int s, int t) {
    std::vector<std::vector<int>> r = cap;
    int total = 0;
    for (;;) {
      std::vector<int> prev(n, -1);
      std::deque<int> q{s};
      prev[s] = s;
      while (!q.empty() && prev[t] < 0) {
        int v = q.front();
        q.pop_front();
        for (int w = 0; w < n; ++w)
          if (prev[w] < 0 && r[v][w] > 0) {
            prev[w] = v;
            q.push_back(w);
          }
      }
      if (prev[t] < 0) {
        residual = std::move(r);
        return total;
      }
      int push = std::numeric_limits<int>::max();
      for (int v = t; v != s; v = prev[v]) push = std::min(push, r[prev[v]][v]);
      for (int v = t; v != s; v = prev[v]) {
        r[prev[v]][v] -= push;
        r[v][prev[v]] += push;
      }
      total += push;
    }
  }

  // Set after run(): residual capacities, for min-cut extraction.
  std::vector<std::vector<int>> residual;

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(n, false);
    std::deque<int> q{s};
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w = 0; w < n; ++w)
        if (!seen[w] && residual[v][w] > 0) {
          seen[w] = true;
          q.push_back(w);
        }
    }
    return seen;
  }
};

bool graph_connected(const FoldingGraph& g, const std::vector<bool>& removed) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    if (removed[e.u] || removed[e.v]) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::deque<int> q{start};
  seen[start] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push_back(w);
      }
  }
  return count == alive;
}

}  // namespace

ConnReport connectivity(const FoldingGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw conn_error("connectivity: empty graph");
  if (!graph_connected(g, std::vector<bool>(n, false)))
    throw conn_error("connectivity: disconnected input");

  ConnReport rep;
  if (g.has_infinity) rep.infinity_articulation = !infinity_not_articulation(g);

  // Edge connectivity: min over sinks of max-flow from a fixed source,
  // one unit of capacity per parallel edge.
  if (n == 1) {
    rep.edge_connectivity = 0;
    rep.vertex_connectivity = 1;
    return rep;
  }
  {
    MaxFlow mf(n);
    for (const auto& e : g.edges) {
      mf.cap[e.u][e.v] += 1;
      mf.cap[e.v][e.u] += 1;
    }
    int best = std::numeric_limits<int>::max(), best_t = -1;
    for (int t = 1; t < n; ++t) {
      int f = mf.run(0, t);
      if (f < best) {
        best = f;
        best_t = t;
      }
    }
    rep.edge_connectivity = best;
    mf.run(0, best_t);
    auto side = mf.reachable(0);
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      const auto& e = g.edges[ei];
      if (side[e.u] != side[e.v]) rep.min_edge_cut.push_back(static_cast<int>(ei));
    }
  }

  // Vertex connectivity: split vertices, min over non-adjacent pairs.
  {
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;
    int best = std::numeric_limits<int>::max();
    std::pair<int, int> best_pair{-1, -1};
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (adjacent[u][v]) continue;
        MaxFlow mf(2 * n);
        for (int w = 0; w < n; ++w) mf.cap[w][w + n] = (w == u || w == v) ? kInfCap : 1;
        for (const auto& e : g.edges) {
          mf.cap[e.u + n][e.v] = kInfCap;
          mf.cap[e.v + n][e.u] = kInfCap;
        }
        int f = mf.run(u + n, v);
        if (f < best) {
          best = f;
          best_pair = {u, v};
        }
      }
    }
    if (best_pair.first < 0) {
      // No non-adjacent pair: no vertex cut exists.
      rep.vertex_connectivity = n;
      rep.vertex_cut_exists = false;
    } else {
      rep.vertex_connectivity = best;
      rep.vertex_cut_exists = true;
      auto [u, v] = best_pair;
      MaxFlow mf(2 * n);
      for (int w = 0; w < n; ++w) mf.cap[w][w + n] = (w == u || w == v) ? kInfCap : 1;
      for (const auto& e : g.edges) {
        mf.cap[e.u + n][e.v] = kInfCap;
        mf.cap[e.v + n][e.u] = kInfCap;
      }
      mf.run(u + n, v);
      auto side = mf.reachable(u + n);
      for (int w = 0; w < n; ++w)
        if (side[w] && !side[w + n]) rep.min_vertex_cut.push_back(w);
    }
  }
  return rep;
}

bool infinity_not_articulation(const FoldingGraph& g) {
  if (!g.has_infinity) throw conn_error("infinity_not_articulation: no vertex at infinity");
  std::vector<bool> removed(g.vertex_count(), false);
  removed[g.infinity()] = true;
  return graph_connected(g, removed);
}

std::optional<std::vector<int>> three_point_separator_search(const CreasePattern& p) {
  FoldingGraph g = folding_graph(p);
  const int n = g.n;  // vertex points only
  std::vector<bool> removed(g.vertex_count(), false);
  for (int a = 0; a < n; ++a) {
    removed[a] = true;
    if (!graph_connected(g, removed)) return std::vector<int>{a};
    for (int b = a + 1; b < n; ++b) {
      removed[b] = true;
      if (!graph_connected(g, removed)) return std::vector<int>{a, b};
      for (int c = b + 1; c < n; ++c) {
        removed[c] = true;
        if (!graph_connected(g, removed)) return std::vector<int>{a, b, c};
        removed[c] = false;
      }
      removed[b] = false;
    }
    removed[a] = false;
  }
  return std::nullopt;
}

TightnessWitnesses tightness_witnesses() {
  // Path of three internal degree-4 vertices: κ = 2 via {middle, ∞} and
  // λ = 4 via the four edges at the middle vertex.
  PlaneTree t;
  t.nodes.resize(11);
  t.root = 0;
  t.nodes[1].parent = 0;
  t.nodes[0].children = {1};
  t.nodes[1].children = {2, 3, 4};
  for (int k : {2, 3, 4}) t.nodes[k].parent = 1;
  t.nodes[2].children = {5, 6, 7};
  for (int k : {5, 6, 7}) t.nodes[k].parent = 2;
  t.nodes[5].children = {8, 9, 10};
  for (int k : {8, 9, 10}) t.nodes[k].parent = 5;
  TightnessWitnesses w{realize_tree(t), realize_tree(t)};
  return w;
}

}  // namespace flatfold
