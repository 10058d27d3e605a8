#include "doctest.h"
#include "flatfold/conn.hpp"
#include "support/patterns.hpp"
#include "support/trees.hpp"

using namespace flatfold;
using namespace flatfold::testing;

namespace {

// Delete the given vertices and report whether the rest stays connected.
bool still_connected(const FoldingGraph& g, const std::vector<int>& cut) {
  std::vector<bool> removed(g.vertex_count(), false);
  for (int v : cut) removed[v] = true;
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& e : g.edges) {
    if (removed[e.u] || removed[e.v]) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int start = -1, alive = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> q{start};
  seen[start] = true;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        q.push_back(w);
      }
  }
  return cnt == alive;
}

bool still_connected_edges(const FoldingGraph& g, const std::vector<int>& cut_edges) {
  std::vector<bool> gone(g.edges.size(), false);
  for (int e : cut_edges) gone[e] = true;
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (gone[i]) continue;
    adj[g.edges[i].u].push_back(g.edges[i].v);
    adj[g.edges[i].v].push_back(g.edges[i].u);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> q{0};
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        q.push_back(w);
      }
  }
  return cnt == g.vertex_count();
}

}  // namespace

TEST_CASE("one-vertex pattern: lambda 4, kappa vacuous") {
  FoldingGraph g = folding_graph(make_cross());
  ConnReport r = connectivity(g);
  CHECK(r.edge_connectivity == 4);
  CHECK(!r.vertex_cut_exists);
  CHECK(r.vertex_connectivity == g.vertex_count());
  CHECK(!r.infinity_articulation);
  CHECK(infinity_not_articulation(g));
}

TEST_CASE("path tree graph: kappa 2 via middle+infinity, lambda 4") {
  TightnessWitnesses w = tightness_witnesses();
  FoldingGraph g = folding_graph(w.vertex_witness.pattern);
  CHECK(g.n == 3);
  ConnReport r = connectivity(g);
  CHECK(r.vertex_connectivity == 2);
  CHECK(r.vertex_cut_exists);
  CHECK(r.edge_connectivity == 4);
  REQUIRE(r.min_vertex_cut.size() == 2);
  CHECK(!still_connected(g, r.min_vertex_cut));
  REQUIRE(r.min_edge_cut.size() == 4);
  CHECK(!still_connected_edges(g, r.min_edge_cut));
  CHECK(infinity_not_articulation(g));
}

TEST_CASE("generated tree patterns meet the connectivity theorem") {
  for (const PlaneTree& t : valid_plane_trees_up_to(6)) {
    TreeRealization r = realize_tree(t);
    FoldingGraph g = folding_graph(r.pattern);
    ConnReport rep = connectivity(g);
    CHECK(rep.edge_connectivity >= 4);
    CHECK((!rep.vertex_cut_exists || rep.vertex_connectivity >= 2));
    CHECK(infinity_not_articulation(g));
    CHECK(!three_point_separator_search(r.pattern).has_value());
    // Maekawa implies minimum finite degree 4 in the folding graph.
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) >= 4);
  }
}

TEST_CASE("separator search finds cuts in non-foldable patterns") {
  // A plain square of segment creases: removing two opposite corners
  // disconnects the other two (no rays, not foldable, but a valid
  // pattern for the search to discriminate on).
  CreasePattern p;
  p.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int i = 0; i < 4; ++i) p.segments.push_back({i, (i + 1) % 4, {}});
  REQUIRE(validate_pattern(p).ok());
  auto sep = three_point_separator_search(p);
  REQUIRE(sep.has_value());
  CHECK(sep->size() == 2);
}

TEST_CASE("disconnected input is rejected") {
  FoldingGraph g;
  g.n = 2;
  g.has_infinity = false;
  g.rotation.assign(2, {});
  CHECK_THROWS_AS(connectivity(g), conn_error);
}
