#include "doctest.h"
#include "flatfold/conn.hpp"
#include "flatfold/foldcheck.hpp"
#include "flatfold/orthotree.hpp"

using namespace flatfold;

namespace {

FoldingGraph base_multigraph() {
  FoldingGraph g;
  g.n = 1;
  g.has_infinity = true;
  for (int k = 0; k < 4; ++k) g.edges.push_back({0, 1});
  g.rotation.assign(2, {0, 1, 2, 3});
  return g;
}

FoldingGraph octahedron() {
  FoldingGraph g;
  g.n = 6;
  g.has_infinity = false;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) {
      bool anti = (u / 2 == v / 2);  // pairs (0,1),(2,3),(4,5) are opposite
      if (!anti) g.edges.push_back({u, v});
    }
  g.rotation.assign(6, {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.rotation[g.edges[e].u].push_back(static_cast<int>(e));
    g.rotation[g.edges[e].v].push_back(static_cast<int>(e));
  }
  return g;
}

// Contract a wheel back: cycle vertices merged into the hub.
FoldingGraph contract_wheel(const FoldingGraph& g, int hub, const std::vector<int>& cycle) {
  std::vector<int> to_hub(g.vertex_count(), 0);
  for (int c : cycle) to_hub[c] = 1;
  FoldingGraph out;
  std::vector<int> remap(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!to_hub[v]) remap[v] = next++;
  out.n = next - (g.has_infinity ? 1 : 0);
  out.has_infinity = g.has_infinity;
  for (const auto& e : g.edges) {
    int u = to_hub[e.u] ? remap[hub] : remap[e.u];
    int v = to_hub[e.v] ? remap[hub] : remap[e.v];
    if (u == v) continue;  // collapsed wheel edge
    out.edges.push_back({u, v});
  }
  out.rotation.assign(out.vertex_count(), {});
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    out.rotation[out.edges[e].u].push_back(static_cast<int>(e));
    out.rotation[out.edges[e].v].push_back(static_cast<int>(e));
  }
  return out;
}

}  // namespace

TEST_CASE("wheel replacement on the base multigraph gives the octahedron") {
  FoldingGraph g = wheel_replace_graph(base_multigraph(), WheelStep{false, 0});
  CHECK(g.vertex_count() == 6);
  CHECK(g.edges.size() == 12);
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
  CHECK(multigraph_isomorphic(g, octahedron()));
}

TEST_CASE("wheel replacement then contraction returns the original graph") {
  FoldingGraph base = base_multigraph();
  FoldingGraph g = wheel_replace_graph(base, WheelStep{false, 0});
  std::vector<int> cycle{1, 2, 3, 4};  // fresh ids after replacing vertex 0
  FoldingGraph back = contract_wheel(g, 0, cycle);
  CHECK(multigraph_isomorphic(back, base));
}

TEST_CASE("degree below three is rejected") {
  FoldingGraph g;
  g.n = 2;
  g.has_infinity = false;
  g.edges.push_back({0, 1});
  g.rotation = {{0}, {0}};
  CHECK_THROWS_AS(wheel_replace_graph(g, WheelStep{false, 0}), ortho_error);
}

TEST_CASE("fold-level wheel replacement pulls back a diamond") {
  CreasePattern p = quarter_fold_pattern();
  double delta = 0.5 / std::sqrt(2.0);
  CreasePattern q = wheel_replace_fold(p, 0, delta);
  REQUIRE(validate_pattern(q).ok());
  CHECK(q.vertex_count() == 5);
  CHECK(q.segments.size() == 8);  // four spokes + four ring segments
  CHECK(q.rays.size() == 4);
  // Ring vertices at |x|+|y| = 0.5.
  for (VertexId v = 1; v < q.vertex_count(); ++v)
    CHECK(std::abs(std::abs(q.vertices[v].x) + std::abs(q.vertices[v].y) - 0.5) < 1e-9);
  CHECK(maekawa_check(q).pass());
  CHECK(kawasaki_check(q).pass());
  FoldingGraph expect = wheel_replace_graph(folding_graph(p), WheelStep{false, 0});
  CHECK(multigraph_isomorphic(folding_graph(q), expect));
}

TEST_CASE("unsafe chord distances are rejected") {
  CreasePattern p = quarter_fold_pattern();
  CreasePattern q = wheel_replace_fold(p, 0);  // default delta
  REQUIRE(validate_pattern(q).ok());
  // The ring sits within the clearance of the nearest geometry.
  CHECK_THROWS_AS(wheel_replace_fold(q, 0, 10.0), ortho_error);
}

TEST_CASE("realize: empty spec is the quarter fold") {
  CreasePattern p = realize_dual_orthotree({});
  CHECK(p.vertex_count() == 1);
  CHECK(p.rays.size() == 4);
  FoldingGraph g = folding_graph(p);
  CHECK(g.edges.size() == 4);
}

TEST_CASE("realize: one step at the finite vertex") {
  DualOrthotreeSpec spec;
  spec.steps.push_back({false, 0});
  CreasePattern p = realize_dual_orthotree(spec);
  REQUIRE(validate_pattern(p).ok());
  CHECK(maekawa_check(p).pass());
  CHECK(kawasaki_check(p).pass());
  CHECK(multigraph_isomorphic(folding_graph(p), octahedron()));
}

TEST_CASE("realize: one step at infinity swaps the roles") {
  DualOrthotreeSpec spec;
  spec.steps.push_back({true, 0});
  CreasePattern p = realize_dual_orthotree(spec);
  REQUIRE(validate_pattern(p).ok());
  CHECK(maekawa_check(p).pass());
  CHECK(kawasaki_check(p).pass());
  CHECK(multigraph_isomorphic(folding_graph(p), octahedron()));
  CHECK(multigraph_isomorphic(folding_graph(p), orthotree_graph(spec)));
}

TEST_CASE("graph correspondence for two-step specs") {
  std::vector<DualOrthotreeSpec> specs;
  {
    DualOrthotreeSpec s;
    s.steps = {{false, 0}, {false, 0}};
    specs.push_back(s);
    s.steps = {{false, 0}, {false, 1}};
    specs.push_back(s);
    s.steps = {{false, 0}, {true, 0}};
    specs.push_back(s);
    s.steps = {{true, 0}, {false, 1}};
    specs.push_back(s);
  }
  for (const auto& s : specs) {
    CreasePattern p = realize_dual_orthotree(s);
    REQUIRE(validate_pattern(p).ok());
    CHECK(maekawa_check(p).pass());
    CHECK(kawasaki_check(p).pass());
    CHECK(convexity_check(p).pass());
    CHECK(multigraph_isomorphic(folding_graph(p), orthotree_graph(s)));
    // All dual orthotree vertices have even degree.
    FoldingGraph g = orthotree_graph(s);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) % 2 == 0);
  }
}

TEST_CASE("dali cross spec replays to 34 squares") {
  FoldingGraph g = orthotree_graph(dali_cross_spec());
  CHECK(g.vertex_count() == 34);
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) % 2 == 0);
}
