#include "doctest.h"
#include "flatfold/pattern.hpp"
#include "support/patterns.hpp"

using namespace flatfold;
using namespace flatfold::testing;

TEST_CASE("cross pattern is valid") {
  CreasePattern p = make_cross();
  CHECK(validate_pattern(p).ok());
}

TEST_CASE("crossing segments are flagged") {
  CreasePattern p;
  p.vertices = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  p.segments.push_back({0, 1, {}});
  p.segments.push_back({2, 3, {}});
  auto rep = validate_pattern(p);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "crossing-creases");
}

TEST_CASE("collinear degree-2 vertex is flagged") {
  CreasePattern p;
  p.vertices.push_back({0, 0});
  p.rays.push_back({0, TurnAngle::turns(0, 2)});
  p.rays.push_back({0, TurnAngle::turns(1, 2)});
  auto rep = validate_pattern(p);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "collinear-degree-2");
}

TEST_CASE("duplicate vertices are flagged") {
  CreasePattern p;
  p.vertices = {{0, 0}, {0, 0}};
  p.segments.push_back({0, 1, {}});
  CHECK(!validate_pattern(p).ok());
}

TEST_CASE("overlapping collinear creases are flagged") {
  CreasePattern p;
  p.vertices = {{0, 0}, {2, 0}, {1, 0.5}, {1, -0.5}};
  p.segments.push_back({0, 1, {}});
  p.rays.push_back({0, TurnAngle::turns(0, 1)});  // overlaps segment 0-1
  p.segments.push_back({2, 3, {}});               // keeps vertices 2,3 used
  auto rep = validate_pattern(p);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "crossing-creases");
}

TEST_CASE("folding graph of the cross") {
  FoldingGraph g = folding_graph(make_cross());
  CHECK(g.n == 1);
  CHECK(g.has_infinity);
  CHECK(g.edges.size() == 4);
  for (const auto& e : g.edges) {
    CHECK(e.u == 0);
    CHECK(e.v == g.infinity());
  }
  CHECK(g.degree(0) == 4);
  CHECK(g.degree(g.infinity()) == 4);
}

TEST_CASE("folding graph of the 3x3 grid") {
  CreasePattern p = make_grid(3, 3);
  REQUIRE(validate_pattern(p).ok());
  FoldingGraph g = folding_graph(p);
  CHECK(g.n == 9);
  CHECK(g.has_infinity);
  CHECK(g.edges.size() == 12 + 12);
  CHECK(g.degree(g.infinity()) == 12);
}

TEST_CASE("segment-only pattern has no infinity vertex") {
  CreasePattern p;
  p.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  p.segments.push_back({0, 1, {}});
  p.segments.push_back({1, 2, {}});
  p.segments.push_back({2, 3, {}});
  p.segments.push_back({3, 0, {}});
  REQUIRE(validate_pattern(p).ok());
  FoldingGraph g = folding_graph(p);
  CHECK(!g.has_infinity);
  CHECK(g.vertex_count() == 4);
  FaceComplex fc = build_faces(p);
  CHECK(fc.face_count() == 2);
  CHECK(euler_characteristic(p, fc) == 2);
}

TEST_CASE("truncated graph of the cross is K1,4") {
  TruncatedGraph t = truncated_graph(make_cross());
  CHECK(t.vertex_count() == 5);
  CHECK(t.edges.size() == 4);
  CHECK(t.neighbors[0].size() == 4);
  for (int j = 1; j < 5; ++j) CHECK(t.neighbors[j].size() == 1);
}

TEST_CASE("truncated graph of the double star") {
  // Two degree-4 vertex points joined by a segment, 3 rays each.
  CreasePattern p;
  p.vertices = {{0, 0}, {1, 0}};
  p.segments.push_back({0, 1, TurnAngle::turns(0, 1)});
  p.rays.push_back({0, TurnAngle::turns(5, 12)});
  p.rays.push_back({0, TurnAngle::turns(1, 2)});
  p.rays.push_back({0, TurnAngle::turns(7, 12)});
  p.rays.push_back({1, TurnAngle::turns(11, 12)});
  p.rays.push_back({1, TurnAngle::turns(0, 1)});
  p.rays.push_back({1, TurnAngle::turns(1, 12)});
  REQUIRE(validate_pattern(p).ok());
  TruncatedGraph t = truncated_graph(p);
  CHECK(t.vertex_count() == 8);
  CHECK(t.edges.size() == 7);
  CHECK(t.neighbors[0].size() == 4);
  CHECK(t.neighbors[1].size() == 4);
}

TEST_CASE("truncated graph without rays equals the finite graph") {
  CreasePattern p;
  p.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int i = 0; i < 4; ++i) p.segments.push_back({i, (i + 1) % 4, {}});
  TruncatedGraph t = truncated_graph(p);
  CHECK(t.vertex_count() == 4);
  CHECK(t.edges.size() == 4);
}

TEST_CASE("faces of the cross are the four quadrants") {
  CreasePattern p = make_cross();
  FaceComplex fc = build_faces(p);
  CHECK(fc.face_count() == 4);
  CHECK(euler_characteristic(p, fc) == 2);
  FaceId q1 = fc.locate({0.5, 0.5});
  CHECK(fc.face_contains(q1, {2, 3}));
  CHECK(!fc.face_contains(q1, {-2, 3}));
  FaceId q2 = fc.locate({-0.5, 0.5});
  CHECK(q1 != q2);
}

TEST_CASE("faces of the 3x3 grid: 4 bounded, 12 unbounded") {
  CreasePattern p = make_grid(3, 3);
  FaceComplex fc = build_faces(p);
  int bounded = 0, unbounded = 0;
  for (const Face& f : fc.faces) (f.bounded ? bounded : unbounded)++;
  CHECK(bounded == 4);
  CHECK(unbounded == 12);
  CHECK(euler_characteristic(p, fc) == 2);
}

TEST_CASE("base star vertex has d wedge faces") {
  CreasePattern p = make_base_star_vertex(6);
  REQUIRE(validate_pattern(p).ok());
  FaceComplex fc = build_faces(p);
  CHECK(fc.face_count() == 6);
  CHECK(euler_characteristic(p, fc) == 2);
}

TEST_CASE("rotation system round-trips through the face complex") {
  CreasePattern p = make_grid(3, 3);
  FaceComplex fc = build_faces(p);
  // Every dart appears in exactly one face walk, and walking twin pairs
  // recovers every crease adjacency.
  std::vector<int> seen(fc.darts.size(), 0);
  for (const Face& f : fc.faces)
    for (int d : f.darts) seen[d]++;
  for (int c : seen) CHECK(c == 1);
  for (CreaseId c = 0; c < p.crease_count(); ++c) {
    auto [f, g] = fc.faces_of_crease(c);
    CHECK(f >= 0);
    CHECK(g >= 0);
  }
}

TEST_CASE("face sample points land inside their face") {
  for (const CreasePattern& p : {make_cross(), make_grid(3, 3), make_base_star_vertex(8)}) {
    FaceComplex fc = build_faces(p);
    for (FaceId f = 0; f < fc.face_count(); ++f) {
      CHECK(fc.face_contains(f, fc.face_sample(f)));
      CHECK(fc.locate(fc.face_sample(f)) == f);
    }
  }
}
