#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatfold/geom.hpp"

namespace flatfold {

using VertexId = int;
using CreaseId = int;
using FaceId = int;

struct pattern_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ── Crease patterns on the infinite sheet ───────────────────────────

/// Segment crease between two vertex points. An exact direction (from a)
/// may be attached when the construction knows it; otherwise directions
/// are measured from coordinates.
struct Segment {
  VertexId a = 0;
  VertexId b = 0;
  std::optional<TurnAngle> dir_from_a;
};

/// Ray crease: semi-infinite crease from a vertex point.
struct Ray {
  VertexId apex = 0;
  TurnAngle dir;
};

/// Plane graph of creases: vertex points, segment creases and ray creases.
/// Creases are indexed with segments first, then rays.
struct CreasePattern {
  std::vector<Point2> vertices;
  std::vector<Segment> segments;
  std::vector<Ray> rays;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int crease_count() const { return static_cast<int>(segments.size() + rays.size()); }
  bool is_ray(CreaseId c) const { return c >= static_cast<int>(segments.size()); }
  const Ray& ray(CreaseId c) const { return rays[c - segments.size()]; }
  const Segment& segment(CreaseId c) const { return segments[c]; }

  /// Endpoints of a crease; a ray reports its apex twice.
  std::pair<VertexId, VertexId> crease_ends(CreaseId c) const;
  bool crease_incident(CreaseId c, VertexId v) const;
  /// Outgoing direction of crease c as seen from incident vertex v.
  TurnAngle direction_at(CreaseId c, VertexId v) const;
  std::vector<CreaseId> creases_at(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(creases_at(v).size()); }

  /// Radius beyond all finite geometry, used to clip rays for rendering
  /// and overlay bookkeeping.
  double clip_radius() const;

  /// Canonical ordering of vertices untouched; segments and rays sorted.
  void normalize();
};

// ── Reports ─────────────────────────────────────────────────────────

struct Violation {
  std::string code;    // "crossing-creases", "duplicate-vertices", ...
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Well-formedness: distinct vertices, non-crossing creases, no degree-2
/// collinear vertex (such a point is a crease point, not a vertex point).
ValidationReport validate_pattern(const CreasePattern& p);

// ── Derived graphs ──────────────────────────────────────────────────

/// Graph of a folding: one vertex per vertex point plus, when rays are
/// present, the special vertex ∞ shared by all rays. Parallel edges occur
/// only at ∞. Vertex index n stands for ∞.
struct FoldingGraph {
  int n = 0;               // finite vertices are 0..n-1
  bool has_infinity = false;
  struct Edge {
    int u = 0;
    int v = 0;  // may equal infinity()
  };
  std::vector<Edge> edges;
  /// Cyclic order of incident edge ids around each vertex (index n = ∞).
  std::vector<std::vector<int>> rotation;

  int infinity() const { return n; }
  int vertex_count() const { return n + (has_infinity ? 1 : 0); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
};

FoldingGraph folding_graph(const CreasePattern& p);

/// Folding graph with each ∞-edge subdivided and ∞ deleted: one new
/// degree-1 vertex per ray. Vertices 0..n-1 are the pattern vertices,
/// n+j is the leaf for ray j. Neighbor lists are in plane cyclic order.
struct TruncatedGraph {
  int finite_n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> neighbors;  // cyclic order per vertex
  int vertex_count() const { return static_cast<int>(neighbors.size()); }
};

TruncatedGraph truncated_graph(const CreasePattern& p);

// ── Face complex ────────────────────────────────────────────────────

/// Half-edge (dart) of the planarized embedding. Vertex index n is ∞.
struct Dart {
  CreaseId crease = 0;
  int tail = 0;
  int head = 0;
  TurnAngle dir;  // direction at the tail (for ∞ tails: the inward direction)
};

/// One face of the embedding: a convex (possibly unbounded) polygonal
/// region, the closure of a connected component of unfolded points.
struct Face {
  std::vector<int> darts;       // boundary darts, interior on the left
  bool bounded = true;
  std::vector<Point2> chain;    // boundary vertex points in walk order
  TurnAngle ray_in, ray_out;    // unbounded only: the two boundary ray dirs
  std::vector<int> chain_ids;   // vertex ids matching chain
};

struct FaceComplex {
  const CreasePattern* pattern = nullptr;
  std::vector<Dart> darts;
  std::vector<int> twin;
  std::vector<int> next;
  std::vector<int> face_of;
  std::vector<Face> faces;

  int face_count() const { return static_cast<int>(faces.size()); }
  /// The two faces adjacent across a crease.
  std::pair<FaceId, FaceId> faces_of_crease(CreaseId c) const;
  /// True when p lies inside face f (boundary counts as inside); valid for
  /// convex faces only.
  bool face_contains(FaceId f, const Point2& p, double eps = kLenEps) const;
  /// Interior sample point of a face.
  Point2 face_sample(FaceId f) const;
  /// Face polygon clipped to the square of half-width r centered at the
  /// origin (convex faces).
  std::vector<Point2> clipped_polygon(FaceId f, double r) const;
  /// Locate the face containing p by walking across edges from a start
  /// face; falls back to a linear scan.
  FaceId locate(const Point2& p, FaceId start = 0) const;
};

/// Builds the face complex of a valid pattern (throws pattern_error when
/// validation fails). Faces partition the complement of creases∪vertices.
FaceComplex build_faces(const CreasePattern& p);

/// V − E + F for the planarized graph, ∞ included; equals 2 for connected
/// patterns, 1 + #components in general.
int euler_characteristic(const CreasePattern& p, const FaceComplex& fc);

}  // namespace flatfold
