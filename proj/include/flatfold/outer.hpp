#pragma once

#include <memory>
#include <optional>

#include "flatfold/layers.hpp"
#include "flatfold/treefold.hpp"

namespace flatfold {

struct outer_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Convex sheet: a disk or a convex polygon, with the boundary
/// parameterized by normalized arc length in [0,1) from a fixed
/// reference point (angle 0 on disks, the first polygon vertex).
struct OuterRegion {
  enum class Kind { Disk, Polygon };
  Kind kind = Kind::Disk;
  Point2 center{0, 0};
  double radius = 1.0;
  std::vector<Point2> poly;  // counterclockwise convex

  static OuterRegion disk(Point2 c, double r);
  static OuterRegion polygon(std::vector<Point2> pts);
  static OuterRegion square(Point2 corner, double side);

  double perimeter() const;
  Point2 at(double t) const;
  /// Polygon side index containing boundary parameter t; a corner counts
  /// toward the side starting there. -1 for disks.
  int side_of(double t) const;
  int side_count() const { return kind == Kind::Disk ? 0 : static_cast<int>(poly.size()); }
  bool is_square() const;
  /// Boundary polygonalization (arcs sampled) for geometric queries.
  std::vector<Point2> boundary_poly(int arc_samples = 64) const;
};

/// Outer pattern: folding points on the boundary of a convex sheet and
/// non-crossing chord creases between them.
struct OuterPattern {
  OuterRegion region;
  std::vector<double> points;  // boundary parameters, point id = index
  std::vector<std::pair<int, int>> chords;

  Point2 point_pos(int id) const { return region.at(points[id]); }
  int point_count() const { return static_cast<int>(points.size()); }
  int chord_count() const { return static_cast<int>(chords.size()); }
};

/// Boundary membership, non-crossing interior chords, no chord along a
/// polygon side.
ValidationReport validate_outer(const OuterPattern& p);

struct SafeCreaseReport {
  bool safe = false;
  int side = -1;  // 0: left of the directed chord is the certified region C
  std::string reason;
};

/// A chord is safe when one side C has monotone boundary distances from
/// its endpoints and the reflection of C's boundary across the chord
/// crosses no other crease.
SafeCreaseReport is_safe_crease(const OuterPattern& p, int chord);

/// Fold map of an outer pattern: faces are the chord-subdivision regions
/// of the sheet; any non-crossing pattern folds locally, no angle
/// conditions apply at boundary vertex points. The synthetic crease
/// pattern inside carries the chords as segments (its folding graph is
/// the chord graph of the outer pattern).
FoldMap outer_fold_map(const OuterPattern& p, int arc_samples = 64);

/// Recursive disk algorithm: a region bounded by three or more creases
/// always has a safe crease (smallest subtended angle); split there and
/// recurse, pleat the linear base cases.
FoldPlan disk_fold_plan(const OuterPattern& p);

/// Simple graph input for the outerplanar realization.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Vertices on the circle in their outer-face order, straight chords.
/// Throws outer_error when g is not outerplanar.
OuterPattern realize_outerplanar_on_disk(const SimpleGraph& g);

/// Outerplanarity decision with a boundary order witness (exact search).
std::optional<std::vector<int>> outerplanar_order(const SimpleGraph& g);

// ── Squares ─────────────────────────────────────────────────────────

enum class ChordType { LT, RT, LB, RB, LR, TB };

/// The square algorithm's analysis: crease types, the semi-safe corner
/// creases, and the executable fold plan.
struct SquarePlan {
  std::vector<ChordType> types;        // per chord, in normalized frame
  std::vector<int> semi_safe_chords;   // chord ids identified as semi-safe
  bool rotated = false;                // frame rotated to remove TB creases
  bool flipped = false;                // frame mirrored left-right
  FoldPlan plan;
};

/// Classify the creases of a square pattern into the six types, identify
/// the semi-safe corner creases, and emit mountain/valley pleats per the
/// square case analysis.
SquarePlan square_fold_plan(const OuterPattern& p);

// ── Trees on polygons ───────────────────────────────────────────────

struct SpineInfo {
  std::vector<int> spine_vertices;
  int leaf_count = 0;
};

/// The spine: the tree minus its degree-one vertices. For trees with at
/// most two vertices the spine leaf count counts every vertex.
SpineInfo spine(const PlaneTree& t);

/// Realize a tree as an outer pattern on a convex k-gon: spine leaves
/// near distinct corners, spine two-colored and shifted to sides, tree
/// leaves fanned to visible sides. Throws when the spine has more than k
/// leaves.
OuterPattern realize_tree_on_polygon(const PlaneTree& t, const OuterRegion& kgon);

/// A tree folds on a square iff its spine has at most four leaves.
bool square_tree_realizable(const PlaneTree& t);

/// Abstract chord graph of an outer pattern.
SimpleGraph outer_graph(const OuterPattern& p);

/// Exact isomorphism test for small simple graphs.
bool simple_graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace flatfold
