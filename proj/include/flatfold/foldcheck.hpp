#pragma once

#include <memory>
#include <optional>

#include "flatfold/pattern.hpp"

namespace flatfold {

struct fold_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckReport {
  std::vector<Violation> failures;
  bool pass() const { return failures.empty(); }
};

/// Maekawa: every vertex point is incident to an even number of creases.
CheckReport maekawa_check(const CreasePattern& p);

/// Kawasaki: at every vertex the alternating sum of cyclic gaps is zero,
/// exactly so when all incident directions are exact. Throws fold_error
/// on an odd-degree vertex (the alternating sum is ill-defined there).
CheckReport kawasaki_check(const CreasePattern& p);

/// Every cyclic gap at every vertex is strictly less than a half turn;
/// with Kawasaki this makes every face of the pattern convex.
CheckReport convexity_check(const CreasePattern& p);

/// Alternating sum of the sorted cyclic gaps at one vertex.
struct AlternatingSum {
  bool exact = false;
  Fraction turns;   // meaningful when exact
  double radians = 0.0;
  bool is_zero() const {
    return exact ? turns.num == 0 : std::abs(radians) < kAngEps;
  }
};
AlternatingSum kawasaki_sum(const CreasePattern& p, VertexId v);

/// Per-face planar isometries realizing the fold map φ, built by
/// breadth-first composition of reflections across crease images. The
/// base face maps by the identity; the embedding determines everything
/// else up to this normalization.
class FoldMap {
 public:
  /// Requires Maekawa and Kawasaki to pass; throws fold_error otherwise,
  /// and when some dual cycle fails to close ("not locally flat foldable").
  static FoldMap build(const CreasePattern& p, std::optional<FaceId> base = std::nullopt);
  /// Fold map over a pre-built face complex whose faces are already known
  /// to close (used by the outer module where boundary vertex points have
  /// no angle condition).
  static FoldMap build_unchecked(std::shared_ptr<const CreasePattern> p, FaceComplex fc,
                                 FaceId base);

  const CreasePattern& pattern() const { return *pat_; }
  const FaceComplex& complex() const { return fc_; }
  const Isometry2& iso(FaceId f) const { return iso_[f]; }
  FaceId base() const { return base_; }
  int face_count() const { return fc_.face_count(); }

  /// Image of p under the containing face's isometry.
  Point2 evaluate(const Point2& p) const;

  /// Image polygon of a face, unbounded faces clipped at the pattern clip
  /// radius; counterclockwise.
  std::vector<Point2> image_polygon(FaceId f) const;
  /// Image segment of a crease (rays clipped at the clip radius).
  std::pair<Point2, Point2> crease_image(CreaseId c) const;

 private:
  std::shared_ptr<const CreasePattern> pat_;
  FaceComplex fc_;
  std::vector<Isometry2> iso_;
  FaceId base_ = 0;
};

/// Default deterministic base: the unbounded face containing the far
/// right direction (just below angle zero); face 0 when no rays exist.
FaceId default_base_face(const FaceComplex& fc);

/// Distances between vertex points sharing a face are preserved by φ.
CheckReport nearby_rigid_check(const FoldMap& m);

}  // namespace flatfold
