#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flatfold/foldcheck.hpp"

namespace flatfold {

struct layering_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Combinatorial certificate of a global flat folding: a strict
/// above/below order on every unordered pair of faces whose images have
/// overlapping interiors. Convex images overlap in one connected region,
/// so one bit per pair suffices.
struct Layering {
  // Key (f,g) with f < g; value true means f lies above g.
  std::map<std::pair<FaceId, FaceId>, bool> above;

  bool has(FaceId f, FaceId g) const {
    return above.count(f < g ? std::pair(f, g) : std::pair(g, f)) > 0;
  }
  bool is_above(FaceId f, FaceId g) const {
    auto it = above.find(f < g ? std::pair(f, g) : std::pair(g, f));
    if (it == above.end()) throw layering_error("layering: pair not ordered");
    return f < g ? it->second : !it->second;
  }
  void set_above(FaceId f, FaceId g, bool v) {
    if (f < g)
      above[{f, g}] = v;
    else
      above[{g, f}] = !v;
  }
};

/// One cell of the arrangement of all face-image boundaries, identified
/// by its set of covering faces with an interior sample point.
struct OverlayCell {
  Point2 sample;
  std::vector<FaceId> covering;  // sorted
};

/// Taco-tortilla site: face h covers a point of the image of the crease
/// joining f and g.
struct TortillaSite {
  CreaseId crease;
  FaceId f, g, h;
  Point2 at;
};

/// Taco-taco site: two creases whose images share a line segment and
/// open to the same side; their face pairs must not interleave.
struct TacoSite {
  CreaseId c1, c2;
  FaceId f1, g1, f2, g2;
  Point2 at;
};

struct Overlay {
  std::vector<std::vector<Point2>> images;            // per-face image polygons
  std::set<std::pair<FaceId, FaceId>> overlapping;    // pairs with area overlap
  std::vector<OverlayCell> cells;                     // deduped by covering set
  std::vector<TortillaSite> tortillas;
  std::vector<TacoSite> tacos;
};

/// Arrangement cells of the folded image with covering-face lists,
/// instantiated at sample points (piecewise-constant coverage makes the
/// samples sufficient); unbounded faces are clipped at the pattern clip
/// radius.
Overlay build_overlay(const FoldMap& m);
std::vector<OverlayCell> overlay_cells(const FoldMap& m);

/// Validity of a layering: (a) per-cell acyclicity, (b) taco-tortilla:
/// no face strictly between the two faces of a crease it covers,
/// (c) taco-taco: face pairs of collinear overlapping creases nested or
/// disjoint, never interleaved.
CheckReport validate_layering(const FoldMap& m, const Layering& L);
CheckReport validate_layering(const FoldMap& m, const Layering& L, const Overlay& ov);

/// Exhaustive backtracking search over pairwise orders with constraint
/// propagation; returns a valid layering or proves none exists at this
/// combinatorial level. Throws layering_error when the face count
/// exceeds the limit.
std::optional<Layering> search_layering(const FoldMap& m, int limit_faces = 14);

// ── Fold plans ──────────────────────────────────────────────────────

enum class FoldSign { Mountain, Valley };

/// Accordion fold across a chain of hinge creases. `faces` is the face
/// walk across those creases listed bottom-to-top of the resulting
/// stack; the anchor face keeps its orientation. When the first and last
/// face are already stacked adjacent, the step splices the intermediate
/// faces between them (the vertex pleat of the tree construction).
struct PleatStep {
  std::vector<FaceId> faces;
  std::vector<CreaseId> creases;
  int anchor = 0;
  std::vector<FoldSign> signs;
};

/// Fold the sub-stack containing `moved` across a safe crease onto the
/// other side, landing above (or below) the target face.
struct ReflectStep {
  CreaseId crease = 0;
  FaceId moved = 0;
  bool above = true;
};

struct FoldStep {
  enum class Kind { Pleat, Reflect } kind = Kind::Pleat;
  PleatStep pleat;
  ReflectStep reflect;

  static FoldStep make_pleat(PleatStep s) {
    FoldStep st;
    st.kind = Kind::Pleat;
    st.pleat = std::move(s);
    return st;
  }
  static FoldStep make_reflect(ReflectStep s) {
    FoldStep st;
    st.kind = Kind::Reflect;
    st.reflect = s;
    return st;
  }
};

/// Ordered list of elementary fold steps.
struct FoldPlan {
  std::vector<FoldStep> steps;
};

/// Execute the plan and return the resulting total stacking order of all
/// faces, bottom to top. Throws layering_error when a step conflicts
/// with the current stack state or when a reflected stack would straddle
/// an unfolded crease.
std::vector<FaceId> plan_stack(const FoldPlan& plan, const FoldMap& m);

/// Layering induced by the plan's stacking order on overlapping pairs.
Layering plan_to_layering(const FoldPlan& plan, const FoldMap& m);
Layering plan_to_layering(const FoldPlan& plan, const FoldMap& m, const Overlay& ov);

/// Layering read off a complete stacking order.
Layering stack_to_layering(const std::vector<FaceId>& stack, const Overlay& ov);

}  // namespace flatfold
