#pragma once

#include <optional>
#include <string>

#include "flatfold/foldcheck.hpp"

namespace flatfold {

struct ortho_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One wheel replacement: the target vertex of the evolving graph is
/// replaced by a hub plus a cycle, one cycle vertex per incident edge in
/// cyclic order (the attachment bijection is determined up to a rotation
/// of the cycle, which does not change the graph).
struct WheelStep {
  bool at_infinity = false;
  int target = 0;  // finite vertex id; ignored when at_infinity
};

/// A dual orthotree: wheel replacements applied in order, starting from
/// the multigraph with two vertices and four non-loop edges (the graph of
/// the quarter-fold pattern).
struct DualOrthotreeSpec {
  std::vector<WheelStep> steps;
};

/// Graph-level wheel replacement. The hub keeps the target's index (∞
/// stays ∞); the d cycle vertices take fresh indices in rotation order.
/// Requires degree ≥ 3 at the target and no loops there.
FoldingGraph wheel_replace_graph(const FoldingGraph& g, const WheelStep& step);

/// Fold-level wheel replacement: reflect the folded image of a
/// neighborhood of v across a chord of its image wedge at distance delta
/// (default: half the clearance to the nearest other vertex or
/// non-incident crease). The pulled-back chord becomes a cycle of new
/// creases around v.
CreasePattern wheel_replace_fold(const CreasePattern& p, VertexId v,
                                 std::optional<double> delta = std::nullopt);

/// Boundary variant of the fold-level replacement at the vertex ∞: a far
/// chord across the image wedge of the whole folding, pulled back across
/// every unbounded face.
CreasePattern wheel_replace_fold_at_infinity(const CreasePattern& p);

/// The quarter-fold one-vertex pattern (graph: two vertices, four edges).
CreasePattern quarter_fold_pattern();

/// Realize a dual orthotree as the pattern of a local flat folding by
/// replaying the spec with fold-level replacements.
CreasePattern realize_dual_orthotree(const DualOrthotreeSpec& spec);

/// Replay the spec abstractly with wheel_replace_graph from the base
/// multigraph.
FoldingGraph orthotree_graph(const DualOrthotreeSpec& spec);

/// Multigraph isomorphism (∞ treated as an ordinary vertex; exact
/// backtracking, small graphs).
bool multigraph_isomorphic(const FoldingGraph& a, const FoldingGraph& b);

/// The Dalí-cross dual orthotree as a canned spec.
DualOrthotreeSpec dali_cross_spec();

}  // namespace flatfold
