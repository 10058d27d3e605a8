#pragma once

#include <map>
#include <string>

#include "flatfold/layers.hpp"

namespace flatfold {

struct tree_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rooted tree with cyclic child order; the cyclic order around a node is
/// (parent, children...) counterclockwise, which fixes the plane
/// embedding.
struct PlaneTree {
  struct Node {
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int degree(int v) const {
    return static_cast<int>(nodes[v].children.size()) + (nodes[v].parent >= 0 ? 1 : 0);
  }
  bool is_leaf(int v) const { return degree(v) <= 1; }
  bool is_internal(int v) const { return degree(v) >= 2; }
};

struct FoldabilityCheck {
  bool foldable = false;
  int witness = -1;  // first offending vertex when not foldable
  std::string reason;
};

/// A tree is realizable iff it has an internal vertex and every internal
/// vertex has even degree at least four.
FoldabilityCheck check_tree_foldable(const PlaneTree& t);

/// Protective wedge per leaf ray, keyed by ray crease id: the ray is the
/// median of its wedge, wedges are pairwise interior-disjoint, and no
/// non-ray edge meets any wedge.
struct WedgeCert {
  std::map<CreaseId, Wedge> wedges;
};

struct TreeRealization {
  CreasePattern pattern;
  WedgeCert cert;
  FoldPlan plan;
  std::vector<int> node_vertex;  // tree node -> pattern vertex id, -1 for leaves
};

/// Base case: one internal vertex of even degree d ≥ 4, rays separated by
/// two consecutive gaps of 3θ and the rest 2θ with θ = π/(d+1); per-ray
/// wedges of opening 2θ; the plan pleats with the wide wedges outermost.
TreeRealization realize_base_star(int d);

/// Full realization: strip the leaf neighbors of a deepest internal
/// vertex, realize the smaller tree, and re-attach the removed rays
/// inside the protective wedge with equal spacing θ/d.
TreeRealization realize_tree(const PlaneTree& t);

/// Wedge certificate verification (median rays exact when directions are
/// exact; pairwise disjointness and edge disjointness checked on clipped
/// regions).
CheckReport wedge_cert_check(const CreasePattern& p, const WedgeCert& cert);

// ── Plane-tree isomorphism ──────────────────────────────────────────

/// Cyclic neighbor lists of the tree in its plane embedding.
std::vector<std::vector<int>> plane_adjacency(const PlaneTree& t);
std::vector<std::vector<int>> plane_adjacency(const TruncatedGraph& g);

/// Canonical encoding of a plane tree (orientation preserving); two plane
/// trees are isomorphic iff their canonical strings match.
std::string plane_tree_canonical(const std::vector<std::vector<int>>& cyclic);

bool plane_tree_isomorphic(const std::vector<std::vector<int>>& a,
                           const std::vector<std::vector<int>>& b);

}  // namespace flatfold
