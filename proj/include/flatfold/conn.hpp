#pragma once

#include <optional>

#include "flatfold/pattern.hpp"
#include "flatfold/treefold.hpp"

namespace flatfold {

struct conn_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact connectivity numbers with verifying witnesses. When no vertex
/// cut exists (deleting any set of fewer vertices never leaves two or
/// more components) the graph counts as k-connected for every k and
/// vertex_connectivity reports the vertex count.
struct ConnReport {
  int vertex_connectivity = 0;
  int edge_connectivity = 0;
  bool vertex_cut_exists = false;
  bool infinity_articulation = false;
  std::vector<int> min_vertex_cut;  // vertex indices; n stands for ∞
  std::vector<int> min_edge_cut;    // edge ids into FoldingGraph::edges
};

/// κ and λ via unit-capacity max-flow with vertex splitting; multigraph
/// edges respected. Throws conn_error on disconnected input.
ConnReport connectivity(const FoldingGraph& g);

/// True iff g − ∞ stays connected. Throws when ∞ is absent.
bool infinity_not_articulation(const FoldingGraph& g);

/// Brute force over all vertex-point subsets of size ≤ 3 (∞ excluded);
/// returns a disconnecting subset if one exists.
std::optional<std::vector<int>> three_point_separator_search(const CreasePattern& p);

/// Realized patterns showing both bounds tight: the 3-internal-vertex
/// path tree has κ = 2 (cut {middle vertex, ∞}) and λ = 4 exactly.
struct TightnessWitnesses {
  TreeRealization vertex_witness;  // κ = 2
  TreeRealization edge_witness;    // λ = 4
};
TightnessWitnesses tightness_witnesses();

}  // namespace flatfold
