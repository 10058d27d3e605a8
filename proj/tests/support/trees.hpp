#pragma once

// Exhaustive tree enumeration helpers shared by the module tests and the
// acceptance suite.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flatfold/treefold.hpp"

namespace flatfold::testing {

struct Shape {
  std::vector<Shape> children;
  int edges() const {
    int e = 0;
    for (const Shape& c : children) e += 1 + c.edges();
    return e;
  }
};

inline void shape_to_tree(const Shape& s, PlaneTree& t, int parent) {
  int id = t.node_count();
  t.nodes.push_back({});
  t.nodes[id].parent = parent;
  if (parent >= 0) t.nodes[parent].children.push_back(id);
  for (const Shape& c : s.children) shape_to_tree(c, t, id);
}

inline PlaneTree shape_to_tree(const Shape& s) {
  PlaneTree t;
  t.root = 0;
  shape_to_tree(s, t, -1);
  return t;
}

/// All ordered subtrees with exactly `edges` edges whose non-root internal
/// nodes have even total degree ≥ 4 (child counts 0, 3, 5, 7, ...).
inline const std::vector<Shape>& valid_subtrees(int edges) {
  static std::map<int, std::vector<Shape>> memo;
  auto it = memo.find(edges);
  if (it != memo.end()) return it->second;
  std::vector<Shape> out;
  if (edges == 0) {
    out.push_back({});
  } else {
    for (int c = 3; c <= edges; c += 2) {
      // Distribute edges - c among c ordered children.
      std::vector<int> sizes(c, 0);
      std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == c) {
          if (left != 0) return;
          std::vector<std::vector<Shape>> opts;
          Shape base;
          std::function<void(int)> build = [&](int k) {
            if (k == c) {
              out.push_back(base);
              return;
            }
            for (const Shape& sub : valid_subtrees(sizes[k])) {
              base.children.push_back(sub);
              build(k + 1);
              base.children.pop_back();
            }
          };
          build(0);
          return;
        }
        for (int give = 0; give <= left; ++give) {
          sizes[idx] = give;
          rec(idx + 1, left - give);
        }
      };
      rec(0, edges - c);
    }
  }
  return memo.emplace(edges, std::move(out)).first->second;
}

/// Every plane tree with `edges` edges whose internal vertices all have
/// even degree ≥ 4, enumerated exhaustively up to plane-tree isomorphism.
inline std::vector<PlaneTree> valid_plane_trees(int edges) {
  std::vector<PlaneTree> out;
  std::set<std::string> seen;
  if (edges < 4) return out;
  // Root at a leaf: its single subtree carries edges-1 edges and an odd
  // child count ≥ 3.
  for (const Shape& sub : valid_subtrees(edges - 1)) {
    if (sub.children.empty()) continue;
    Shape root;
    root.children.push_back(sub);
    PlaneTree t = shape_to_tree(root);
    std::string canon = plane_tree_canonical(plane_adjacency(t));
    if (seen.insert(canon).second) out.push_back(t);
  }
  return out;
}

inline std::vector<PlaneTree> valid_plane_trees_up_to(int max_edges) {
  std::vector<PlaneTree> out;
  for (int e = 1; e <= max_edges; ++e)
    for (PlaneTree& t : valid_plane_trees(e)) out.push_back(std::move(t));
  return out;
}

// ── Free trees ──────────────────────────────────────────────────────

/// All free (unordered, unlabeled) trees with exactly n vertices, as
/// PlaneTrees with an arbitrary embedding.
inline std::vector<PlaneTree> free_trees(int n) {
  // Rooted unlabeled trees by size, children as non-increasing sequences
  // of (size, index) to avoid duplicates.
  static std::vector<std::vector<Shape>> rooted{{}};  // rooted[k] = trees with k nodes
  while (static_cast<int>(rooted.size()) <= n) {
    int k = static_cast<int>(rooted.size());
    std::vector<Shape> result;
    if (k == 1) {
      result.push_back({});
    } else {
      Shape base;
      // children chosen with non-increasing (size, index).
      std::function<void(int, int, int)> rec = [&](int left, int max_size, int max_idx) {
        if (left == 0) {
          result.push_back(base);
          return;
        }
        for (int sz = std::min(left, max_size); sz >= 1; --sz) {
          int hi = static_cast<int>(rooted[sz].size()) - 1;
          int start = (sz == max_size) ? std::min(max_idx, hi) : hi;
          for (int idx = start; idx >= 0; --idx) {
            base.children.push_back(rooted[sz][idx]);
            rec(left - sz, sz, idx);
            base.children.pop_back();
          }
        }
      };
      rec(k - 1, k - 1, 0x7fffffff);
    }
    rooted.push_back(std::move(result));
  }

  // Deduplicate rootings by the canonical form of the underlying free tree.
  std::vector<PlaneTree> out;
  std::set<std::string> seen;
  for (const Shape& s : rooted[n]) {
    PlaneTree t = shape_to_tree(s);
    // Free-tree canonical: root at the center(s).
    int nn = t.node_count();
    std::vector<std::vector<int>> adj(nn);
    for (int v = 0; v < nn; ++v) {
      if (t.nodes[v].parent >= 0) adj[v].push_back(t.nodes[v].parent);
      for (int c : t.nodes[v].children) adj[v].push_back(c);
    }
    std::function<std::string(int, int)> ahu = [&](int v, int parent) -> std::string {
      std::vector<std::string> subs;
      for (int w : adj[v])
        if (w != parent) subs.push_back(ahu(w, v));
      std::sort(subs.begin(), subs.end());
      std::string s2 = "(";
      for (auto& x : subs) s2 += x;
      s2 += ")";
      return s2;
    };
    // Centers by leaf stripping.
    std::vector<int> deg(nn);
    for (int v = 0; v < nn; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<bool> gone(nn, false);
    std::vector<int> cur;
    for (int v = 0; v < nn; ++v)
      if (deg[v] <= 1) cur.push_back(v);
    int remaining = nn;
    while (remaining > 2) {
      std::vector<int> next;
      for (int v : cur) {
        gone[v] = true;
        --remaining;
        for (int w : adj[v])
          if (!gone[w] && --deg[w] == 1) next.push_back(w);
      }
      cur = next;
    }
    std::vector<int> centers;
    for (int v = 0; v < nn; ++v)
      if (!gone[v]) centers.push_back(v);
    std::string canon;
    if (centers.size() == 1) {
      canon = ahu(centers[0], -1);
    } else {
      std::string a = ahu(centers[0], centers[1]) + ahu(centers[1], centers[0]);
      std::string b = ahu(centers[1], centers[0]) + ahu(centers[0], centers[1]);
      canon = std::min(a, b);
    }
    if (seen.insert(canon).second) out.push_back(t);
  }
  return out;
}

inline std::vector<PlaneTree> free_trees_up_to(int max_vertices) {
  std::vector<PlaneTree> out;
  for (int n = 1; n <= max_vertices; ++n)
    for (PlaneTree& t : free_trees(n)) out.push_back(std::move(t));
  return out;
}

}  // namespace flatfold::testing
