#include "flatfold/treefold.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "flatfold/convex.hpp"

namespace flatfold {

FoldabilityCheck check_tree_foldable(const PlaneTree& t) {
  FoldabilityCheck r;
  if (t.node_count() == 0) {
    r.reason = "empty tree";
    return r;
  }
  bool any_internal = false;
  for (int v = 0; v < t.node_count(); ++v) {
    if (!t.is_internal(v)) continue;
    any_internal = true;
    int d = t.degree(v);
    if (d % 2 != 0 || d < 4) {
      r.witness = v;
      r.reason = "internal vertex " + std::to_string(v) + " has degree " + std::to_string(d);
      return r;
    }
  }
  if (!any_internal) {
    r.reason = "tree has no internal vertex";
    return r;
  }
  r.foldable = true;
  return r;
}

namespace {

// Cyclic neighbor order at a node: parent first, then children.
std::vector<int> cyclic_neighbors(const PlaneTree& t, int v) {
  std::vector<int> out;
  if (t.nodes[v].parent >= 0) out.push_back(t.nodes[v].parent);
  for (int c : t.nodes[v].children) out.push_back(c);
  return out;
}

// Geometric identity of a pending leaf ray during construction; crease
// ids shift while the pattern grows, vertex ids do not.
struct PendingRay {
  int apex_vertex = -1;
  TurnAngle dir;
  Fraction wedge_opening;  // turns
};

struct Builder {
  const PlaneTree& t;
  CreasePattern pat;
  std::vector<int> node_vertex;
  std::map<int, PendingRay> edge_ray;  // keyed by child tree-node id
  std::vector<Point2> stack_markers;   // current stack, bottom to top
  struct MarkerStep {
    std::vector<Point2> faces;
    std::vector<Point2> hinges;
    int anchor = 0;
  };
  std::vector<MarkerStep> steps;
  // Wedge bookkeeping keyed by (apex vertex, exact direction).
  std::map<std::pair<int, std::pair<std::int64_t, std::int64_t>>, Wedge> wedges;

  explicit Builder(const PlaneTree& tree) : t(tree) {
    node_vertex.assign(t.node_count(), -1);
  }

  static std::pair<std::int64_t, std::int64_t> dir_key(const TurnAngle& d) {
    Fraction f = d.turn_fraction();
    return {f.num, f.den};
  }

  void add_wedge(int apex_vertex, const TurnAngle& dir, Fraction opening) {
    Wedge w;
    w.apex = pat.vertices[apex_vertex];
    w.opening = TurnAngle::turns(opening);
    w.start = dir - TurnAngle::turns(opening * Fraction(1, 2));
    wedges[{apex_vertex, dir_key(dir)}] = w;
  }
  void drop_wedge(int apex_vertex, const TurnAngle& dir) {
    wedges.erase({apex_vertex, dir_key(dir)});
  }

  void base_star(int center) {
    const int d = t.degree(center);
    Fraction theta(1, 2 * (d + 1));  // θ = π/(d+1) in turns
    pat.vertices.push_back({0, 0});
    node_vertex[center] = 0;
    std::vector<int> nbrs = cyclic_neighbors(t, center);
    std::vector<TurnAngle> dirs;
    Fraction at(0);
    for (int k = 0; k < d; ++k) {
      TurnAngle dir = TurnAngle::turns(at);
      dirs.push_back(dir);
      pat.rays.push_back({0, dir});
      edge_ray[nbrs[k]] = {0, dir, Fraction(2) * theta};
      add_wedge(0, dir, Fraction(2) * theta);
      at = at + (k < 2 ? Fraction(3) : Fraction(2)) * theta;
    }
    // Stack the faces with the two wide wedges (gaps 0 and 1) outermost:
    // F_1, F_2, ..., F_{d-1}, F_0 bottom to top.
    MarkerStep step;
    auto gap_mid = [&](int k) {
      TurnAngle a = dirs[k];
      TurnAngle b = dirs[(k + 1) % d];
      return a + (b - a).scaled(Fraction(1, 2));
    };
    for (int k = 1; k <= d; ++k) {
      Point2 marker = unit(gap_mid(k % d)) * 0.7;
      step.faces.push_back(marker);
      stack_markers.push_back(marker);
      if (k < d) step.hinges.push_back(unit(dirs[(k + 1) % d]) * 0.5);
    }
    step.anchor = 0;
    steps.push_back(std::move(step));
  }

  void expand(int v) {
    PendingRay pr = edge_ray.at(v);
    edge_ray.erase(v);
    const int d = t.degree(v);
    const Fraction theta = pr.wedge_opening;
    const Fraction sub = theta / Fraction(d);
    const TurnAngle rho = pr.dir;
    Point2 apex = pat.vertices[pr.apex_vertex];
    Point2 vpos = apex + unit(rho);

    // Identify the current stack markers of the two faces flanking the
    // consumed ray, probing just inside each half of its wedge.
    FaceComplex fc = build_faces(pat);
    TurnAngle probe_off = TurnAngle::turns(theta * Fraction(1, 8));
    Point2 pl = apex + unit(rho + probe_off) * 0.5;
    Point2 prr = apex + unit(rho - probe_off) * 0.5;
    FaceId fl = fc.locate(pl), fr = fc.locate(prr);
    int ml = -1, mr = -1;
    for (std::size_t i = 0; i < stack_markers.size(); ++i) {
      FaceId f = fc.locate(stack_markers[i]);
      if (f == fl) ml = static_cast<int>(i);
      if (f == fr) mr = static_cast<int>(i);
    }
    if (ml < 0 || mr < 0) throw tree_error("expand: flanking faces lost");

    int vid = pat.vertex_count();
    pat.vertices.push_back(vpos);
    node_vertex[v] = vid;

    // Replace the ray with a segment to v and d−1 new rays inside the
    // wedge, separated from each other and from the wedge boundary by θ/d.
    auto it = std::find_if(pat.rays.begin(), pat.rays.end(), [&](const Ray& r) {
      return r.apex == pr.apex_vertex && r.dir.same_direction(rho);
    });
    if (it == pat.rays.end()) throw tree_error("expand: consumed ray missing");
    pat.rays.erase(it);
    drop_wedge(pr.apex_vertex, rho);
    pat.segments.push_back({pr.apex_vertex, vid, rho});

    const auto& children = t.nodes[v].children;
    if (static_cast<int>(children.size()) != d - 1)
      throw tree_error("expand: child count mismatch");
    std::vector<TurnAngle> ray_dirs;
    for (int k = 1; k <= d - 1; ++k) {
      Fraction off = sub * Fraction(k) - theta * Fraction(1, 2);
      TurnAngle dir = rho + TurnAngle::turns(off);
      ray_dirs.push_back(dir);
      pat.rays.push_back({vid, dir});
      edge_ray[children[k - 1]] = {vid, dir, sub};
      add_wedge(vid, dir, sub);
    }

    // Vertex pleat: big-left face, slivers from the left side to the
    // right, big-right face; hinges are the new rays from ccw to cw.
    MarkerStep step;
    step.faces.push_back(stack_markers[ml]);
    std::vector<Point2> sliver_markers;
    for (int j = d - 2; j >= 1; --j) {
      TurnAngle mid = ray_dirs[j - 1] + (ray_dirs[j] - ray_dirs[j - 1]).scaled(Fraction(1, 2));
      Point2 marker = vpos + unit(mid) * 0.5;
      step.faces.push_back(marker);
      step.hinges.push_back(vpos + unit(ray_dirs[j]) * 0.5);
      sliver_markers.push_back(marker);
    }
    step.hinges.push_back(vpos + unit(ray_dirs[0]) * 0.5);
    step.faces.push_back(stack_markers[mr]);
    steps.push_back(step);

    // Mirror the splice in the marker stack: insert next to the left
    // flank toward the right flank.
    if (ml < mr) {
      stack_markers.insert(stack_markers.begin() + ml + 1, sliver_markers.begin(),
                           sliver_markers.end());
    } else {
      std::reverse(sliver_markers.begin(), sliver_markers.end());
      stack_markers.insert(stack_markers.begin() + ml, sliver_markers.begin(),
                           sliver_markers.end());
    }
  }

  TreeRealization finish() {
    TreeRealization out;
    pat.normalize();
    out.pattern = pat;
    out.node_vertex = node_vertex;

    FaceComplex fc = build_faces(pat);
    auto locate_crease = [&](const Point2& q) -> CreaseId {
      for (CreaseId c = 0; c < pat.crease_count(); ++c) {
        Point2 a, b;
        if (pat.is_ray(c)) {
          a = pat.vertices[pat.ray(c).apex];
          b = a + unit(pat.ray(c).dir) * pat.clip_radius();
        } else {
          a = pat.vertices[pat.segment(c).a];
          b = pat.vertices[pat.segment(c).b];
        }
        Vec2 d = b - a;
        double len = d.norm();
        double tt = std::clamp((q - a).dot(d) / (len * len), 0.0, 1.0);
        if (dist(a + d * tt, q) <= 1e-9) return c;
      }
      throw tree_error("finish: hinge crease not found");
    };
    for (const MarkerStep& ms : steps) {
      PleatStep ps;
      for (const Point2& q : ms.faces) ps.faces.push_back(fc.locate(q));
      for (const Point2& q : ms.hinges) ps.creases.push_back(locate_crease(q));
      ps.anchor = ms.anchor;
      for (std::size_t i = 0; i + 1 < ps.faces.size(); ++i)
        ps.signs.push_back(i % 2 == 0 ? FoldSign::Valley : FoldSign::Mountain);
      out.plan.steps.push_back(FoldStep::make_pleat(std::move(ps)));
    }
    for (CreaseId c = 0; c < pat.crease_count(); ++c) {
      if (!pat.is_ray(c)) continue;
      const Ray& r = pat.ray(c);
      auto it = wedges.find({r.apex, Builder::dir_key(r.dir)});
      if (it == wedges.end()) throw tree_error("finish: missing wedge for ray");
      out.cert.wedges[c] = it->second;
    }
    return out;
  }
};

}  // namespace

TreeRealization realize_base_star(int d) {
  if (d < 4 || d % 2 != 0)
    throw tree_error("realize_base_star: degree must be even and at least 4");
  PlaneTree t;
  t.nodes.resize(1 + d);
  t.root = 0;
  for (int k = 1; k <= d; ++k) {
    t.nodes[k].parent = 0;
    t.nodes[0].children.push_back(k);
  }
  return realize_tree(t);
}

TreeRealization realize_tree(const PlaneTree& t) {
  FoldabilityCheck chk = check_tree_foldable(t);
  if (!chk.foldable) throw tree_error("realize_tree: " + chk.reason);

  // BFS depths from the fixed root for the deepest-vertex choice.
  std::vector<int> depth(t.node_count(), -1);
  std::deque<int> bfs{t.root};
  depth[t.root] = 0;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (int c : t.nodes[v].children) {
      depth[c] = depth[v] + 1;
      bfs.push_back(c);
    }
  }

  // Peel deepest internal vertices until a single internal vertex
  // remains; expansions replay the removals in reverse.
  std::set<int> removed;
  auto alive_internal = [&](int v) {
    if (removed.count(v)) return false;
    int deg = 0;
    if (t.nodes[v].parent >= 0 && !removed.count(t.nodes[v].parent)) deg++;
    for (int c : t.nodes[v].children)
      if (!removed.count(c)) deg++;
    return deg >= 2;
  };
  std::vector<int> order;
  for (;;) {
    std::vector<int> internals;
    for (int v = 0; v < t.node_count(); ++v)
      if (alive_internal(v)) internals.push_back(v);
    if (internals.size() <= 1) {
      if (internals.empty()) throw tree_error("realize_tree: lost all internal vertices");
      Builder b(t);
      b.base_star(internals[0]);
      for (auto it = order.rbegin(); it != order.rend(); ++it) b.expand(*it);
      return b.finish();
    }
    int pick = -1;
    for (int v : internals)
      if (pick < 0 || depth[v] > depth[pick] || (depth[v] == depth[pick] && v < pick))
        pick = v;
    order.push_back(pick);
    for (int c : t.nodes[pick].children)
      if (!removed.count(c)) removed.insert(c);
  }
}

CheckReport wedge_cert_check(const CreasePattern& p, const WedgeCert& cert) {
  CheckReport rep;
  const double r = p.clip_radius();
  auto wedge_poly = [&](const Wedge& w) {
    std::vector<Point2> poly = {{-r, -r}, {r, -r}, {r, r}, {-r, r}};
    poly = clip_halfplane(poly, w.apex, w.apex + unit(w.start));
    poly = clip_halfplane(poly, w.apex + unit(w.end()), w.apex);
    return poly;
  };

  std::vector<CreaseId> rays;
  for (CreaseId c = 0; c < p.crease_count(); ++c)
    if (p.is_ray(c)) rays.push_back(c);
  for (CreaseId c : rays) {
    auto it = cert.wedges.find(c);
    if (it == cert.wedges.end()) {
      rep.failures.push_back({"wedge-missing", "ray crease " + std::to_string(c)});
      continue;
    }
    const Wedge& w = it->second;
    const Ray& ray = p.ray(c);
    if (!close(w.apex, p.vertices[ray.apex]))
      rep.failures.push_back({"wedge-apex", "ray crease " + std::to_string(c)});
    TurnAngle median = w.bisector();
    bool median_ok = (ray.dir.exact() && median.exact())
                         ? ray.dir.turn_fraction() == median.turn_fraction()
                         : ray.dir.same_direction(median);
    if (!median_ok)
      rep.failures.push_back({"wedge-median", "ray crease " + std::to_string(c)});
  }

  // Pairwise interior disjointness on clipped regions.
  std::vector<std::pair<CreaseId, std::vector<Point2>>> polys;
  for (const auto& [c, w] : cert.wedges) polys.push_back({c, wedge_poly(w)});
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      auto inter = convex_intersection(polys[i].second, polys[j].second);
      if (std::abs(polygon_area2(inter)) * 0.5 > 1e-9)
        rep.failures.push_back(
            {"wedge-overlap", "wedges of creases " + std::to_string(polys[i].first) + " and " +
                                  std::to_string(polys[j].first)});
    }
  }

  // Non-ray edges stay clear of every wedge.
  for (const auto& [c, poly] : polys) {
    for (const Segment& s : p.segments) {
      if (segment_length_inside(poly, p.vertices[s.a], p.vertices[s.b]) > 1e-7)
        rep.failures.push_back({"wedge-edge", "segment meets wedge of crease " +
                                                  std::to_string(c)});
    }
  }
  return rep;
}

// ── Plane-tree isomorphism ──────────────────────────────────────────

std::vector<std::vector<int>> plane_adjacency(const PlaneTree& t) {
  std::vector<std::vector<int>> adj(t.node_count());
  for (int v = 0; v < t.node_count(); ++v) adj[v] = cyclic_neighbors(t, v);
  return adj;
}

std::vector<std::vector<int>> plane_adjacency(const TruncatedGraph& g) {
  return g.neighbors;
}

namespace {

void encode_from(const std::vector<std::vector<int>>& adj, int v, int parent,
                 std::string& out) {
  const auto& nb = adj[v];
  int start = 0;
  const int k = static_cast<int>(nb.size());
  for (int i = 0; i < k; ++i)
    if (nb[i] == parent) start = i;
  out.push_back('(');
  for (int i = 1; i <= k; ++i) {
    int w = nb[(start + i) % k];
    if (w == parent && i == k) continue;
    encode_from(adj, w, v, out);
  }
  out.push_back(')');
}

}  // namespace

std::string plane_tree_canonical(const std::vector<std::vector<int>>& adj) {
  std::string best;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (int v : adj[u]) {
      // Root the encoding at dart u→v: u's neighbor list rotated so v
      // comes first, no parent.
      std::string s;
      s.push_back('(');
      const auto& nb = adj[u];
      const int k = static_cast<int>(nb.size());
      int start = 0;
      for (int i = 0; i < k; ++i)
        if (nb[i] == v) start = i;
      for (int i = 0; i < k; ++i)
        encode_from(adj, nb[(start + i) % k], static_cast<int>(u), s);
      s.push_back(')');
      if (best.empty() || s < best) best = s;
    }
  }
  if (best.empty()) best = "()";  // single vertex
  return best;
}

bool plane_tree_isomorphic(const std::vector<std::vector<int>>& a,
                           const std::vector<std::vector<int>>& b) {
  return plane_tree_canonical(a) == plane_tree_canonical(b);
}

}  // namespace flatfold
