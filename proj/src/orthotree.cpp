#include "flatfold/orthotree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace flatfold {

namespace {

constexpr double kInfDist = std::numeric_limits<double>::infinity();

double point_to_crease_distance(const CreasePattern& p, const Point2& q, CreaseId c) {
  Point2 a, b;
  bool ray = p.is_ray(c);
  if (ray) {
    a = p.vertices[p.ray(c).apex];
    b = a + unit(p.ray(c).dir);
  } else {
    a = p.vertices[p.segment(c).a];
    b = p.vertices[p.segment(c).b];
  }
  Vec2 d = b - a;
  double len2 = d.dot(d);
  double t = (q - a).dot(d) / len2;
  if (ray)
    t = std::max(t, 0.0);
  else
    t = std::clamp(t, 0.0, 1.0);
  return dist(a + d * t, q);
}

// Clearance around a vertex: nearest other vertex or non-incident crease.
double vertex_clearance(const CreasePattern& p, VertexId v) {
  double best = kInfDist;
  for (VertexId u = 0; u < p.vertex_count(); ++u)
    if (u != v) best = std::min(best, dist(p.vertices[u], p.vertices[v]));
  for (CreaseId c = 0; c < p.crease_count(); ++c)
    if (!p.crease_incident(c, v))
      best = std::min(best, point_to_crease_distance(p, p.vertices[v], c));
  return std::min(best, p.clip_radius() * 0.5);
}

// Angular hull of a set of directions: the smallest wedge containing all
// of them, found via the largest cyclic gap.
struct AngularHull {
  double start = 0.0;    // radians
  double opening = 0.0;  // radians
  double bisector() const { return start + opening * 0.5; }
};

AngularHull angular_hull(std::vector<double> dirs) {
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             dirs.end());
  const double tau = 2 * std::numbers::pi;
  double biggest = -1, start = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    double a = dirs[i];
    double b = dirs[(i + 1) % dirs.size()] + (i + 1 == dirs.size() ? tau : 0.0);
    if (b - a > biggest) {
      biggest = b - a;
      start = b;
    }
  }
  AngularHull h;
  h.start = TurnAngle::wrap_radians(start);
  h.opening = dirs.size() == 1 ? 0.0 : tau - biggest;
  return h;
}

double wrap_pm_pi(double a) {
  const double tau = 2 * std::numbers::pi;
  a = std::fmod(a, tau);
  if (a > std::numbers::pi) a -= tau;
  if (a < -std::numbers::pi) a += tau;
  return a;
}

// Split crease c of p at a new vertex located at distance t from v along
// the crease (v must be an endpoint); appends the new vertex and returns
// its id.
VertexId split_crease_at(CreasePattern& p, CreaseId c, VertexId v, double t,
                         std::vector<Segment>& new_segments, std::vector<Ray>& new_rays,
                         std::vector<CreaseId>& dead) {
  TurnAngle dir = p.direction_at(c, v);
  Point2 w = p.vertices[v] + unit(dir) * t;
  VertexId wid = p.vertex_count();
  p.vertices.push_back(w);
  dead.push_back(c);
  Segment inner{v, wid, dir.exact() ? std::optional<TurnAngle>(dir) : std::nullopt};
  new_segments.push_back(inner);
  if (p.is_ray(c)) {
    new_rays.push_back({wid, p.ray(c).dir});
  } else {
    const Segment& s = p.segment(c);
    VertexId u = s.a == v ? s.b : s.a;
    Segment outer{wid, u, dir.exact() ? std::optional<TurnAngle>(dir) : std::nullopt};
    new_segments.push_back(outer);
  }
  return wid;
}

void apply_crease_edits(CreasePattern& p, const std::vector<CreaseId>& dead,
                        const std::vector<Segment>& new_segments,
                        const std::vector<Ray>& new_rays) {
  std::vector<bool> is_dead(p.crease_count(), false);
  for (CreaseId c : dead) is_dead[c] = true;
  CreasePattern out;
  out.vertices = p.vertices;
  for (CreaseId c = 0; c < p.crease_count(); ++c) {
    if (is_dead[c]) continue;
    if (p.is_ray(c))
      out.rays.push_back(p.ray(c));
    else
      out.segments.push_back(p.segment(c));
  }
  for (const Segment& s : new_segments) out.segments.push_back(s);
  for (const Ray& r : new_rays) out.rays.push_back(r);
  p = std::move(out);
}

}  // namespace

CreasePattern quarter_fold_pattern() {
  CreasePattern p;
  p.vertices.push_back({0, 0});
  for (int k = 0; k < 4; ++k) p.rays.push_back({0, TurnAngle::turns(k, 4)});
  return p;
}

FoldingGraph wheel_replace_graph(const FoldingGraph& g, const WheelStep& step) {
  int target = step.at_infinity ? g.infinity() : step.target;
  if (step.at_infinity && !g.has_infinity)
    throw ortho_error("wheel_replace_graph: graph has no vertex at infinity");
  if (target < 0 || target >= g.vertex_count())
    throw ortho_error("wheel_replace_graph: target out of range");
  const std::vector<int>& rot = g.rotation[target];
  const int d = static_cast<int>(rot.size());
  if (d < 3) throw ortho_error("wheel_replace_graph: target degree below 3");
  for (int e : rot)
    if (g.edges[e].u == target && g.edges[e].v == target)
      throw ortho_error("wheel_replace_graph: loop at target");

  FoldingGraph out;
  out.n = g.n + d;
  out.has_infinity = g.has_infinity;
  const int old_inf = g.infinity();
  const int new_inf = out.infinity();
  // Hub keeps the target's identity; ∞ stays ∞ (it moves to the new last
  // index when finite vertices are added).
  int hub = step.at_infinity ? new_inf : target;
  auto remap = [&](int v) {
    if (g.has_infinity && v == old_inf) return new_inf;
    return v;
  };

  out.edges.reserve(g.edges.size() + 2 * d);
  for (const auto& e : g.edges) out.edges.push_back({remap(e.u), remap(e.v)});
  std::vector<int> cycle(d);
  for (int k = 0; k < d; ++k) cycle[k] = g.n + k;
  for (int k = 0; k < d; ++k) {
    auto& e = out.edges[rot[k]];
    if (e.u == remap(target))
      e.u = cycle[k];
    else if (e.v == remap(target))
      e.v = cycle[k];
    else
      throw ortho_error("wheel_replace_graph: rotation references non-incident edge");
  }
  std::vector<int> cycle_edges(d), spoke_edges(d);
  for (int k = 0; k < d; ++k) {
    cycle_edges[k] = static_cast<int>(out.edges.size());
    out.edges.push_back({cycle[k], cycle[(k + 1) % d]});
  }
  for (int k = 0; k < d; ++k) {
    spoke_edges[k] = static_cast<int>(out.edges.size());
    out.edges.push_back({hub, cycle[k]});
  }

  out.rotation.assign(out.vertex_count(), {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == target) continue;
    out.rotation[remap(v)] = g.rotation[v];
  }
  for (int k = 0; k < d; ++k)
    out.rotation[cycle[k]] = {rot[k], cycle_edges[k], spoke_edges[k],
                              cycle_edges[(k + d - 1) % d]};
  for (int k = 0; k < d; ++k) out.rotation[hub].push_back(spoke_edges[k]);
  return out;
}

CreasePattern wheel_replace_fold(const CreasePattern& p, VertexId v,
                                 std::optional<double> delta) {
  FoldMap m = FoldMap::build(p);
  std::vector<std::pair<TurnAngle, CreaseId>> inc;
  for (CreaseId c : p.creases_at(v)) inc.push_back({p.direction_at(c, v), c});
  std::sort(inc.begin(), inc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const int d = static_cast<int>(inc.size());
  if (d < 3) throw ortho_error("wheel_replace_fold: vertex degree below 3");

  // Image directions of the creases at φ(v); their hull is the image
  // wedge of a neighborhood of v.
  std::vector<double> psi;
  for (auto& [dir, c] : inc) {
    FaceId f = m.complex().faces_of_crease(c).first;
    psi.push_back(m.iso(f).map_direction(dir).rad());
  }
  AngularHull hull = angular_hull(psi);
  if (hull.opening >= std::numbers::pi - 1e-9)
    throw ortho_error("wheel_replace_fold: image wedge opens to at least a half turn");

  double clear = vertex_clearance(p, v);
  double cos_half = std::cos(hull.opening * 0.5);
  double dl = delta.value_or(0.5 * clear * cos_half);
  if (dl <= 0 || dl / cos_half >= clear)
    throw ortho_error("wheel_replace_fold: no safe chord distance");

  CreasePattern out = p;
  std::vector<Segment> new_segments;
  std::vector<Ray> new_rays;
  std::vector<CreaseId> dead;
  std::vector<VertexId> ring;
  for (int k = 0; k < d; ++k) {
    double t = dl / std::cos(wrap_pm_pi(psi[k] - hull.bisector()));
    ring.push_back(split_crease_at(out, inc[k].second, v, t, new_segments, new_rays, dead));
  }
  for (int k = 0; k < d; ++k) new_segments.push_back({ring[k], ring[(k + 1) % d], {}});
  apply_crease_edits(out, dead, new_segments, new_rays);
  return out;
}

CreasePattern wheel_replace_fold_at_infinity(const CreasePattern& p) {
  FoldMap m = FoldMap::build(p);
  if (p.rays.empty())
    throw ortho_error("wheel_replace_fold_at_infinity: no rays");

  FoldingGraph fg = folding_graph(p);
  std::vector<CreaseId> ray_creases = fg.rotation[fg.infinity()];
  std::vector<double> psi(p.crease_count(), 0.0);
  std::vector<double> hull_dirs;
  for (CreaseId c : ray_creases) {
    FaceId f = m.complex().faces_of_crease(c).first;
    psi[c] = m.iso(f).map_direction(p.ray(c).dir).rad();
    hull_dirs.push_back(psi[c]);
  }
  AngularHull hull = angular_hull(hull_dirs);
  if (hull.opening >= std::numbers::pi - 1e-9)
    throw ortho_error("wheel_replace_fold_at_infinity: folded image not inside a wedge");

  const double big = 2.0 * p.clip_radius();
  Vec2 beta = {std::cos(hull.bisector()), std::sin(hull.bisector())};
  CreasePattern out = p;
  std::vector<Segment> new_segments;
  std::vector<Ray> new_rays;
  std::vector<CreaseId> dead;
  std::map<CreaseId, VertexId> ring;
  for (CreaseId c : ray_creases) {
    const Ray& r = p.ray(c);
    Point2 image_apex = m.iso(m.complex().faces_of_crease(c).first)(p.vertices[r.apex]);
    double cosd = std::cos(wrap_pm_pi(psi[c] - hull.bisector()));
    double s = (big - image_apex.dot(beta)) / cosd;
    if (s <= 0) throw ortho_error("wheel_replace_fold_at_infinity: chord behind a ray");
    ring[c] = split_crease_at(out, c, r.apex, s, new_segments, new_rays, dead);
  }
  // One pulled-back chord piece per unbounded face, joining the new
  // vertices of its two boundary rays.
  for (const Face& f : m.complex().faces) {
    if (f.bounded) continue;
    CreaseId cin = m.complex().darts[f.darts.front()].crease;
    CreaseId cout = m.complex().darts[f.darts.back()].crease;
    new_segments.push_back({ring.at(cout), ring.at(cin), {}});
  }
  apply_crease_edits(out, dead, new_segments, new_rays);
  return out;
}

FoldingGraph orthotree_graph(const DualOrthotreeSpec& spec) {
  FoldingGraph g;
  g.n = 1;
  g.has_infinity = true;
  for (int k = 0; k < 4; ++k) g.edges.push_back({0, g.infinity()});
  g.rotation.assign(2, {});
  for (int k = 0; k < 4; ++k) {
    g.rotation[0].push_back(k);
    g.rotation[1].push_back(k);
  }
  for (const WheelStep& s : spec.steps) g = wheel_replace_graph(g, s);
  return g;
}

CreasePattern realize_dual_orthotree(const DualOrthotreeSpec& spec) {
  CreasePattern pat = quarter_fold_pattern();
  // Abstract vertex id -> pattern vertex id; cycle vertices are appended
  // in rotation order on both sides, which keeps the map aligned.
  std::vector<int> abs_to_pat{0};
  int abs_n = 1;
  for (const WheelStep& s : spec.steps) {
    if (s.at_infinity) {
      int before = pat.vertex_count();
      pat = wheel_replace_fold_at_infinity(pat);
      int added = pat.vertex_count() - before;
      for (int k = 0; k < added; ++k) abs_to_pat.push_back(before + k);
      abs_n += added;
    } else {
      if (s.target < 0 || s.target >= abs_n)
        throw ortho_error("realize_dual_orthotree: step targets unknown vertex");
      int before = pat.vertex_count();
      pat = wheel_replace_fold(pat, abs_to_pat[s.target]);
      int added = pat.vertex_count() - before;
      for (int k = 0; k < added; ++k) abs_to_pat.push_back(before + k);
      abs_n += added;
    }
  }
  return pat;
}

bool multigraph_isomorphic(const FoldingGraph& a, const FoldingGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edges.size() != b.edges.size()) return false;
  std::vector<std::vector<int>> ma(n, std::vector<int>(n, 0)), mb = ma;
  for (const auto& e : a.edges) {
    ma[e.u][e.v]++;
    ma[e.v][e.u]++;
  }
  for (const auto& e : b.edges) {
    mb[e.u][e.v]++;
    mb[e.v][e.u]++;
  }
  std::vector<int> da(n, 0), db(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      da[v] += ma[v][w];
      db[v] += mb[v][w];
    }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (ma[v][u] != mb[w][map[u]]) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(0);
}

DualOrthotreeSpec dali_cross_spec() {
  // Eight cubes: the top cube first, the rest glued downward and four
  // arms around the second cube from the top, one wheel step per cube.
  DualOrthotreeSpec s;
  auto fin = [](int t) { return WheelStep{false, t}; };
  s.steps = {fin(0), fin(0), fin(5), fin(6), fin(7), fin(8), fin(0), fin(0)};
  return s;
}

}  // namespace flatfold
