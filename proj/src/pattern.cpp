#include "flatfold/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace flatfold {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CreaseSpan {
  Point2 origin;
  Vec2 dir;      // unit
  double tmax;   // segment length, or +inf for rays
};

CreaseSpan crease_span(const CreasePattern& p, CreaseId c) {
  if (p.is_ray(c)) {
    const Ray& r = p.ray(c);
    return {p.vertices[r.apex], unit(r.dir), kInf};
  }
  const Segment& s = p.segment(c);
  Vec2 d = p.vertices[s.b] - p.vertices[s.a];
  double len = d.norm();
  return {p.vertices[s.a], len > 0 ? d * (1.0 / len) : Vec2{1, 0}, len};
}

bool param_in_span(double t, double tmax, double eps) {
  return t >= -eps && (tmax == kInf || t <= tmax + eps);
}

// Cyclic order of ray ends around the vertex ∞. Orientation reverses at
// infinity, so rays sort by direction descending; parallel rays cross a
// large circle at angles offset by the perpendicular component of their
// apexes, larger offsets counterclockwise-later, hence first here.
bool infinity_before(const Ray& a, const Ray& b, const CreasePattern& p) {
  if (!a.dir.same_direction(b.dir)) return b.dir < a.dir;
  double pa = unit(a.dir).cross(p.vertices[a.apex]);
  double pb = unit(b.dir).cross(p.vertices[b.apex]);
  return pa > pb;
}

}  // namespace

std::pair<VertexId, VertexId> CreasePattern::crease_ends(CreaseId c) const {
  if (is_ray(c)) return {ray(c).apex, ray(c).apex};
  return {segment(c).a, segment(c).b};
}

bool CreasePattern::crease_incident(CreaseId c, VertexId v) const {
  auto [a, b] = crease_ends(c);
  return a == v || b == v;
}

TurnAngle CreasePattern::direction_at(CreaseId c, VertexId v) const {
  if (is_ray(c)) {
    if (ray(c).apex != v) throw pattern_error("direction_at: vertex not incident");
    return ray(c).dir;
  }
  const Segment& s = segment(c);
  TurnAngle from_a = s.dir_from_a ? *s.dir_from_a
                                  : direction(vertices[s.a], vertices[s.b]);
  if (v == s.a) return from_a;
  if (v == s.b) return from_a.antipode();
  throw pattern_error("direction_at: vertex not incident");
}

std::vector<CreaseId> CreasePattern::creases_at(VertexId v) const {
  std::vector<CreaseId> out;
  for (CreaseId c = 0; c < crease_count(); ++c)
    if (crease_incident(c, v)) out.push_back(c);
  return out;
}

double CreasePattern::clip_radius() const {
  double m = 0.0;
  for (const Point2& v : vertices) m = std::max({m, std::abs(v.x), std::abs(v.y)});
  return 2.0 * (m + 1.0);
}

void CreasePattern::normalize() {
  for (Segment& s : segments) {
    if (s.a > s.b) {
      std::swap(s.a, s.b);
      if (s.dir_from_a) s.dir_from_a = s.dir_from_a->antipode();
    }
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& x, const Segment& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  std::sort(rays.begin(), rays.end(), [](const Ray& x, const Ray& y) {
    if (x.apex != y.apex) return x.apex < y.apex;
    return x.dir < y.dir;
  });
}

// ── Validation ──────────────────────────────────────────────────────

ValidationReport validate_pattern(const CreasePattern& p) {
  ValidationReport rep;
  auto flag = [&rep](std::string code, std::string detail) {
    rep.violations.push_back({std::move(code), std::move(detail)});
  };

  if (p.vertices.empty()) {
    flag("no-vertex", "pattern has no vertex point");
    return rep;
  }
  for (const Point2& v : p.vertices)
    if (!std::isfinite(v.x) || !std::isfinite(v.y))
      flag("bad-coordinate", "non-finite vertex coordinate");

  for (int i = 0; i < p.vertex_count(); ++i)
    for (int j = i + 1; j < p.vertex_count(); ++j)
      if (close(p.vertices[i], p.vertices[j]))
        flag("duplicate-vertices",
             "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  for (const Segment& s : p.segments) {
    if (s.a < 0 || s.a >= p.vertex_count() || s.b < 0 || s.b >= p.vertex_count()) {
      flag("bad-reference", "segment endpoint out of range");
      return rep;
    }
    if (s.a == s.b) flag("degenerate-crease", "segment with equal endpoints");
    if (s.dir_from_a) {
      double measured = direction(p.vertices[s.a], p.vertices[s.b]).rad();
      double stored = s.dir_from_a->rad();
      double d = std::abs(measured - stored);
      d = std::min(d, 2 * std::numbers::pi - d);
      if (d > 1e-6)
        flag("inconsistent-direction", "stored exact segment direction disagrees with coordinates");
    }
  }
  for (const Ray& r : p.rays)
    if (r.apex < 0 || r.apex >= p.vertex_count()) {
      flag("bad-reference", "ray apex out of range");
      return rep;
    }
  if (!rep.ok()) return rep;

  const int nc = p.crease_count();
  std::vector<CreaseSpan> spans;
  spans.reserve(nc);
  for (CreaseId c = 0; c < nc; ++c) spans.push_back(crease_span(p, c));

  // Pairwise crossing / overlap; contact is allowed only at a shared
  // endpoint vertex.
  for (CreaseId i = 0; i < nc; ++i) {
    for (CreaseId j = i + 1; j < nc; ++j) {
      const CreaseSpan& s1 = spans[i];
      const CreaseSpan& s2 = spans[j];
      double denom = s1.dir.cross(s2.dir);
      Vec2 w = s2.origin - s1.origin;
      auto name = [&](CreaseId c) { return std::to_string(c); };
      if (std::abs(denom) < 1e-12) {
        if (std::abs(w.cross(s1.dir)) > kLenEps) continue;  // parallel, distinct lines
        // Collinear: project onto s1's direction and compare spans.
        double a0 = 0, a1 = s1.tmax;
        double b0 = w.dot(s1.dir);
        double b1 = s2.tmax == kInf ? (s2.dir.dot(s1.dir) > 0 ? kInf : -kInf)
                                    : b0 + s2.tmax * s2.dir.dot(s1.dir);
        if (b1 < b0) std::swap(b0, b1);
        double lo = std::max(a0, b0), hi = std::min(a1, b1);
        if (hi - lo > kLenEps)
          flag("crossing-creases", "creases " + name(i) + " and " + name(j) + " overlap");
        continue;
      }
      double t1 = w.cross(s2.dir) / denom;
      double t2 = w.cross(s1.dir) / denom;
      if (!param_in_span(t1, s1.tmax, kLenEps) || !param_in_span(t2, s2.tmax, kLenEps))
        continue;
      Point2 x = s1.origin + s1.dir * t1;
      bool shared = false;
      for (VertexId v = 0; v < p.vertex_count(); ++v) {
        if (close(p.vertices[v], x) && p.crease_incident(i, v) && p.crease_incident(j, v)) {
          shared = true;
          break;
        }
      }
      if (!shared)
        flag("crossing-creases", "creases " + name(i) + " and " + name(j) +
                                     " cross at a non-vertex");
    }
  }

  // A crease may not pass through a vertex point that is not its endpoint.
  for (CreaseId c = 0; c < nc; ++c) {
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
      if (p.crease_incident(c, v)) continue;
      const CreaseSpan& s = spans[c];
      double t = (p.vertices[v] - s.origin).dot(s.dir);
      if (!param_in_span(t, s.tmax, kLenEps)) continue;
      t = std::clamp(t, 0.0, s.tmax == kInf ? t : s.tmax);
      if (dist(s.origin + s.dir * t, p.vertices[v]) <= kLenEps)
        flag("crossing-creases",
             "crease " + std::to_string(c) + " passes through vertex " + std::to_string(v));
    }
  }

  // A point with exactly two collinear creases is a crease point, not a
  // vertex point.
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    auto cs = p.creases_at(v);
    if (cs.empty())
      flag("isolated-vertex", "vertex " + std::to_string(v) + " has no incident crease");
    if (cs.size() == 2) {
      TurnAngle d0 = p.direction_at(cs[0], v);
      TurnAngle d1 = p.direction_at(cs[1], v);
      if (d0.antipode().same_direction(d1))
        flag("collinear-degree-2",
             "vertex " + std::to_string(v) + " has exactly two collinear creases");
    }
  }
  return rep;
}

// ── Folding graph and truncated graph ───────────────────────────────

FoldingGraph folding_graph(const CreasePattern& p) {
  FoldingGraph g;
  g.n = p.vertex_count();
  g.has_infinity = !p.rays.empty();
  g.rotation.assign(g.vertex_count(), {});
  for (CreaseId c = 0; c < p.crease_count(); ++c) {
    if (p.is_ray(c))
      g.edges.push_back({p.ray(c).apex, g.infinity()});
    else
      g.edges.push_back({p.segment(c).a, p.segment(c).b});
  }
  for (int v = 0; v < g.n; ++v) {
    std::vector<std::pair<TurnAngle, int>> inc;
    for (CreaseId c = 0; c < p.crease_count(); ++c)
      if (p.crease_incident(c, v)) inc.push_back({p.direction_at(c, v), c});
    std::sort(inc.begin(), inc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [d, c] : inc) g.rotation[v].push_back(c);
  }
  if (g.has_infinity) {
    std::vector<CreaseId> inc;
    for (CreaseId c = 0; c < p.crease_count(); ++c)
      if (p.is_ray(c)) inc.push_back(c);
    std::sort(inc.begin(), inc.end(), [&p](CreaseId a, CreaseId b) {
      return infinity_before(p.ray(a), p.ray(b), p);
    });
    for (int c : inc) g.rotation[g.infinity()].push_back(c);
  }
  return g;
}

TruncatedGraph truncated_graph(const CreasePattern& p) {
  TruncatedGraph t;
  t.finite_n = p.vertex_count();
  int nrays = static_cast<int>(p.rays.size());
  t.neighbors.assign(t.finite_n + nrays, {});
  auto leaf_of_ray = [&](CreaseId c) {
    return t.finite_n + (c - static_cast<int>(p.segments.size()));
  };
  for (int v = 0; v < t.finite_n; ++v) {
    std::vector<std::pair<TurnAngle, int>> inc;
    for (CreaseId c = 0; c < p.crease_count(); ++c) {
      if (!p.crease_incident(c, v)) continue;
      int other;
      if (p.is_ray(c))
        other = leaf_of_ray(c);
      else
        other = p.segment(c).a == v ? p.segment(c).b : p.segment(c).a;
      inc.push_back({p.direction_at(c, v), other});
    }
    std::sort(inc.begin(), inc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [d, o] : inc) t.neighbors[v].push_back(o);
  }
  for (int j = 0; j < nrays; ++j)
    t.neighbors[t.finite_n + j].push_back(p.rays[j].apex);
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int o : t.neighbors[v])
      if (v < o) t.edges.push_back({v, o});
  return t;
}

// ── Face complex ────────────────────────────────────────────────────

std::pair<FaceId, FaceId> FaceComplex::faces_of_crease(CreaseId c) const {
  return {face_of[2 * c], face_of[2 * c + 1]};
}

namespace {

// Directed boundary element of a face: a supporting line with the face
// interior on its left.
struct BoundaryLine {
  Point2 p;
  Vec2 dir;
};

std::vector<BoundaryLine> boundary_lines(const Face& f) {
  std::vector<BoundaryLine> out;
  const auto& ch = f.chain;
  if (f.bounded) {
    for (std::size_t i = 0; i < ch.size(); ++i) {
      Vec2 d = ch[(i + 1) % ch.size()] - ch[i];
      out.push_back({ch[i], d});
    }
  } else {
    out.push_back({ch.front(), -unit(f.ray_in)});
    for (std::size_t i = 0; i + 1 < ch.size(); ++i)
      out.push_back({ch[i], ch[i + 1] - ch[i]});
    out.push_back({ch.back(), unit(f.ray_out)});
  }
  return out;
}

}  // namespace

bool FaceComplex::face_contains(FaceId f, const Point2& p, double eps) const {
  for (const BoundaryLine& b : boundary_lines(faces[f])) {
    double len = b.dir.norm();
    if (len <= kLenEps) continue;
    if (b.dir.cross(p - b.p) < -eps * len) return false;
  }
  return true;
}

std::vector<Point2> FaceComplex::clipped_polygon(FaceId f, double r) const {
  std::vector<Point2> poly = {{-r, -r}, {r, -r}, {r, r}, {-r, r}};
  for (const BoundaryLine& b : boundary_lines(faces[f])) {
    if (b.dir.norm() <= kLenEps) continue;
    std::vector<Point2> out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& cur = poly[i];
      const Point2& nxt = poly[(i + 1) % n];
      double sc = b.dir.cross(cur - b.p);
      double sn = b.dir.cross(nxt - b.p);
      if (sc >= 0) out.push_back(cur);
      if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
        double t = sc / (sc - sn);
        out.push_back(cur + (nxt - cur) * t);
      }
    }
    poly = std::move(out);
    if (poly.empty()) break;
  }
  return poly;
}

Point2 FaceComplex::face_sample(FaceId f) const {
  double r = pattern ? pattern->clip_radius() : 4.0;
  auto poly = clipped_polygon(f, r);
  if (poly.empty()) throw pattern_error("face_sample: empty clipped face");
  Point2 c{0, 0};
  for (const Point2& q : poly) c = c + q;
  return c * (1.0 / static_cast<double>(poly.size()));
}

FaceId FaceComplex::locate(const Point2& p, FaceId start) const {
  FaceId f = std::clamp(start, 0, face_count() - 1);
  int steps = 4 * face_count() + 16;
  while (steps-- > 0) {
    const Face& face = faces[f];
    auto lines = boundary_lines(face);
    double worst = 0.0;
    int worst_i = -1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      double len = lines[i].dir.norm();
      if (len <= kLenEps) continue;
      double s = lines[i].dir.cross(p - lines[i].p) / len;
      if (s < worst) {
        worst = s;
        worst_i = static_cast<int>(i);
      }
    }
    if (worst >= -kLenEps) return f;
    // Synthetic complexes (outer patterns) carry fewer darts than
    // boundary lines; fall back to scanning when the walk cannot map the
    // violated line to a crease.
    if (worst_i >= static_cast<int>(face.darts.size())) break;
    f = face_of[twin[face.darts[worst_i]]];
  }
  for (FaceId g = 0; g < face_count(); ++g)
    if (face_contains(g, p)) return g;
  throw pattern_error("locate: point location failed");
}

FaceComplex build_faces(const CreasePattern& p) {
  ValidationReport rep = validate_pattern(p);
  if (!rep.ok())
    throw pattern_error("build_faces: invalid pattern (" + rep.violations.front().code + ")");

  FaceComplex fc;
  fc.pattern = &p;
  const int inf = p.vertex_count();

  // Darts 2c and 2c+1 for crease c.
  for (CreaseId c = 0; c < p.crease_count(); ++c) {
    if (p.is_ray(c)) {
      const Ray& r = p.ray(c);
      fc.darts.push_back({c, r.apex, inf, r.dir});
      fc.darts.push_back({c, inf, r.apex, r.dir});
    } else {
      const Segment& s = p.segment(c);
      fc.darts.push_back({c, s.a, s.b, p.direction_at(c, s.a)});
      fc.darts.push_back({c, s.b, s.a, p.direction_at(c, s.b)});
    }
  }
  const int nd = static_cast<int>(fc.darts.size());
  fc.twin.resize(nd);
  for (int d = 0; d < nd; ++d) fc.twin[d] = d ^ 1;

  // Rotation lists: ccw by outgoing direction at finite vertices, by ray
  // direction descending at ∞ (orientation reverses at infinity).
  std::vector<std::vector<int>> rot(inf + 1);
  for (int d = 0; d < nd; ++d) rot[fc.darts[d].tail].push_back(d);
  for (int v = 0; v <= inf; ++v) {
    auto& lst = rot[v];
    if (v == inf)
      std::sort(lst.begin(), lst.end(), [&](int a, int b) {
        return infinity_before(p.ray(fc.darts[a].crease), p.ray(fc.darts[b].crease), p);
      });
    else
      std::sort(lst.begin(), lst.end(), [&](int a, int b) {
        return fc.darts[a].dir < fc.darts[b].dir;
      });
  }
  std::vector<int> pos(nd);
  for (int v = 0; v <= inf; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);

  // next(d): predecessor of twin(d) in the rotation at head(d); traces
  // faces with the interior on the left.
  fc.next.resize(nd);
  for (int d = 0; d < nd; ++d) {
    int td = fc.twin[d];
    const auto& lst = rot[fc.darts[d].head];
    int i = pos[td];
    fc.next[d] = lst[(i + lst.size() - 1) % lst.size()];
  }

  fc.face_of.assign(nd, -1);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (fc.face_of[d0] >= 0) continue;
    Face face;
    int fid = fc.face_count();
    std::vector<int> walk;
    int d = d0;
    do {
      fc.face_of[d] = fid;
      walk.push_back(d);
      d = fc.next[d];
    } while (d != d0);
    // Rotate the walk so an ∞-tail dart comes first for unbounded faces.
    int start = 0;
    face.bounded = true;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (fc.darts[walk[i]].tail == inf) {
        face.bounded = false;
        start = static_cast<int>(i);
        break;
      }
    }
    for (std::size_t i = 0; i < walk.size(); ++i)
      face.darts.push_back(walk[(start + i) % walk.size()]);
    if (face.bounded) {
      for (int dd : face.darts) {
        face.chain.push_back(p.vertices[fc.darts[dd].tail]);
        face.chain_ids.push_back(fc.darts[dd].tail);
      }
    } else {
      face.ray_in = fc.darts[face.darts.front()].dir;
      face.ray_out = fc.darts[face.darts.back()].dir;
      for (int dd : face.darts) {
        if (fc.darts[dd].tail == inf) continue;
        face.chain.push_back(p.vertices[fc.darts[dd].tail]);
        face.chain_ids.push_back(fc.darts[dd].tail);
      }
    }
    fc.faces.push_back(std::move(face));
  }
  return fc;
}

int euler_characteristic(const CreasePattern& p, const FaceComplex& fc) {
  int v = p.vertex_count() + (p.rays.empty() ? 0 : 1);
  int e = p.crease_count();
  return v - e + fc.face_count();
}

}  // namespace flatfold
