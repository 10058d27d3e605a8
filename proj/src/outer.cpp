#include "flatfold/outer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "flatfold/convex.hpp"

namespace flatfold {

// ── Regions ─────────────────────────────────────────────────────────

OuterRegion OuterRegion::disk(Point2 c, double r) {
  if (r <= 0) throw outer_error("disk: radius must be positive");
  OuterRegion k;
  k.kind = Kind::Disk;
  k.center = c;
  k.radius = r;
  return k;
}

OuterRegion OuterRegion::polygon(std::vector<Point2> pts) {
  if (pts.size() < 3) throw outer_error("polygon: need at least three vertices");
  double area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    area += pts[i].cross(pts[(i + 1) % pts.size()]);
  if (area < 0) std::reverse(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec2 a = pts[(i + 1) % pts.size()] - pts[i];
    Vec2 b = pts[(i + 2) % pts.size()] - pts[(i + 1) % pts.size()];
    if (a.cross(b) <= 0) throw outer_error("polygon: vertices must be strictly convex");
  }
  OuterRegion k;
  k.kind = Kind::Polygon;
  k.poly = std::move(pts);
  return k;
}

OuterRegion OuterRegion::square(Point2 corner, double side) {
  return polygon({corner, corner + Vec2{side, 0}, corner + Vec2{side, side},
                  corner + Vec2{0, side}});
}

double OuterRegion::perimeter() const {
  if (kind == Kind::Disk) return 2 * std::numbers::pi * radius;
  double p = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    p += dist(poly[i], poly[(i + 1) % poly.size()]);
  return p;
}

Point2 OuterRegion::at(double t) const {
  t -= std::floor(t);
  if (kind == Kind::Disk) {
    double a = 2 * std::numbers::pi * t;
    return center + Vec2{radius * std::cos(a), radius * std::sin(a)};
  }
  double target = t * perimeter();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Point2 a = poly[i], b = poly[(i + 1) % poly.size()];
    double len = dist(a, b);
    if (target <= len || i + 1 == poly.size()) {
      double s = len > 0 ? std::min(target / len, 1.0) : 0.0;
      return a + (b - a) * s;
    }
    target -= len;
  }
  return poly[0];
}

int OuterRegion::side_of(double t) const {
  if (kind == Kind::Disk) return -1;
  t -= std::floor(t);
  double target = t * perimeter();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    double len = dist(poly[i], poly[(i + 1) % poly.size()]);
    if (target < len - kLenEps || i + 1 == poly.size()) return static_cast<int>(i);
    target -= len;
  }
  return 0;
}

bool OuterRegion::is_square() const {
  if (kind != Kind::Polygon || poly.size() != 4) return false;
  double d01 = dist(poly[0], poly[1]), d12 = dist(poly[1], poly[2]);
  double d23 = dist(poly[2], poly[3]), d30 = dist(poly[3], poly[0]);
  if (std::abs(d01 - d12) > kLenEps || std::abs(d12 - d23) > kLenEps ||
      std::abs(d23 - d30) > kLenEps)
    return false;
  return std::abs((poly[1] - poly[0]).dot(poly[2] - poly[1])) < kLenEps;
}

std::vector<Point2> OuterRegion::boundary_poly(int arc_samples) const {
  if (kind == Kind::Polygon) return poly;
  std::vector<Point2> out;
  for (int i = 0; i < arc_samples; ++i) {
    double a = 2 * std::numbers::pi * i / arc_samples;
    out.push_back(center + Vec2{radius * std::cos(a), radius * std::sin(a)});
  }
  return out;
}

// ── Validation ──────────────────────────────────────────────────────

ValidationReport validate_outer(const OuterPattern& p) {
  ValidationReport rep;
  auto flag = [&rep](std::string code, std::string detail) {
    rep.violations.push_back({std::move(code), std::move(detail)});
  };
  for (int i = 0; i < p.point_count(); ++i) {
    if (p.points[i] < 0.0 || p.points[i] >= 1.0)
      flag("point-off-boundary", "point " + std::to_string(i) + " parameter outside [0,1)");
  }
  if (!rep.ok()) return rep;
  for (int i = 0; i < p.point_count(); ++i)
    for (int j = i + 1; j < p.point_count(); ++j)
      if (close(p.point_pos(i), p.point_pos(j)))
        flag("duplicate-points", "points " + std::to_string(i) + " and " + std::to_string(j));

  std::vector<bool> used(p.point_count(), false);
  for (const auto& [a, b] : p.chords) {
    if (a < 0 || b < 0 || a >= p.point_count() || b >= p.point_count()) {
      flag("bad-reference", "chord endpoint out of range");
      return rep;
    }
    if (a == b) flag("degenerate-chord", "chord with equal endpoints");
    used[a] = used[b] = true;
  }
  for (int i = 0; i < p.point_count(); ++i)
    if (!used[i]) flag("isolated-point", "point " + std::to_string(i) + " has no crease");

  // A chord between two points of the same polygon side runs along the
  // boundary instead of through the interior.
  if (p.region.kind == OuterRegion::Kind::Polygon) {
    for (std::size_t c = 0; c < p.chords.size(); ++c) {
      auto [a, b] = p.chords[c];
      int sa = p.region.side_of(p.points[a]);
      int sb = p.region.side_of(p.points[b]);
      // A point exactly at a corner belongs to both adjacent sides; a
      // chord is degenerate only when it stays on one side line.
      Point2 pa = p.point_pos(a), pb = p.point_pos(b);
      if (sa == sb) {
        flag("boundary-chord", "chord " + std::to_string(c) + " lies along a side");
      } else {
        Point2 mid = (pa + pb) * 0.5;
        bool interior = point_in_convex(p.region.poly, mid, kLenEps);
        if (!interior)
          flag("boundary-chord", "chord " + std::to_string(c) + " does not cross the interior");
      }
    }
  }

  // Chords must not cross inside, may not pass through other points, and
  // may share endpoints only.
  for (std::size_t c1 = 0; c1 < p.chords.size(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < p.chords.size(); ++c2) {
      auto [a, b] = p.chords[c1];
      auto [c, d] = p.chords[c2];
      if (a == c || a == d || b == c || b == d) {
        // Shared endpoint; forbid collinear overlap.
        Point2 pa = p.point_pos(a), pb = p.point_pos(b);
        Point2 pc = p.point_pos(c), pd = p.point_pos(d);
        Vec2 u = pb - pa, v = pd - pc;
        if (std::abs(u.cross(v)) < kLenEps * u.norm() * v.norm()) {
          double overlap = std::min(u.norm(), v.norm());
          Point2 shared = (a == c || a == d) ? pa : pb;
          Point2 oa = close(pa, shared) ? pb : pa;
          Point2 ob = close(pc, shared) ? pd : pc;
          if ((oa - shared).dot(ob - shared) > kLenEps * overlap)
            flag("crossing-chords",
                 "chords " + std::to_string(c1) + " and " + std::to_string(c2) + " overlap");
        }
        continue;
      }
      auto x = segment_intersection(p.point_pos(a), p.point_pos(b), p.point_pos(c),
                                    p.point_pos(d));
      if (x)
        flag("crossing-chords",
             "chords " + std::to_string(c1) + " and " + std::to_string(c2) + " cross");
    }
  }
  for (std::size_t c = 0; c < p.chords.size(); ++c) {
    auto [a, b] = p.chords[c];
    for (int q = 0; q < p.point_count(); ++q) {
      if (q == a || q == b) continue;
      Point2 pa = p.point_pos(a), pb = p.point_pos(b), pq = p.point_pos(q);
      Vec2 d = pb - pa;
      double t = (pq - pa).dot(d) / d.dot(d);
      if (t > 0 && t < 1 && dist(pa + d * t, pq) < kLenEps)
        flag("chord-through-point",
             "chord " + std::to_string(c) + " passes through point " + std::to_string(q));
    }
  }
  return rep;
}

// ── Fold map over an outer pattern ──────────────────────────────────

namespace {

int chord_side(const OuterPattern& p, int chord, const Point2& q) {
  Point2 a = p.point_pos(p.chords[chord].first);
  Point2 b = p.point_pos(p.chords[chord].second);
  double s = (b - a).cross(q - a);
  if (s > 0) return 1;
  if (s < 0) return -1;
  return 0;
}

}  // namespace

FoldMap outer_fold_map(const OuterPattern& p, int arc_samples) {
  ValidationReport rep = validate_outer(p);
  if (!rep.ok())
    throw outer_error("outer_fold_map: invalid pattern (" + rep.violations.front().code + ")");

  auto synth = std::make_shared<CreasePattern>();
  for (int i = 0; i < p.point_count(); ++i) synth->vertices.push_back(p.point_pos(i));
  for (const auto& [a, b] : p.chords) synth->segments.push_back({a, b, {}});

  // Sheet polygon through every folding point (and polygon corner), with
  // filler samples between consecutive boundary points so no cap region
  // degenerates.
  std::vector<double> params = p.points;
  if (p.region.kind == OuterRegion::Kind::Polygon) {
    double per = p.region.perimeter(), acc = 0;
    for (std::size_t i = 0; i < p.region.poly.size(); ++i) {
      params.push_back(acc / per);
      acc += dist(p.region.poly[i], p.region.poly[(i + 1) % p.region.poly.size()]);
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               params.end());
  std::vector<Point2> sheet;
  const int np = static_cast<int>(params.size());
  for (int i = 0; i < np; ++i) {
    sheet.push_back(p.region.at(params[i]));
    if (p.region.kind == OuterRegion::Kind::Disk) {
      double next = (i + 1 < np) ? params[i + 1] : params[0] + 1.0;
      double gap = next - params[i];
      int fill = std::max(1, static_cast<int>(std::ceil(gap * arc_samples)));
      for (int k = 1; k < fill + 1; ++k) {
        double t = params[i] + gap * k / (fill + 1);
        sheet.push_back(p.region.at(t));
      }
    }
  }
  if (sheet.empty()) sheet = p.region.boundary_poly(arc_samples);
  struct PendingRegion {
    std::vector<Point2> poly;
    std::vector<int> chords;
  };
  std::vector<std::vector<Point2>> face_polys;
  std::function<void(PendingRegion)> split = [&](PendingRegion r) {
    if (r.chords.empty()) {
      face_polys.push_back(std::move(r.poly));
      return;
    }
    int c = r.chords.front();
    Point2 a = p.point_pos(p.chords[c].first);
    Point2 b = p.point_pos(p.chords[c].second);
    PendingRegion left, right;
    left.poly = clip_halfplane(r.poly, a, b);
    right.poly = clip_halfplane(r.poly, b, a);
    for (std::size_t i = 1; i < r.chords.size(); ++i) {
      int c2 = r.chords[i];
      Point2 mid = (p.point_pos(p.chords[c2].first) + p.point_pos(p.chords[c2].second)) * 0.5;
      ((b - a).cross(mid - a) > 0 ? left : right).chords.push_back(c2);
    }
    split(std::move(left));
    split(std::move(right));
  };
  {
    PendingRegion all;
    all.poly = sheet;
    for (int c = 0; c < p.chord_count(); ++c) all.chords.push_back(c);
    split(std::move(all));
  }

  const int nf = static_cast<int>(face_polys.size());
  // Sign vectors located per face sample; chords with sign 0 never occur
  // for samples strictly inside a face.
  std::vector<std::vector<int>> signs(nf, std::vector<int>(p.chord_count(), 0));
  for (int f = 0; f < nf; ++f) {
    Point2 s{0, 0};
    for (const Point2& q : face_polys[f]) s = s + q;
    s = s * (1.0 / static_cast<double>(face_polys[f].size()));
    for (int c = 0; c < p.chord_count(); ++c) signs[f][c] = chord_side(p, c, s);
  }
  auto face_at = [&](const Point2& q) -> FaceId {
    for (int f = 0; f < nf; ++f) {
      bool ok = true;
      for (int c = 0; c < p.chord_count() && ok; ++c) {
        int s = chord_side(p, c, q);
        if (s != 0 && s != signs[f][c]) ok = false;
      }
      if (ok) return f;
    }
    throw outer_error("outer_fold_map: point location failed");
  };

  FaceComplex fc;
  fc.pattern = synth.get();
  fc.faces.resize(nf);
  for (int f = 0; f < nf; ++f) {
    fc.faces[f].bounded = true;
    fc.faces[f].chain = face_polys[f];
  }
  fc.twin.resize(2 * p.chord_count());
  fc.next.assign(2 * p.chord_count(), 0);
  fc.face_of.assign(2 * p.chord_count(), -1);
  for (int c = 0; c < p.chord_count(); ++c) {
    Point2 a = p.point_pos(p.chords[c].first);
    Point2 b = p.point_pos(p.chords[c].second);
    Vec2 d = b - a;
    Vec2 nrm{-d.y, d.x};
    double eps = 1e-7 * std::max(1.0, d.norm());
    Point2 mid = (a + b) * 0.5;
    FaceId fl = face_at(mid + nrm * (eps / nrm.norm()));
    FaceId fr = face_at(mid - nrm * (eps / nrm.norm()));
    if (fl == fr) throw outer_error("outer_fold_map: chord adjacency failed");
    fc.darts.push_back({c, p.chords[c].first, p.chords[c].second,
                        direction(a, b)});
    fc.darts.push_back({c, p.chords[c].second, p.chords[c].first,
                        direction(b, a)});
    fc.twin[2 * c] = 2 * c + 1;
    fc.twin[2 * c + 1] = 2 * c;
    fc.face_of[2 * c] = fl;
    fc.face_of[2 * c + 1] = fr;
    fc.faces[fl].darts.push_back(2 * c);
    fc.faces[fr].darts.push_back(2 * c + 1);
  }
  return FoldMap::build_unchecked(synth, std::move(fc), 0);
}

// ── Safe creases ────────────────────────────────────────────────────

namespace {

// Boundary waypoints of one side of a chord, walked from u to v. For
// disks the waypoints are the endpoints plus the arc midpoint; polygon
// waypoints include every corner passed.
struct BoundaryWalk {
  std::vector<Point2> pts;       // from u to v (polygon corners included)
  double arc_span = 0.0;         // disk: parameter span of the walk
  bool ccw = false;              // disk: walk direction
};

double param_of(const OuterPattern& p, int point_id) { return p.points[point_id]; }

BoundaryWalk side_walk(const OuterPattern& p, int chord, int side) {
  auto [ua, vb] = p.chords[chord];
  double tu = param_of(p, ua), tv = param_of(p, vb);
  // Side +1 is the region left of u→v: for a counterclockwise boundary
  // this is the arc from v forward (ccw) to u, so the walk from u to v
  // runs clockwise. Side −1 walks counterclockwise from u to v.
  bool walk_ccw = side < 0;
  BoundaryWalk w;
  w.ccw = walk_ccw;
  double span = walk_ccw ? (tv - tu) : (tu - tv);
  span -= std::floor(span);
  w.arc_span = span;
  w.pts.push_back(p.point_pos(ua));
  if (p.region.kind == OuterRegion::Kind::Polygon) {
    int k = p.region.side_count();
    double per = p.region.perimeter();
    std::vector<double> corner_params(k);
    double acc = 0;
    for (int i = 0; i < k; ++i) {
      corner_params[i] = acc / per;
      acc += dist(p.region.poly[i], p.region.poly[(i + 1) % k]);
    }
    // Corners passed along the walk, in walk order.
    std::vector<std::pair<double, int>> hits;
    for (int i = 0; i < k; ++i) {
      double d = walk_ccw ? corner_params[i] - tu : tu - corner_params[i];
      d -= std::floor(d);
      if (d > 1e-12 && d < span - 1e-12) hits.push_back({d, i});
    }
    std::sort(hits.begin(), hits.end());
    for (auto& [d, i] : hits) w.pts.push_back(p.region.poly[i]);
  } else {
    double mid = walk_ccw ? tu + span * 0.5 : tu - span * 0.5;
    w.pts.push_back(p.region.at(mid));
  }
  w.pts.push_back(p.point_pos(vb));
  return w;
}

bool monotone_side(const OuterPattern& p, int chord, int side) {
  auto [ua, vb] = p.chords[chord];
  Point2 u = p.point_pos(ua), v = p.point_pos(vb);
  if (p.region.kind == OuterRegion::Kind::Disk) {
    // On a circle the distance from u grows monotonically until the
    // antipode: the walk is monotone iff it spans at most half the
    // boundary.
    return side_walk(p, chord, side).arc_span <= 0.5 + 1e-12;
  }
  BoundaryWalk w = side_walk(p, chord, side);
  for (std::size_t i = 0; i + 1 < w.pts.size(); ++i) {
    Vec2 e = w.pts[i + 1] - w.pts[i];
    if (e.norm() <= kLenEps) continue;
    // Distance from u must not decrease: nonnegative derivative at the
    // start of each straight piece suffices (distance along a line is
    // unimodal).
    if (e.dot(w.pts[i] - u) < -kLenEps * e.norm()) return false;
    // Distance from v must not increase: nonpositive derivative at the
    // end of each piece.
    if (e.dot(w.pts[i + 1] - v) > kLenEps * e.norm()) return false;
  }
  return true;
}

// Creases crossed by the reflection of side C's boundary across the
// chord; contacts at the chord endpoints do not count.
std::vector<int> reflection_crossing_set(const OuterPattern& p, int chord, int side,
                                         const std::vector<bool>& active) {
  auto [ua, vb] = p.chords[chord];
  Point2 u = p.point_pos(ua), v = p.point_pos(vb);
  auto near_end = [&](const Point2& q) {
    return dist(q, u) < 1e-7 || dist(q, v) < 1e-7;
  };
  std::vector<int> hits;
  if (p.region.kind == OuterRegion::Kind::Disk) {
    Point2 c2 = reflect_across_line(p.region.center, u, v);
    double r = p.region.radius;
    // Angular interval of the reflected arc, identified by the image of
    // the walk midpoint.
    BoundaryWalk w = side_walk(p, chord, side);
    Point2 mid_img = reflect_across_line(w.pts[w.pts.size() / 2], u, v);
    auto on_reflected_arc = [&](const Point2& q) {
      double au = std::atan2(u.y - c2.y, u.x - c2.x);
      double av = std::atan2(v.y - c2.y, v.x - c2.x);
      double am = std::atan2(mid_img.y - c2.y, mid_img.x - c2.x);
      double aq = std::atan2(q.y - c2.y, q.x - c2.x);
      auto norm = [&](double x) {
        double d = x - au;
        while (d < 0) d += 2 * std::numbers::pi;
        while (d >= 2 * std::numbers::pi) d -= 2 * std::numbers::pi;
        return d;
      };
      double span = norm(av), m = norm(am), qq = norm(aq);
      if (m <= span) return qq <= span + 1e-12;
      return qq >= span - 1e-12;
    };
    for (std::size_t c = 0; c < p.chords.size(); ++c) {
      if (static_cast<int>(c) == chord || !active[c]) continue;
      Point2 a = p.point_pos(p.chords[c].first);
      Point2 b = p.point_pos(p.chords[c].second);
      // Segment ∩ circle(c2, r).
      Vec2 d = b - a;
      Vec2 f = a - c2;
      double A = d.dot(d), B = 2 * f.dot(d), C = f.dot(f) - r * r;
      double disc = B * B - 4 * A * C;
      if (disc < 0) continue;
      for (double sgn : {-1.0, 1.0}) {
        double t = (-B + sgn * std::sqrt(disc)) / (2 * A);
        if (t < 1e-9 || t > 1 - 1e-9) continue;
        Point2 x = a + d * t;
        if (near_end(x)) continue;
        if (on_reflected_arc(x)) {
          hits.push_back(static_cast<int>(c));
          break;
        }
      }
    }
    return hits;
  }
  BoundaryWalk w = side_walk(p, chord, side);
  std::vector<Point2> refl;
  for (const Point2& q : w.pts) refl.push_back(reflect_across_line(q, u, v));
  for (std::size_t c = 0; c < p.chords.size(); ++c) {
    if (static_cast<int>(c) == chord || !active[c]) continue;
    Point2 a = p.point_pos(p.chords[c].first);
    Point2 b = p.point_pos(p.chords[c].second);
    for (std::size_t i = 0; i + 1 < refl.size(); ++i) {
      auto x = segment_intersection(refl[i], refl[i + 1], a, b);
      if (x && !near_end(*x)) {
        hits.push_back(static_cast<int>(c));
        break;
      }
    }
  }
  return hits;
}

SafeCreaseReport safe_crease_masked(const OuterPattern& p, int chord,
                                    const std::vector<bool>& active) {
  SafeCreaseReport rep;
  bool any_monotone = false;
  for (int side : {1, -1}) {
    if (!monotone_side(p, chord, side)) continue;
    any_monotone = true;
    if (reflection_crossing_set(p, chord, side, active).empty()) {
      rep.safe = true;
      rep.side = side > 0 ? 0 : 1;
      return rep;
    }
  }
  rep.reason = any_monotone ? "reflection crosses a crease" : "monotonicity fails";
  return rep;
}

}  // namespace

SafeCreaseReport is_safe_crease(const OuterPattern& p, int chord) {
  if (chord < 0 || chord >= p.chord_count())
    throw outer_error("is_safe_crease: chord out of range");
  std::vector<bool> active(p.chord_count(), true);
  return safe_crease_masked(p, chord, active);
}

// ── Disk algorithm ──────────────────────────────────────────────────

namespace {

// Regions of the pattern restricted to an active chord subset, each as a
// signature over the active chords plus its flat representative face.
struct ActiveRegions {
  std::map<std::vector<int>, int> region_of_sig;
  std::vector<std::vector<int>> bounding;  // region -> active chords
  std::vector<std::vector<FaceId>> faces;  // region -> final faces
  std::vector<std::pair<int, int>> chord_regions;  // chord -> two regions
};

ActiveRegions active_regions(const OuterPattern& p, const FoldMap& m,
                             const std::vector<bool>& active) {
  ActiveRegions out;
  const int nf = m.face_count();
  std::vector<std::vector<int>> sig(nf);
  for (int f = 0; f < nf; ++f) {
    // Face sample: centroid of the stored chain.
    const auto& chain = m.complex().faces[f].chain;
    Point2 s{0, 0};
    for (const Point2& q : chain) s = s + q;
    s = s * (1.0 / static_cast<double>(chain.size()));
    for (int c = 0; c < p.chord_count(); ++c)
      if (active[c]) sig[f].push_back(chord_side(p, c, s));
  }
  for (int f = 0; f < nf; ++f) {
    auto it = out.region_of_sig.find(sig[f]);
    int r;
    if (it == out.region_of_sig.end()) {
      r = static_cast<int>(out.faces.size());
      out.region_of_sig[sig[f]] = r;
      out.faces.push_back({});
      out.bounding.push_back({});
    } else {
      r = it->second;
    }
    out.faces[r].push_back(f);
  }
  out.chord_regions.assign(p.chord_count(), {-1, -1});
  std::vector<int> region_of_face(nf);
  for (std::size_t r = 0; r < out.faces.size(); ++r)
    for (FaceId f : out.faces[r]) region_of_face[f] = static_cast<int>(r);
  for (int c = 0; c < p.chord_count(); ++c) {
    if (!active[c]) continue;
    auto [fl, fr] = m.complex().faces_of_crease(c);
    int rl = region_of_face[fl], rr = region_of_face[fr];
    out.chord_regions[c] = {rl, rr};
    out.bounding[rl].push_back(c);
    out.bounding[rr].push_back(c);
  }
  return out;
}

// Flat representative of a region: the final face adjacent to one of its
// bounding active chords (the region's unfolded part). Regions with no
// bounding chord are single final faces.
FaceId region_rep(const ActiveRegions& ar, const FoldMap& m, int r) {
  if (ar.bounding[r].empty()) return ar.faces[r].front();
  int c = *std::min_element(ar.bounding[r].begin(), ar.bounding[r].end());
  auto [fl, fr] = m.complex().faces_of_crease(c);
  for (FaceId f : ar.faces[r])
    if (f == fl || f == fr) return f;
  throw outer_error("disk plan: region representative not found");
}

double subtended(const OuterPattern& p, int chord) {
  double d = p.points[p.chords[chord].first] - p.points[p.chords[chord].second];
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

void disk_plan_rec(const OuterPattern& p, const FoldMap& m, std::vector<bool>& active,
                   FoldPlan& plan) {
  int n_active = static_cast<int>(std::count(active.begin(), active.end(), true));
  if (n_active == 0) return;
  ActiveRegions ar = active_regions(p, m, active);

  // A region bounded by three or more creases yields a safe crease: the
  // one subtending the smallest angle from the center.
  int split_region = -1;
  for (std::size_t r = 0; r < ar.bounding.size(); ++r)
    if (ar.bounding[r].size() >= 3 &&
        (split_region < 0 || ar.bounding[r] < ar.bounding[split_region]))
      split_region = static_cast<int>(r);

  if (split_region >= 0) {
    int best = -1;
    for (int c : ar.bounding[split_region]) {
      if (best < 0 || subtended(p, c) < subtended(p, best) - 1e-12 ||
          (std::abs(subtended(p, c) - subtended(p, best)) <= 1e-12 && c < best))
        best = c;
    }
    SafeCreaseReport safe = safe_crease_masked(p, best, active);
    if (!safe.safe)
      throw outer_error("disk plan: smallest subtending crease is not safe (" + safe.reason +
                        ")");
    // C is the side away from the split region. The safe crease folds
    // together with the creases inside C (their shared base-case pleat
    // orders the pocket against the sheet); the rest follows.
    const auto& chain = m.complex().faces[region_rep(ar, m, split_region)].chain;
    Point2 s{0, 0};
    for (const Point2& q : chain) s = s + q;
    s = s * (1.0 / static_cast<double>(chain.size()));
    int region_side = chord_side(p, best, s);
    int c_sign = -region_side;

    std::vector<bool> c_active(p.chord_count(), false);
    bool c_has_chords = false;
    for (int c = 0; c < p.chord_count(); ++c) {
      if (!active[c] || c == best) continue;
      Point2 mid = (p.point_pos(p.chords[c].first) + p.point_pos(p.chords[c].second)) * 0.5;
      if (chord_side(p, best, mid) == c_sign) {
        c_active[c] = true;
        c_has_chords = true;
        active[c] = false;
      }
    }
    active[best] = false;

    if (c_has_chords) {
      c_active[best] = true;
      disk_plan_rec(p, m, c_active, plan);
    } else {
      // Bare safe crease: a single reflected sub-region.
      auto [fl, fr] = m.complex().faces_of_crease(best);
      const auto& chl = m.complex().faces[fl].chain;
      Point2 sl{0, 0};
      for (const Point2& q : chl) sl = sl + q;
      sl = sl * (1.0 / static_cast<double>(chl.size()));
      FaceId moved = (chord_side(p, best, sl) == c_sign) ? fl : fr;
      ReflectStep rs;
      rs.crease = best;
      rs.moved = moved;
      rs.above = true;
      plan.steps.push_back(FoldStep::make_reflect(rs));
    }
    disk_plan_rec(p, m, active, plan);
    return;
  }

  // Linear base case: the dual of the active regions is a path; pleat it.
  const int nr = static_cast<int>(ar.faces.size());
  if (nr == 1) return;  // lone region, nothing to fold here
  std::vector<std::vector<std::pair<int, int>>> adj(nr);  // region -> (chord, other)
  for (int c = 0; c < p.chord_count(); ++c) {
    if (!active[c]) continue;
    auto [rl, rr] = ar.chord_regions[c];
    adj[rl].push_back({c, rr});
    adj[rr].push_back({c, rl});
  }
  std::vector<int> ends;
  for (int r = 0; r < nr; ++r) {
    if (adj[r].size() == 1) ends.push_back(r);
    if (adj[r].size() > 2) throw outer_error("disk plan: region dual is not a path");
  }
  if (ends.size() != 2) throw outer_error("disk plan: region dual is not a path");
  int start = ends[0];
  if (region_rep(ar, m, ends[1]) < region_rep(ar, m, ends[0])) start = ends[1];

  PleatStep ps;
  ps.anchor = 0;
  int prev = -1, cur = start;
  for (;;) {
    ps.faces.push_back(region_rep(ar, m, cur));
    int nxt = -1, via = -1;
    for (auto& [c, o] : adj[cur]) {
      if (o == prev) continue;
      via = c;
      nxt = o;
      break;
    }
    if (nxt < 0) break;
    ps.creases.push_back(via);
    ps.signs.push_back(ps.creases.size() % 2 == 1 ? FoldSign::Valley : FoldSign::Mountain);
    prev = cur;
    cur = nxt;
  }
  for (CreaseId c : ps.creases) active[c] = false;
  plan.steps.push_back(FoldStep::make_pleat(std::move(ps)));
}

}  // namespace

FoldPlan disk_fold_plan(const OuterPattern& p) {
  if (p.region.kind != OuterRegion::Kind::Disk)
    throw outer_error("disk_fold_plan: pattern is not on a disk");
  ValidationReport rep = validate_outer(p);
  if (!rep.ok())
    throw outer_error("disk_fold_plan: invalid pattern (" + rep.violations.front().code + ")");
  FoldMap m = outer_fold_map(p);
  FoldPlan plan;
  std::vector<bool> active(p.chord_count(), true);
  disk_plan_rec(p, m, active, plan);
  return plan;
}

// ── Outerplanar realization ─────────────────────────────────────────

std::optional<std::vector<int>> outerplanar_order(const SimpleGraph& g) {
  if (g.n <= 0) return std::nullopt;
  if (g.n > 10) throw outer_error("outerplanar_order: brute force limited to 10 vertices");
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::vector<int> pos(g.n);
  auto crossing_free = [&]() {
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    for (std::size_t e1 = 0; e1 < g.edges.size(); ++e1) {
      for (std::size_t e2 = e1 + 1; e2 < g.edges.size(); ++e2) {
        int a = pos[g.edges[e1].first], b = pos[g.edges[e1].second];
        int c = pos[g.edges[e2].first], d = pos[g.edges[e2].second];
        if (a == c || a == d || b == c || b == d) continue;
        auto between = [&](int x, int lo, int hi) {
          // strictly inside the cyclic interval (lo, hi)
          int span = (hi - lo + g.n) % g.n;
          int off = (x - lo + g.n) % g.n;
          return off > 0 && off < span;
        };
        if (between(c, a, b) != between(d, a, b)) return false;
      }
    }
    return true;
  };
  // Fix vertex 0 in place; permute the rest.
  std::sort(order.begin() + 1, order.end());
  do {
    if (crossing_free()) return order;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return std::nullopt;
}

OuterPattern realize_outerplanar_on_disk(const SimpleGraph& g) {
  auto order = outerplanar_order(g);
  if (!order) throw outer_error("realize_outerplanar_on_disk: graph is not outerplanar");
  OuterPattern p;
  p.region = OuterRegion::disk({0, 0}, 1.0);
  std::vector<double> param(g.n);
  for (int i = 0; i < g.n; ++i) param[(*order)[i]] = static_cast<double>(i) / g.n;
  for (int v = 0; v < g.n; ++v) p.points.push_back(param[v]);
  for (auto& e : g.edges) p.chords.push_back(e);
  return p;
}

SimpleGraph outer_graph(const OuterPattern& p) {
  SimpleGraph g;
  g.n = p.point_count();
  g.edges = p.chords;
  return g;
}

bool simple_graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  const int n = a.n;
  std::vector<std::vector<bool>> ma(n, std::vector<bool>(n, false)), mb = ma;
  std::vector<int> da(n, 0), db(n, 0);
  for (auto& e : a.edges) {
    ma[e.first][e.second] = ma[e.second][e.first] = true;
    da[e.first]++;
    da[e.second]++;
  }
  for (auto& e : b.edges) {
    mb[e.first][e.second] = mb[e.second][e.first] = true;
    db[e.first]++;
    db[e.second]++;
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (ma[v][u] != mb[w][map[u]]) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (rec(v + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  return rec(0);
}


// ── Spine and trees on polygons ─────────────────────────────────────

SpineInfo spine(const PlaneTree& t) {
  SpineInfo s;
  const int n = t.node_count();
  if (n <= 2) {
    for (int v = 0; v < n; ++v) s.spine_vertices.push_back(v);
    s.leaf_count = n;
    return s;
  }
  std::vector<bool> in_spine(n, false);
  for (int v = 0; v < n; ++v) in_spine[v] = t.degree(v) >= 2;
  for (int v = 0; v < n; ++v)
    if (in_spine[v]) s.spine_vertices.push_back(v);
  if (s.spine_vertices.size() == 1) {
    s.leaf_count = 1;
    return s;
  }
  for (int v : s.spine_vertices) {
    int d = 0;
    if (t.nodes[v].parent >= 0 && in_spine[t.nodes[v].parent]) d++;
    for (int c : t.nodes[v].children)
      if (in_spine[c]) d++;
    if (d <= 1) s.leaf_count++;
  }
  return s;
}

bool square_tree_realizable(const PlaneTree& t) { return spine(t).leaf_count <= 4; }

namespace {

// Euler-tour bookkeeping of the spine: faces between consecutive spine
// leaves and the forward/backward face of every spine vertex.
struct SpineLayout {
  std::vector<int> leaves;                  // in tour order
  std::vector<std::vector<int>> face_path;  // face j: path from leaf j to leaf j+1
  std::map<int, int> forward_face, backward_face;
  std::map<int, int> sp_parent;
  std::map<int, std::vector<int>> sp_children;
  std::map<int, bool> black;
};

SpineLayout spine_layout(const PlaneTree& t, const std::vector<int>& spine_vertices) {
  SpineLayout L;
  std::set<int> sp(spine_vertices.begin(), spine_vertices.end());
  // Cyclic neighbor order restricted to the spine.
  auto nbrs = [&](int v) {
    std::vector<int> out;
    if (t.nodes[v].parent >= 0 && sp.count(t.nodes[v].parent)) out.push_back(t.nodes[v].parent);
    for (int c : t.nodes[v].children)
      if (sp.count(c)) out.push_back(c);
    return out;
  };
  // Root at the smallest spine leaf.
  int root = -1;
  for (int v : spine_vertices)
    if (nbrs(v).size() <= 1 && (root < 0 || v < root)) root = v;
  // Re-root: DFS from root preserving cyclic order (parent first).
  std::map<int, bool> seen;
  std::function<void(int, int)> reroot = [&](int v, int par) {
    seen[v] = true;
    L.sp_parent[v] = par;
    std::vector<int> nb = nbrs(v);
    // rotate so the parent is first, children follow in cyclic order
    int k = static_cast<int>(nb.size());
    int start = 0;
    for (int i = 0; i < k; ++i)
      if (nb[i] == par) start = i;
    std::vector<int> kids;
    for (int i = 1; i <= k; ++i) {
      int w = nb[(start + i) % k];
      if (w != par) kids.push_back(w);
    }
    if (par < 0 && !nb.empty()) kids = nb;
    L.sp_children[v] = kids;
    for (int w : kids) reroot(w, v);
  };
  reroot(root, -1);

  // Iterative Euler tour collecting the visit sequence.
  std::vector<int> tour;
  std::function<void(int)> walk = [&](int v) {
    tour.push_back(v);
    for (int w : L.sp_children[v]) {
      walk(w);
      tour.push_back(v);
    }
  };
  walk(root);
  // Split at leaf visits (the root bounds the tour on both ends).
  std::vector<int> leaf_pos;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    int v = tour[i];
    bool is_leaf = L.sp_children[v].empty() || (v == root && i == 0) ||
                   (v == root && i + 1 == tour.size());
    if (L.sp_children[v].empty() || ((i == 0 || i + 1 == tour.size()) && v == root))
      if (is_leaf) leaf_pos.push_back(static_cast<int>(i));
  }
  for (std::size_t j = 0; j + 1 < leaf_pos.size(); ++j) {
    L.leaves.push_back(tour[leaf_pos[j]]);
    std::vector<int> path(tour.begin() + leaf_pos[j], tour.begin() + leaf_pos[j + 1] + 1);
    L.face_path.push_back(path);
  }
  // Wrap-around face: from the last leaf back to the root.
  if (leaf_pos.size() >= 2) {
    // nothing: the last segment already ends at the final tour position
  }

  // Colors by spine depth.
  std::function<void(int, int)> color = [&](int v, int депth) {
    L.black[v] = depth % 2 == 0;
    for (int w : L.sp_children[v]) color(w, depth + 1);
  };
  color(root, 0);

  // Forward face: contains the passage parent -> v -> first child;
  // backward: last child -> v -> parent. Leaves: the faces starting and
  // ending at them.
  const int m = static_cast<int>(L.face_path.size());
  for (int j = 0; j < m; ++j) {
    const auto& path = L.face_path[j];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (i == 0) {
        L.forward_face[path[0]] = j;  // face starting at this leaf
        continue;
      }
      int prev = path[i - 1], v = path[i], nxt = path[i + 1];
      const auto& kids = L.sp_children[v];
      if (prev == L.sp_parent[v] && !kids.empty() && nxt == kids.front())
        L.forward_face[v] = j;
      if (!kids.empty() && prev == kids.back() && nxt == L.sp_parent[v])
        L.backward_face[v] = j;
    }
    L.backward_face[path.back()] = j;  // face ending at this leaf
  }
  // Root: forward = first face, backward = last.
  L.forward_face[root] = 0;
  L.backward_face[root] = m - 1;
  return L;
}

}  // namespace

OuterPattern realize_tree_on_polygon(const PlaneTree& t, const OuterRegion& kgon) {
  if (kgon.kind != OuterRegion::Kind::Polygon)
    throw outer_error("realize_tree_on_polygon: region must be a polygon");
  const int k = kgon.side_count();
  const int n = t.node_count();
  if (n < 2) throw outer_error("realize_tree_on_polygon: tree needs an edge");
  SpineInfo sp = spine(t);
  if (sp.leaf_count > k)
    throw outer_error("realize_tree_on_polygon: spine has " +
                      std::to_string(sp.leaf_count) + " leaves > " + std::to_string(k));

  const double eta = 1e-3;  // corner clearance, fraction of a side
  double per = kgon.perimeter();
  std::vector<double> corner_param(k);
  std::vector<double> side_len(k);
  {
    double acc = 0;
    for (int i = 0; i < k; ++i) {
      corner_param[i] = acc / per;
      side_len[i] = dist(kgon.poly[i], kgon.poly[(i + 1) % k]);
      acc += side_len[i];
    }
  }
  auto side_params = [&](int side, int count) {
    std::vector<double> out;
    double t0 = corner_param[side];
    double span = side_len[side] / per;
    for (int i = 0; i < count; ++i)
      out.push_back(t0 + span * (eta + (1 - 2 * eta) * (i + 1.0) / (count + 1.0)));
    return out;
  };

  OuterPattern p;
  p.region = kgon;
  std::map<int, int> node_point;
  auto add_point = [&](double param) {
    p.points.push_back(param);
    return static_cast<int>(p.points.size()) - 1;
  };

  auto leaf_neighbors = [&](int v) {
    std::vector<int> out;
    if (t.nodes[v].parent >= 0 && t.degree(t.nodes[v].parent) <= 1)
      out.push_back(t.nodes[v].parent);
    for (int c : t.nodes[v].children)
      if (t.degree(c) <= 1) out.push_back(c);
    return out;
  };

  if (n == 2) {
    node_point[0] = add_point(side_params(0, 1)[0]);
    node_point[1] = add_point(side_params(1, 1)[0]);
    p.chords.push_back({node_point[0], node_point[1]});
    return p;
  }

  if (sp.spine_vertices.size() == 1) {
    int z = sp.spine_vertices[0];
    node_point[z] = add_point(side_params(0, 1)[0]);
    auto leaves = leaf_neighbors(z);
    int q = static_cast<int>(leaves.size());
    // Distribute the fan over the other sides.
    std::vector<int> counts(k, 0);
    for (int i = 0; i < q; ++i) counts[1 + i % (k - 1)]++;
    int idx = 0;
    for (int s = 1; s < k; ++s) {
      for (double tt : side_params(s, counts[s])) {
        int w = leaves[idx++];
        node_point[w] = add_point(tt);
        p.chords.push_back({node_point[z], node_point[w]});
      }
    }
    return p;
  }

  SpineLayout L = spine_layout(t, sp.spine_vertices);
  const int m = static_cast<int>(L.leaves.size());
  if (m > k) throw outer_error("realize_tree_on_polygon: spine leaf order exceeded sides");

  // Chosen side per spine vertex: black interior -> forward face, white
  // interior -> backward; leaves adjusted so no spine edge lands on one
  // side (root forward; black last-child leaf backward; white
  // first-child leaf forward).
  std::set<int> leafset(L.leaves.begin(), L.leaves.end());
  std::map<int, int> chosen, visible;
  for (int v : sp.spine_vertices) {
    bool is_leaf = L.sp_children.at(v).empty() || L.sp_parent.at(v) < 0;
    bool fwd;
    if (L.sp_parent.at(v) < 0) {
      fwd = true;
    } else if (L.sp_children.at(v).empty()) {
      int par = L.sp_parent.at(v);
      const auto& kids = L.sp_children.at(par);
      bool last_child = !kids.empty() && kids.back() == v;
      bool first_child = !kids.empty() && kids.front() == v;
      if (L.black.at(v))
        fwd = !last_child;
      else
        fwd = first_child;
    } else {
      fwd = L.black.at(v);
    }
    (void)is_leaf;
    chosen[v] = fwd ? L.forward_face.at(v) : L.backward_face.at(v);
    visible[v] = fwd ? L.backward_face.at(v) : L.forward_face.at(v);
  }

  // Emit boundary points per face (label of face j is side j), walking
  // each face path in order.
  struct Slot {
    int node;       // spine vertex, or the leaf node for fan slots
    bool fan;       // true: a tree-leaf landing point
    int owner;      // fan owner
  };
  std::vector<std::vector<Slot>> per_side(k);
  for (int j = 0; j < m; ++j) {
    const auto& path = L.face_path[j];
    for (std::size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      // Endpoint leaves appear in two faces; emit in the face they chose.
      if (chosen.at(v) == j) {
        bool already = false;
        for (const Slot& s : per_side[j])
          if (!s.fan && s.node == v) already = true;
        if (!already) per_side[j].push_back({v, false, v});
      }
      if (visible.at(v) == j) {
        bool already = false;
        for (const Slot& s : per_side[j])
          if (s.fan && s.owner == v) already = true;
        if (!already)
          for (int w : leaf_neighbors(v)) per_side[j].push_back({w, true, v});
      }
    }
  }

  for (int s = 0; s < k; ++s) {
    auto params = side_params(s, static_cast<int>(per_side[s].size()));
    for (std::size_t i = 0; i < per_side[s].size(); ++i)
      node_point[per_side[s][i].node] = add_point(params[i]);
  }

  // Chords: spine edges and leaf edges.
  for (int v : sp.spine_vertices) {
    int par = L.sp_parent.at(v);
    if (par >= 0) p.chords.push_back({node_point.at(v), node_point.at(par)});
    for (int w : leaf_neighbors(v)) p.chords.push_back({node_point.at(v), node_point.at(w)});
  }
  return p;
}

// ── Square algorithm ────────────────────────────────────────────────

namespace {

struct SquareFrame {
  // Role of each polygon side: 0 bottom, 1 right, 2 top, 3 left (after
  // the normalization rotation).
  std::vector<int> role_of_side;
  bool rotated = false;

  int role(const OuterPattern& p, int point_id) const {
    return role_of_side[p.region.side_of(p.points[point_id])];
  }
};

ChordType classify(int ra, int rb) {
  auto has = [&](int r) { return ra == r || rb == r; };
  bool l = has(3), r = has(1), t = has(2), b = has(0);
  if (l && t) return ChordType::LT;
  if (r && t) return ChordType::RT;
  if (l && b) return ChordType::LB;
  if (r && b) return ChordType::RB;
  if (l && r) return ChordType::LR;
  return ChordType::TB;
}

// Height of a point toward the top role side (signed distance from the
// bottom side line, normalized).
double role_height(const OuterPattern& p, const SquareFrame& fr, int point_id) {
  int bottom_side = -1;
  for (int s = 0; s < 4; ++s)
    if (fr.role_of_side[s] == 0) bottom_side = s;
  Point2 a = p.region.poly[bottom_side];
  Point2 b = p.region.poly[(bottom_side + 1) % 4];
  Vec2 d = b - a;
  return d.cross(p.point_pos(point_id) - a) / d.norm();
}

// Outermost chord of a corner group: endpoints farthest from the corner
// along the boundary (the groups are nested).
int outermost_chord(const OuterPattern& p, const SquareFrame& fr,
                    const std::vector<int>& group, ChordType type) {
  (void)fr;
  (void)type;
  int best = -1;
  double best_span = -1;
  for (int c : group) {
    double d = p.points[p.chords[c].first] - p.points[p.chords[c].second];
    d -= std::floor(d);
    double span = std::min(d, 1.0 - d);
    if (span > best_span) {
      best_span = span;
      best = c;
    }
  }
  return best;
}

}  // namespace

SquarePlan square_fold_plan(const OuterPattern& p) {
  if (!p.region.is_square()) throw outer_error("square_fold_plan: region is not a square");
  ValidationReport vrep = validate_outer(p);
  if (!vrep.ok())
    throw outer_error("square_fold_plan: invalid pattern (" + vrep.violations.front().code +
                      ")");

  SquarePlan out;
  SquareFrame fr;
  fr.role_of_side.assign(4, 0);
  // Geometric roles from outward normals.
  Point2 centroid{0, 0};
  for (const Point2& q : p.region.poly) centroid = centroid + q;
  centroid = centroid * 0.25;
  for (int s = 0; s < 4; ++s) {
    Point2 a = p.region.poly[s], b = p.region.poly[(s + 1) % 4];
    Point2 mid = (a + b) * 0.5;
    Vec2 d = mid - centroid;
    if (std::abs(d.x) > std::abs(d.y))
      fr.role_of_side[s] = d.x > 0 ? 1 : 3;
    else
      fr.role_of_side[s] = d.y > 0 ? 2 : 0;
  }

  auto classify_all = [&]() {
    std::vector<ChordType> types;
    for (int c = 0; c < p.chord_count(); ++c)
      types.push_back(classify(fr.role(p, p.chords[c].first), fr.role(p, p.chords[c].second)));
    return types;
  };
  out.types = classify_all();
  bool has_tb = false, has_lr = false;
  for (ChordType t : out.types) {
    if (t == ChordType::TB) has_tb = true;
    if (t == ChordType::LR) has_lr = true;
  }
  if (has_tb && has_lr)
    throw outer_error("square_fold_plan: top-bottom and left-right creases both present");
  if (has_tb) {
    // Rotate roles a quarter turn so the creases become left-right.
    for (int s = 0; s < 4; ++s) fr.role_of_side[s] = (fr.role_of_side[s] + 1) % 4;
    fr.rotated = true;
    out.rotated = true;
    out.types = classify_all();
  }

  FoldMap m = outer_fold_map(p);
  std::vector<bool> active(p.chord_count(), true);
  FoldPlan plan;

  auto group_of = [&](ChordType t) {
    std::vector<int> g;
    for (int c = 0; c < p.chord_count(); ++c)
      if (active[c] && out.types[c] == t) g.push_back(c);
    return g;
  };

  // Corner pleat regions from the host inward; reps via crease adjacency.
  auto corner_chain = [&](std::vector<int> group, ChordType type) {
    // order outer -> inner by span
    std::sort(group.begin(), group.end(), [&](int a, int b) {
      auto span = [&](int c) {
        double d = p.points[p.chords[c].first] - p.points[p.chords[c].second];
        d -= std::floor(d);
        return std::min(d, 1.0 - d);
      };
      return span(a) > span(b);
    });
    (void)type;
    return group;
  };
  // Face adjacent to chord c on the corner side (away from the centroid).
  auto corner_side_face = [&](int c) {
    auto [fl, frr] = m.complex().faces_of_crease(c);
    Point2 a = p.point_pos(p.chords[c].first);
    Point2 b = p.point_pos(p.chords[c].second);
    int centroid_side = (b - a).cross(centroid - a) > 0 ? 1 : -1;
    const auto& chain = m.complex().faces[fl].chain;
    Point2 s{0, 0};
    for (const Point2& q : chain) s = s + q;
    s = s * (1.0 / static_cast<double>(chain.size()));
    int fl_side = (b - a).cross(s - a) > 0 ? 1 : -1;
    return fl_side == centroid_side ? frr : fl;
  };
  auto host_face = [&](int c) {
    auto [fl, frr] = m.complex().faces_of_crease(c);
    return corner_side_face(c) == fl ? frr : fl;
  };

  // Emit a pleat folding a whole corner group onto its host; above=true
  // stacks it on top of the host in sheet frame.
  auto emit_corner_pleat = [&](const std::vector<int>& chain, bool above) {
    PleatStep ps;
    std::vector<FaceId> faces;
    faces.push_back(host_face(chain.front()));
    for (int c : chain) faces.push_back(corner_side_face(c));
    if (!above) {
      std::reverse(faces.begin(), faces.end());
      ps.anchor = static_cast<int>(faces.size()) - 1;
      std::vector<int> rev(chain.rbegin(), chain.rend());
      ps.creases = rev;
    } else {
      ps.anchor = 0;
      ps.creases = chain;
    }
    ps.faces = faces;
    for (std::size_t i = 0; i < ps.creases.size(); ++i)
      ps.signs.push_back((above == (i % 2 == 0)) ? FoldSign::Valley : FoldSign::Mountain);
    plan.steps.push_back(FoldStep::make_pleat(std::move(ps)));
    for (int c : chain) active[c] = false;
  };

  // Resolve corner conflicts: pleat safe corners first, otherwise mark
  // the semi-safe crease of the pair.
  struct SemiSafe {
    ChordType corner;
    int outermost = -1;
    std::vector<int> chain;
    bool is_top = false;
  };
  std::vector<SemiSafe> semis;
  for (bool top : {true, false}) {
    for (;;) {
      ChordType ca = top ? ChordType::LT : ChordType::LB;
      ChordType cb = top ? ChordType::RT : ChordType::RB;
      auto ga = group_of(ca), gb = group_of(cb);
      if (ga.empty() || gb.empty()) break;
      int oa = outermost_chord(p, fr, ga, ca);
      int ob = outermost_chord(p, fr, gb, cb);
      SafeCreaseReport sa = safe_crease_masked(p, oa, active);
      SafeCreaseReport sb = safe_crease_masked(p, ob, active);
      if (sa.safe) {
        emit_corner_pleat(corner_chain(ga, ca), true);
        continue;
      }
      if (sb.safe) {
        emit_corner_pleat(corner_chain(gb, cb), true);
        continue;
      }
      // Neither outermost safe: identify the semi-safe corner. On top the
      // semi-safe crease is the one whose side endpoint sits higher; on
      // the bottom, lower.
      auto side_endpoint_height = [&](int c) {
        auto [x, y] = p.chords[c];
        int rx = fr.role(p, x);
        int pt = (rx == 1 || rx == 3) ? x : y;  // endpoint on a vertical side
        return role_height(p, fr, pt);
      };
      double ha = side_endpoint_height(oa), hb = side_endpoint_height(ob);
      bool pick_b = top ? (hb >= ha) : (hb <= ha);
      SemiSafe ss;
      ss.corner = pick_b ? cb : ca;
      ss.outermost = pick_b ? ob : oa;
      ss.chain = corner_chain(pick_b ? gb : ga, ss.corner);
      ss.is_top = top;
      semis.push_back(ss);
      for (int c : ss.chain) active[c] = false;  // removed from the main sequence
      break;
    }
  }
  for (const SemiSafe& ss : semis) out.semi_safe_chords.push_back(ss.outermost);

  // Main linear sequence over the remaining creases.
  std::vector<int> main_walk_creases;
  std::vector<FaceId> main_walk_faces;
  {
    ActiveRegions ar = active_regions(p, m, active);
    const int nr = static_cast<int>(ar.faces.size());
    if (nr > 1) {
      std::vector<std::vector<std::pair<int, int>>> adj(nr);
      for (int c = 0; c < p.chord_count(); ++c) {
        if (!active[c]) continue;
        auto [rl, rr] = ar.chord_regions[c];
        adj[rl].push_back({c, rr});
        adj[rr].push_back({c, rl});
      }
      std::vector<int> ends;
      for (int r = 0; r < nr; ++r) {
        if (adj[r].size() == 1) ends.push_back(r);
        if (adj[r].size() > 2)
          throw outer_error("square_fold_plan: remaining creases are not a linear sequence");
      }
      if (ends.size() != 2)
        throw outer_error("square_fold_plan: remaining creases are not a linear sequence");
      int start = ends[0];
      if (region_rep(ar, m, ends[1]) < region_rep(ar, m, ends[0])) start = ends[1];
      int prev = -1, cur = start;
      for (;;) {
        main_walk_faces.push_back(region_rep(ar, m, cur));
        int nxt = -1, via = -1;
        for (auto& [c, o] : adj[cur]) {
          if (o == prev) continue;
          via = c;
          nxt = o;
          break;
        }
        if (nxt < 0) break;
        main_walk_creases.push_back(via);
        prev = cur;
        cur = nxt;
      }
    } else {
      // Single region: the semi-safe corners (if any) share one host.
      main_walk_faces.push_back(region_rep(ar, m, 0));
    }
  }

  // Place each semi-safe corner on the side of its host that avoids the
  // interfered hinge; fold the locally-confined corner first.
  auto interference = [&](const SemiSafe& ss) {
    std::vector<bool> mask = active;
    // The corner's own creases are folded with it but still present in
    // the sheet; interference targets the remaining (main) creases only.
    Point2 a = p.point_pos(p.chords[ss.outermost].first);
    Point2 b = p.point_pos(p.chords[ss.outermost].second);
    int corner_sgn = (b - a).cross(centroid - a) > 0 ? -1 : 1;
    int side = corner_sgn > 0 ? 0 : 1;
    return reflection_crossing_set(p, ss.outermost, side == 0 ? 1 : -1, mask);
  };
  auto is_confined = [&](const SemiSafe& ss, const std::vector<int>& hits) {
    ChordType other = ss.is_top ? (ss.corner == ChordType::LT ? ChordType::RT : ChordType::LT)
                                : (ss.corner == ChordType::LB ? ChordType::RB : ChordType::LB);
    for (int c : hits)
      if (out.types[c] != other) return false;
    return true;
  };
  std::vector<std::pair<int, SemiSafe>> ordered;  // (confined? 0 : 1, ss)
  for (const SemiSafe& ss : semis) {
    auto hits = interference(ss);
    ordered.push_back({is_confined(ss, hits) ? 0 : 1, ss});
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  for (auto& [conf, ss] : ordered) {
    auto hits = interference(ss);
    std::set<int> hitset(hits.begin(), hits.end());
    FaceId host = host_face(ss.outermost);
    int pos = -1;
    for (std::size_t i = 0; i < main_walk_faces.size(); ++i)
      if (main_walk_faces[i] == host) pos = static_cast<int>(i);
    if (pos < 0) throw outer_error("square_fold_plan: semi-safe host not in main sequence");
    int hinge_above = pos < static_cast<int>(main_walk_creases.size())
                          ? main_walk_creases[pos]
                          : -1;
    int hinge_below = pos > 0 ? main_walk_creases[pos - 1] : -1;
    bool above_final;
    if (hinge_above >= 0 && hitset.count(hinge_above))
      above_final = false;
    else if (hinge_below >= 0 && hitset.count(hinge_below))
      above_final = true;
    else
      above_final = true;
    if (hinge_above >= 0 && hinge_below >= 0 && hitset.count(hinge_above) &&
        hitset.count(hinge_below))
      throw outer_error("square_fold_plan: semi-safe corner interferes on both sides");
    bool above_local = above_final == (pos % 2 == 0);
    emit_corner_pleat(ss.chain, above_local);
  }

  if (main_walk_creases.size() > 0) {
    PleatStep ps;
    ps.faces = main_walk_faces;
    ps.creases = main_walk_creases;
    ps.anchor = 0;
    for (std::size_t i = 0; i < ps.creases.size(); ++i)
      ps.signs.push_back(i % 2 == 0 ? FoldSign::Valley : FoldSign::Mountain);
    plan.steps.push_back(FoldStep::make_pleat(std::move(ps)));
  }

  out.plan = std::move(plan);
  return out;
}


}  // namespace flatfold
