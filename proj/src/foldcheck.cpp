#include "flatfold/foldcheck.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace flatfold {

CheckReport maekawa_check(const CreasePattern& p) {
  CheckReport rep;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    int d = p.degree(v);
    if (d % 2 != 0)
      rep.failures.push_back({"maekawa", "vertex " + std::to_string(v) +
                                             " has odd degree " + std::to_string(d)});
  }
  return rep;
}

AlternatingSum kawasaki_sum(const CreasePattern& p, VertexId v) {
  std::vector<TurnAngle> dirs;
  for (CreaseId c : p.creases_at(v)) dirs.push_back(p.direction_at(c, v));
  if (dirs.size() % 2 != 0)
    throw fold_error("kawasaki_sum: odd degree at vertex " + std::to_string(v));
  std::vector<TurnAngle> gaps = cyclic_gaps(std::move(dirs));
  AlternatingSum s;
  s.exact = std::all_of(gaps.begin(), gaps.end(),
                        [](const TurnAngle& g) { return g.exact(); });
  if (s.exact) {
    Fraction total(0);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      Fraction g = gaps[i].turn_fraction();
      total = (i % 2 == 0) ? total + g : total - g;
    }
    s.turns = total;
    s.radians = 2.0 * std::numbers::pi * total.value();
  } else {
    double total = 0.0;
    for (std::size_t i = 0; i < gaps.size(); ++i)
      total += (i % 2 == 0 ? 1.0 : -1.0) * gaps[i].rad();
    s.radians = total;
  }
  return s;
}

CheckReport kawasaki_check(const CreasePattern& p) {
  CheckReport rep;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    AlternatingSum s = kawasaki_sum(p, v);
    if (!s.is_zero()) {
      std::string detail = "vertex " + std::to_string(v) + " alternating gap sum ";
      detail += s.exact ? s.turns.str() + " turn" : std::to_string(s.radians) + " rad";
      rep.failures.push_back({"kawasaki", detail});
    }
  }
  return rep;
}

CheckReport convexity_check(const CreasePattern& p) {
  CheckReport rep;
  const Fraction half(1, 2);
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    std::vector<TurnAngle> dirs;
    for (CreaseId c : p.creases_at(v)) dirs.push_back(p.direction_at(c, v));
    if (dirs.size() < 2) {
      rep.failures.push_back({"convexity", "vertex " + std::to_string(v) +
                                               " has a full-turn wedge"});
      continue;
    }
    for (const TurnAngle& g : cyclic_gaps(std::move(dirs))) {
      bool ok = g.exact() ? g.turn_fraction() < half
                          : g.rad() < std::numbers::pi - kAngEps;
      if (!ok) {
        rep.failures.push_back({"convexity", "vertex " + std::to_string(v) +
                                                 " has a wedge of at least a half turn"});
        break;
      }
    }
  }
  return rep;
}

// ── Fold map ────────────────────────────────────────────────────────

FaceId default_base_face(const FaceComplex& fc) {
  if (!fc.pattern || fc.pattern->rays.empty()) return 0;
  double r = fc.pattern->clip_radius();
  Point2 far_right{r, -1e-6 * r};
  for (FaceId f = 0; f < fc.face_count(); ++f)
    if (!fc.faces[f].bounded && fc.face_contains(f, far_right)) return f;
  return 0;
}

namespace {

// Reflection across the image of crease c under the isometry of face f.
Isometry2 crease_reflection(const CreasePattern& p, CreaseId c, const Isometry2& iso_f) {
  auto [a, b] = p.crease_ends(c);
  Point2 anchor = p.vertices[a];
  TurnAngle d = p.direction_at(c, a);
  (void)b;
  return Isometry2::reflection(iso_f(anchor), iso_f.map_direction(d));
}

void propagate_isometries(const CreasePattern& p, const FaceComplex& fc, FaceId base,
                          std::vector<Isometry2>& iso) {
  iso.assign(fc.face_count(), Isometry2::identity());
  std::vector<bool> seen(fc.face_count(), false);
  seen[base] = true;
  std::deque<FaceId> queue{base};
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop_front();
    for (int d : fc.faces[f].darts) {
      CreaseId c = fc.darts[d].crease;
      FaceId g = fc.face_of[fc.twin[d]];
      if (g == f) continue;
      Isometry2 candidate = crease_reflection(p, c, iso[f]).compose(iso[f]);
      if (!seen[g]) {
        seen[g] = true;
        iso[g] = candidate;
        queue.push_back(g);
      } else {
        Isometry2 diff = iso[g].inverse().compose(candidate);
        bool ok = diff.approx_identity();
        if (ok && diff.rot.exact() && !diff.reversing)
          ok = diff.exact_rotation_identity();
        if (!ok) {
          auto [a, b] = p.crease_ends(c);
          (void)b;
          throw fold_error("not locally flat foldable: cycle fails to close at vertex " +
                           std::to_string(a));
        }
      }
    }
  }
  for (FaceId f = 0; f < fc.face_count(); ++f)
    if (!seen[f]) throw fold_error("fold map: disconnected face complex");
}

}  // namespace

FoldMap FoldMap::build(const CreasePattern& p, std::optional<FaceId> base) {
  CheckReport mk = maekawa_check(p);
  if (!mk.pass()) throw fold_error("fold map requires Maekawa: " + mk.failures[0].detail);
  CheckReport kw = kawasaki_check(p);
  if (!kw.pass()) throw fold_error("fold map requires Kawasaki: " + kw.failures[0].detail);

  FoldMap m;
  m.pat_ = std::make_shared<const CreasePattern>(p);
  m.fc_ = build_faces(*m.pat_);
  m.fc_.pattern = m.pat_.get();
  m.base_ = base.value_or(default_base_face(m.fc_));
  if (m.base_ < 0 || m.base_ >= m.fc_.face_count())
    throw fold_error("fold map: base face out of range");
  propagate_isometries(*m.pat_, m.fc_, m.base_, m.iso_);
  return m;
}

FoldMap FoldMap::build_unchecked(std::shared_ptr<const CreasePattern> p, FaceComplex fc,
                                 FaceId base) {
  FoldMap m;
  m.pat_ = std::move(p);
  m.fc_ = std::move(fc);
  m.fc_.pattern = m.pat_.get();
  m.base_ = base;
  propagate_isometries(*m.pat_, m.fc_, m.base_, m.iso_);
  return m;
}

Point2 FoldMap::evaluate(const Point2& p) const {
  FaceId f = fc_.locate(p, base_);
  return iso_[f](p);
}

std::vector<Point2> FoldMap::image_polygon(FaceId f) const {
  auto poly = fc_.clipped_polygon(f, pat_->clip_radius());
  for (Point2& q : poly) q = iso_[f](q);
  // Keep counterclockwise orientation; a reversing isometry flips it.
  double area2 = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    area2 += a.cross(b);
  }
  if (area2 < 0) std::reverse(poly.begin(), poly.end());
  return poly;
}

std::pair<Point2, Point2> FoldMap::crease_image(CreaseId c) const {
  const CreasePattern& p = *pat_;
  FaceId f = fc_.faces_of_crease(c).first;
  const Isometry2& m = iso_[f];
  if (p.is_ray(c)) {
    const Ray& r = p.ray(c);
    Point2 a = p.vertices[r.apex];
    Point2 b = a + unit(r.dir) * p.clip_radius();
    return {m(a), m(b)};
  }
  const Segment& s = p.segment(c);
  return {m(p.vertices[s.a]), m(p.vertices[s.b])};
}

CheckReport nearby_rigid_check(const FoldMap& m) {
  CheckReport rep;
  const FaceComplex& fc = m.complex();
  for (FaceId f = 0; f < fc.face_count(); ++f) {
    const auto& ids = fc.faces[f].chain_ids;
    const auto& pts = fc.faces[f].chain;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        double before = dist(pts[i], pts[j]);
        double after = dist(m.iso(f)(pts[i]), m.iso(f)(pts[j]));
        if (std::abs(before - after) > kLenEps)
          rep.failures.push_back(
              {"nearby-rigid", "face " + std::to_string(f) + " pair (" +
                                   std::to_string(ids[i]) + "," + std::to_string(ids[j]) +
                                   ") distance not preserved"});
      }
    }
  }
  return rep;
}

}  // namespace flatfold
