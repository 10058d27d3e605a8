#include "flatfold/convex.hpp"

#include <algorithm>
#include <cmath>

namespace flatfold {

double polygon_area2(const std::vector<Point2>& poly) {
  double a = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    a += poly[i].cross(poly[(i + 1) % poly.size()]);
  return a;
}

bool point_in_convex(const std::vector<Point2>& poly, const Point2& p, double margin) {
  if (poly.size() < 3) return false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Vec2 e = poly[(i + 1) % poly.size()] - poly[i];
    double len = e.norm();
    if (len <= kLenEps) continue;
    if (e.cross(p - poly[i]) <= margin * len) return false;
  }
  return true;
}

std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const Point2& a,
                                   const Point2& b) {
  Vec2 d = b - a;
  std::vector<Point2> out;
  std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % n];
    double sc = d.cross(cur - a);
    double sn = d.cross(nxt - a);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0))
      out.push_back(cur + (nxt - cur) * (sc / (sc - sn)));
  }
  return out;
}

std::vector<Point2> convex_intersection(std::vector<Point2> a, const std::vector<Point2>& b) {
  for (std::size_t i = 0; i < b.size() && !a.empty(); ++i)
    a = clip_halfplane(a, b[i], b[(i + 1) % b.size()]);
  return a;
}

std::optional<Point2> segment_intersection(const Point2& a, const Point2& b, const Point2& c,
                                           const Point2& d, double eps) {
  Vec2 u = b - a, v = d - c, w = c - a;
  double denom = u.cross(v);
  double ulen = u.norm(), vlen = v.norm();
  if (std::abs(denom) <= 1e-12 * ulen * vlen) return std::nullopt;
  double t = w.cross(v) / denom;
  double s = w.cross(u) / denom;
  double te = eps / std::max(ulen, kLenEps);
  double se = eps / std::max(vlen, kLenEps);
  if (t < -te || t > 1 + te || s < -se || s > 1 + se) return std::nullopt;
  return a + u * t;
}

double segment_length_inside(const std::vector<Point2>& poly, const Point2& a, const Point2& b) {
  if (poly.size() < 3) return 0.0;
  double t0 = 0.0, t1 = 1.0;
  Vec2 d = b - a;
  // Inset the polygon slightly so boundary-riding segments count as outside.
  const double margin = 1e-9;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Vec2 e = poly[(i + 1) % poly.size()] - poly[i];
    double len = e.norm();
    if (len <= kLenEps) continue;
    double fa = e.cross(a - poly[i]) / len - margin;
    double fb = e.cross(b - poly[i]) / len - margin;
    if (fa < 0 && fb < 0) return 0.0;
    if (fa < 0 || fb < 0) {
      double t = fa / (fa - fb);
      if (fa < 0)
        t0 = std::max(t0, t);
      else
        t1 = std::min(t1, t);
      if (t0 >= t1) return 0.0;
    }
  }
  return (t1 - t0) * d.norm();
}

}  // namespace flatfold
