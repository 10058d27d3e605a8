#pragma once

#include <optional>
#include <vector>

#include "flatfold/geom.hpp"

namespace flatfold {

/// Twice the signed area of a polygon (positive when counterclockwise).
double polygon_area2(const std::vector<Point2>& poly);

/// True when p lies at signed distance > margin inside a counterclockwise
/// convex polygon (margin < 0 admits boundary points).
bool point_in_convex(const std::vector<Point2>& poly, const Point2& p, double margin);

/// Clip a convex polygon by the half-plane to the left of the directed
/// line through a toward b.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const Point2& a,
                                   const Point2& b);

/// Intersection of two convex counterclockwise polygons.
std::vector<Point2> convex_intersection(std::vector<Point2> a, const std::vector<Point2>& b);

/// Proper or touching intersection point of segments [a,b] and [c,d];
/// collinear overlaps are not reported.
std::optional<Point2> segment_intersection(const Point2& a, const Point2& b, const Point2& c,
                                           const Point2& d, double eps = kLenEps);

/// Length of the part of segment [a,b] strictly inside a convex polygon.
double segment_length_inside(const std::vector<Point2>& poly, const Point2& a, const Point2& b);

}  // namespace flatfold
