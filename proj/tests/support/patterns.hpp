#pragma once

// Shared pattern builders for tests.

#include "flatfold/pattern.hpp"

namespace flatfold::testing {

/// One vertex at the origin with four rays at quarter turns.
inline CreasePattern make_cross() {
  CreasePattern p;
  p.vertices.push_back({0, 0});
  for (int k = 0; k < 4; ++k) p.rays.push_back({0, TurnAngle::turns(k, 4)});
  return p;
}

/// Full-line grid: vertical lines x = 0..nx-1 and horizontal lines
/// y = 0..ny-1, with rays continuing every line past the boundary.
/// All directions exact quarter turns.
inline CreasePattern make_grid(int nx, int ny) {
  CreasePattern p;
  auto id = [nx](int i, int j) { return j * nx + i; };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      p.vertices.push_back({static_cast<double>(i), static_cast<double>(j)});
  const TurnAngle east = TurnAngle::turns(0, 4), north = TurnAngle::turns(1, 4);
  const TurnAngle west = TurnAngle::turns(2, 4), south = TurnAngle::turns(3, 4);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (i + 1 < nx) p.segments.push_back({id(i, j), id(i + 1, j), east});
      if (j + 1 < ny) p.segments.push_back({id(i, j), id(i, j + 1), north});
    }
  for (int j = 0; j < ny; ++j) {
    p.rays.push_back({id(0, j), west});
    p.rays.push_back({id(nx - 1, j), east});
  }
  for (int i = 0; i < nx; ++i) {
    p.rays.push_back({id(i, 0), south});
    p.rays.push_back({id(i, ny - 1), north});
  }
  return p;
}

/// Single vertex with the base-star geometry: two consecutive gaps of
/// 3θ and the rest 2θ, θ = π/(d+1).
inline CreasePattern make_base_star_vertex(int d) {
  CreasePattern p;
  p.vertices.push_back({0, 0});
  Fraction theta(1, 2 * (d + 1));  // θ in turns
  Fraction at(0);
  std::vector<Fraction> gaps;
  gaps.push_back(Fraction(3) * theta);
  gaps.push_back(Fraction(3) * theta);
  for (int k = 2; k < d; ++k) gaps.push_back(Fraction(2) * theta);
  for (int k = 0; k < d; ++k) {
    p.rays.push_back({0, TurnAngle::turns(at)});
    at = at + gaps[k];
  }
  return p;
}

}  // namespace flatfold::testing
