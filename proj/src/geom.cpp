#include "flatfold/geom.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace flatfold {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Fraction::Fraction(std::int64_t n, std::int64_t d) {
  if (d == 0) throw geometry_error("Fraction: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Fraction Fraction::from_i128(__int128 n, __int128 d) {
  if (d == 0) throw geometry_error("Fraction: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi || d > hi)
    throw geometry_error("Fraction: overflow");
  Fraction f;
  f.num = static_cast<std::int64_t>(n);
  f.den = static_cast<std::int64_t>(d);
  return f;
}

Fraction Fraction::operator+(const Fraction& o) const {
  return from_i128(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                   static_cast<__int128>(den) * o.den);
}

Fraction Fraction::operator-(const Fraction& o) const {
  return from_i128(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                   static_cast<__int128>(den) * o.den);
}

Fraction Fraction::operator*(const Fraction& o) const {
  return from_i128(static_cast<__int128>(num) * o.num,
                   static_cast<__int128>(den) * o.den);
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (o.num == 0) throw geometry_error("Fraction: division by zero");
  return from_i128(static_cast<__int128>(num) * o.den,
                   static_cast<__int128>(den) * o.num);
}

bool Fraction::operator<(const Fraction& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

Fraction Fraction::mod1() const {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return Fraction(r, den);
}

Point2 reflect_across_line(const Point2& p, const Point2& a, const Point2& b) {
  Vec2 d = b - a;
  double len2 = d.dot(d);
  if (len2 <= kLenEps * kLenEps)
    throw geometry_error("reflect_across_line: degenerate line");
  Vec2 ap = p - a;
  double s = ap.dot(d) / len2;
  Point2 foot = a + d * s;
  return foot + (foot - p);
}

std::vector<TurnAngle> cyclic_gaps(std::vector<TurnAngle> dirs) {
  if (dirs.size() < 2) throw geometry_error("cyclic_gaps: need two or more directions");
  std::sort(dirs.begin(), dirs.end(),
            [](const TurnAngle& a, const TurnAngle& b) { return a < b; });
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
    if (dirs[i].same_direction(dirs[i + 1]))
      throw geometry_error("cyclic_gaps: duplicate directions");
  }
  std::vector<TurnAngle> gaps;
  gaps.reserve(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    gaps.push_back(dirs[(i + 1) % dirs.size()] - dirs[i]);
  }
  return gaps;
}

}  // namespace flatfold
