#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatfold {

// Tolerances for floating comparisons. Patterns are desk-scale with O(1)
// coordinates, so fixed absolute tolerances are appropriate.
inline constexpr double kLenEps = 1e-9;  // lengths, sheet units
inline constexpr double kAngEps = 1e-9;  // angles, radians

struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ── Exact rationals ─────────────────────────────────────────────────

/// Reduced rational with 64-bit numerator and denominator (den > 0).
/// Intermediate products run through 128-bit arithmetic; overflow after
/// reduction throws rather than wrapping.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n) : num(n), den(1) {}
  Fraction(std::int64_t n, std::int64_t d);

  static Fraction from_i128(__int128 n, __int128 d);

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  Fraction operator-() const { return Fraction(-num, den); }

  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Fraction& o) const { return !(*this == o); }
  bool operator<(const Fraction& o) const;
  bool operator<=(const Fraction& o) const { return *this < o || *this == o; }
  bool operator>(const Fraction& o) const { return o < *this; }
  bool operator>=(const Fraction& o) const { return o <= *this; }

  /// Value reduced modulo 1 into [0, 1).
  Fraction mod1() const;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// ── Angles ──────────────────────────────────────────────────────────

/// Direction or angle, either an exact rational number of full turns or a
/// measured value in radians. Constructions emit exact turn fractions so
/// angle sums can be checked to exact zero; user input falls back to
/// radians compared with kAngEps.
class TurnAngle {
 public:
  TurnAngle() : exact_(true), turns_(0, 1), radians_(0.0) {}

  static TurnAngle turns(Fraction t) {
    TurnAngle a;
    a.exact_ = true;
    a.turns_ = t.mod1();
    a.radians_ = 2.0 * std::numbers::pi * a.turns_.value();
    return a;
  }
  static TurnAngle turns(std::int64_t num, std::int64_t den) {
    return turns(Fraction(num, den));
  }
  static TurnAngle radians(double r) {
    TurnAngle a;
    a.exact_ = false;
    a.radians_ = wrap_radians(r);
    return a;
  }

  bool exact() const { return exact_; }
  /// Exact turn fraction in [0,1); only meaningful when exact().
  Fraction turn_fraction() const { return turns_; }
  /// Radian value in [0, 2π).
  double rad() const { return radians_; }

  TurnAngle operator+(const TurnAngle& o) const {
    if (exact_ && o.exact_) return turns(turns_ + o.turns_);
    return radians(radians_ + o.radians_);
  }
  TurnAngle operator-(const TurnAngle& o) const {
    if (exact_ && o.exact_) return turns(turns_ - o.turns_);
    return radians(radians_ - o.radians_);
  }
  /// Opposite direction (half turn away).
  TurnAngle antipode() const {
    return *this + turns(1, 2);
  }
  /// Scale by a rational factor (exactness preserved).
  TurnAngle scaled(Fraction f) const {
    if (exact_) return turns(turns_ * f);
    return radians(radians_ * f.value());
  }

  bool is_zero() const {
    if (exact_) return turns_.num == 0;
    return radians_ < kAngEps || 2.0 * std::numbers::pi - radians_ < kAngEps;
  }
  bool same_direction(const TurnAngle& o) const {
    if (exact_ && o.exact_) return turns_ == o.turns_;
    return (*this - o).is_zero();
  }

  /// Strict ordering by angular value; exact values compare exactly among
  /// themselves so constructions sort deterministically.
  bool operator<(const TurnAngle& o) const {
    if (exact_ && o.exact_) return turns_ < o.turns_;
    return radians_ < o.radians_;
  }

  double cos() const { return std::cos(radians_); }
  double sin() const { return std::sin(radians_); }

  static double wrap_radians(double r) {
    const double tau = 2.0 * std::numbers::pi;
    double w = std::fmod(r, tau);
    if (w < 0) w += tau;
    if (w >= tau) w -= tau;
    return w;
  }

 private:
  bool exact_;
  Fraction turns_;
  double radians_;
};

// ── Points and vectors ──────────────────────────────────────────────

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

using Point2 = Vec2;

inline Vec2 unit(const TurnAngle& a) { return {a.cos(), a.sin()}; }
inline double dist(const Point2& a, const Point2& b) { return (a - b).norm(); }
inline bool close(const Point2& a, const Point2& b, double eps = kLenEps) {
  return dist(a, b) <= eps;
}

/// Direction of b as seen from a, as an inexact angle.
inline TurnAngle direction(const Point2& a, const Point2& b) {
  return TurnAngle::radians(std::atan2(b.y - a.y, b.x - a.x));
}

// ── Isometries ──────────────────────────────────────────────────────

/// Planar isometry stored as an orientation flag, a rotation angle, and a
/// translation, so orientation parity stays explicit and rotation angles
/// of composed reflections stay exact. An orientation-reversing map acts
/// as p ↦ R(rot)·conj(p) + t with conj(x,y) = (x,−y).
struct Isometry2 {
  bool reversing = false;
  TurnAngle rot;
  Vec2 t;

  static Isometry2 identity() { return {}; }

  /// Reflection across the line through p with direction d.
  static Isometry2 reflection(const Point2& p, const TurnAngle& d) {
    Isometry2 m;
    m.reversing = true;
    m.rot = d + d;
    m.t = p - m.linear(p);
    return m;
  }
  static Isometry2 rotation(const Point2& center, const TurnAngle& a) {
    Isometry2 m;
    m.rot = a;
    m.t = center - m.linear(center);
    return m;
  }
  static Isometry2 translation(const Vec2& v) {
    Isometry2 m;
    m.t = v;
    return m;
  }

  Vec2 linear(const Vec2& v) const {
    Vec2 w = reversing ? Vec2{v.x, -v.y} : v;
    double c = rot.cos(), s = rot.sin();
    return {c * w.x - s * w.y, s * w.x + c * w.y};
  }
  Point2 operator()(const Point2& p) const { return linear(p) + t; }

  /// Image of a direction under the linear part.
  TurnAngle map_direction(const TurnAngle& d) const {
    return reversing ? rot - d : rot + d;
  }

  /// this ∘ other (apply other first).
  Isometry2 compose(const Isometry2& o) const {
    Isometry2 m;
    m.reversing = reversing != o.reversing;
    m.rot = reversing ? rot - o.rot : rot + o.rot;
    m.t = linear(o.t) + t;
    return m;
  }

  Isometry2 inverse() const {
    Isometry2 m;
    m.reversing = reversing;
    if (reversing) {
      m.rot = rot;
    } else {
      m.rot = TurnAngle::turns(0, 1) - rot;
    }
    m.t = -m.linear(t);
    return m;
  }

  bool approx_identity(double ang_eps = kAngEps, double len_eps = kLenEps) const {
    if (reversing) return false;
    double r = rot.rad();
    if (std::min(r, 2.0 * std::numbers::pi - r) > ang_eps) return false;
    return t.norm() <= len_eps;
  }
  /// Exact-rotation identity: orientation preserving, rotation exactly the
  /// zero fraction, translation within len_eps (positions are doubles).
  bool exact_rotation_identity(double len_eps = kLenEps) const {
    if (reversing || !rot.exact()) return false;
    return rot.turn_fraction().num == 0 && t.norm() <= len_eps;
  }
};

// ── Wedges and lunes ────────────────────────────────────────────────

/// Angular sector with apex, start direction and opening, counterclockwise.
struct Wedge {
  Point2 apex;
  TurnAngle start;
  TurnAngle opening;

  TurnAngle bisector() const { return start + opening.scaled(Fraction(1, 2)); }
  TurnAngle end() const { return start + opening; }

  /// Offset of direction d from start, normalized into [0, 1) turns.
  static TurnAngle offset(const TurnAngle& from, const TurnAngle& d) {
    return d - from;
  }
  bool contains_dir(const TurnAngle& d, bool strict = false) const {
    TurnAngle off = d - start;
    if (off.is_zero()) return !strict;
    if (off.exact() && opening.exact()) {
      Fraction o = off.turn_fraction(), w = opening.turn_fraction();
      return strict ? o < w : o <= w;
    }
    double o = off.rad(), w = opening.rad();
    return strict ? o < w - kAngEps : o <= w + kAngEps;
  }
  bool contains_point(const Point2& p, bool strict = false) const {
    if (close(p, apex)) return !strict;
    return contains_dir(direction(apex, p), strict);
  }
};

/// Intersection of two disks centered at u and v whose boundaries pass
/// through q.
struct Lune {
  Point2 u, v, q;
};

inline bool lune_contains(const Lune& l, const Point2& p) {
  return dist(l.u, p) <= dist(l.u, l.q) + kLenEps &&
         dist(l.v, p) <= dist(l.v, l.q) + kLenEps;
}

// ── Free functions ──────────────────────────────────────────────────

/// Mirror image of p across the line through a and b.
Point2 reflect_across_line(const Point2& p, const Point2& a, const Point2& b);

/// Sorted cyclic gaps between pairwise-distinct directions; the gaps sum
/// to one full turn, exactly so when every input is exact.
std::vector<TurnAngle> cyclic_gaps(std::vector<TurnAngle> dirs);

}  // namespace flatfold
