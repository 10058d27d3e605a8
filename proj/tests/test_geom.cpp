#include <random>
#include <set>

#include "doctest.h"
#include "flatfold/geom.hpp"

using namespace flatfold;

TEST_CASE("fraction arithmetic reduces") {
  Fraction a(2, 4);
  CHECK(a.num == 1);
  CHECK(a.den == 2);
  CHECK((Fraction(1, 3) + Fraction(1, 6)) == Fraction(1, 2));
  CHECK((Fraction(1, 2) - Fraction(1, 2)) == Fraction(0));
  CHECK((Fraction(3, 14) * Fraction(7, 3)) == Fraction(1, 2));
  CHECK(Fraction(-3, -6) == Fraction(1, 2));
  CHECK(Fraction(7, 5).mod1() == Fraction(2, 5));
  CHECK(Fraction(-1, 4).mod1() == Fraction(3, 4));
}

TEST_CASE("turn angles wrap and stay exact") {
  TurnAngle a = TurnAngle::turns(3, 4);
  TurnAngle b = TurnAngle::turns(1, 2);
  TurnAngle c = a + b;
  CHECK(c.exact());
  CHECK(c.turn_fraction() == Fraction(1, 4));
  CHECK((a - a).is_zero());
  CHECK(a.antipode().turn_fraction() == Fraction(1, 4));
  TurnAngle r = TurnAngle::radians(-0.5);
  CHECK(r.rad() == doctest::Approx(2 * std::numbers::pi - 0.5));
}

TEST_CASE("reflect_across_line examples") {
  Point2 r1 = reflect_across_line({1, 0}, {0, -1}, {0, 1});  // across x=0
  CHECK(r1.x == doctest::Approx(-1.0));
  CHECK(r1.y == doctest::Approx(0.0));
  Point2 r2 = reflect_across_line({0.3, 0}, {-1, 0}, {1, 0});  // point on line
  CHECK(r2.x == doctest::Approx(0.3));
  CHECK(r2.y == doctest::Approx(0.0).epsilon(1e-12));
  Point2 r3 = reflect_across_line({2, 0}, {0, 0}, {1, 1});  // across y=x
  CHECK(r3.x == doctest::Approx(0.0));
  CHECK(r3.y == doctest::Approx(2.0));
  CHECK_THROWS_AS(reflect_across_line({1, 1}, {0, 0}, {0, 0}), geometry_error);
}

TEST_CASE("reflection is an involution on random points") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    Point2 p{u(rng), u(rng)};
    Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    if (dist(a, b) < 1e-3) continue;
    Point2 q = reflect_across_line(reflect_across_line(p, a, b), a, b);
    CHECK(dist(p, q) < kLenEps);
  }
}

TEST_CASE("isometry composition laws") {
  Isometry2 rx = Isometry2::reflection({0, 0}, TurnAngle::turns(1, 4));  // x = 0
  Isometry2 ry = Isometry2::reflection({0, 0}, TurnAngle::turns(0, 4));  // y = 0
  CHECK(rx.compose(rx).approx_identity());
  CHECK(rx.compose(rx).exact_rotation_identity());

  Isometry2 half = rx.compose(ry);
  CHECK(!half.reversing);
  CHECK(half.rot.turn_fraction() == Fraction(1, 2));
  Point2 p{1.5, -2.0};
  Point2 img = half(p);
  CHECK(img.x == doctest::Approx(-1.5));
  CHECK(img.y == doctest::Approx(2.0));

  Isometry2 t = Isometry2::translation({3, -1});
  Isometry2 idt = Isometry2::identity().compose(t);
  CHECK(idt.t.x == doctest::Approx(3.0));
  CHECK(idt.t.y == doctest::Approx(-1.0));
  CHECK(!idt.reversing);
}

TEST_CASE("isometries preserve distances") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-4, 4);
  Isometry2 m = Isometry2::reflection({0.3, 0.7}, TurnAngle::radians(0.37))
                    .compose(Isometry2::rotation({1, 2}, TurnAngle::radians(1.1)))
                    .compose(Isometry2::translation({0.5, -0.25}));
  for (int i = 0; i < 1000; ++i) {
    Point2 p{u(rng), u(rng)}, q{u(rng), u(rng)};
    CHECK(std::abs(dist(m(p), m(q)) - dist(p, q)) < kLenEps);
  }
}

TEST_CASE("isometry inverse") {
  Isometry2 m = Isometry2::reflection({0.2, -0.4}, TurnAngle::radians(0.9))
                    .compose(Isometry2::translation({1, 2}));
  Isometry2 i = m.inverse().compose(m);
  CHECK(i.approx_identity());
  Isometry2 r = Isometry2::rotation({2, 1}, TurnAngle::turns(1, 3));
  CHECK(r.inverse().compose(r).approx_identity());
}

TEST_CASE("cyclic gaps") {
  std::vector<TurnAngle> cross;
  for (int k = 0; k < 4; ++k) cross.push_back(TurnAngle::turns(k, 4));
  auto gaps = cyclic_gaps(cross);
  REQUIRE(gaps.size() == 4);
  for (const TurnAngle& g : gaps) CHECK(g.turn_fraction() == Fraction(1, 4));

  // Base star, d = 6: gaps (3,3,2,2,2,2)·π/7, exact.
  Fraction theta(1, 14);
  std::vector<TurnAngle> star;
  Fraction at(0);
  std::vector<int> gseq{3, 3, 2, 2, 2, 2};
  for (int k = 0; k < 6; ++k) {
    star.push_back(TurnAngle::turns(at));
    at = at + Fraction(gseq[k]) * theta;
  }
  auto sgaps = cyclic_gaps(star);
  Fraction total(0);
  for (std::size_t i = 0; i < sgaps.size(); ++i) {
    CHECK(sgaps[i].exact());
    CHECK(sgaps[i].turn_fraction() == Fraction(gseq[i]) * theta);
    total = total + sgaps[i].turn_fraction();
  }
  CHECK(total == Fraction(1));

  auto two = cyclic_gaps({TurnAngle::turns(0, 3), TurnAngle::turns(1, 3)});
  CHECK(two[0].turn_fraction() == Fraction(1, 3));
  CHECK(two[1].turn_fraction() == Fraction(2, 3));

  CHECK_THROWS_AS(cyclic_gaps({TurnAngle::turns(0, 1), TurnAngle::turns(0, 1)}),
                  geometry_error);
}

TEST_CASE("gap sums are exactly one turn on random exact inputs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<TurnAngle> dirs;
    std::set<std::pair<std::int64_t, std::int64_t>> used;
    while (static_cast<int>(dirs.size()) < n) {
      Fraction f(static_cast<std::int64_t>(rng() % 360), 360);
      f = f.mod1();
      if (used.insert({f.num, f.den}).second) dirs.push_back(TurnAngle::turns(f));
    }
    Fraction total(0);
    for (const TurnAngle& g : cyclic_gaps(dirs)) total = total + g.turn_fraction();
    CHECK(total == Fraction(1));
  }
}

TEST_CASE("lune containment") {
  Lune l{{0, 0}, {2, 0}, {1, 1.2}};
  CHECK(lune_contains(l, l.q));
  CHECK(lune_contains(l, {1, 0}));
  double ru = dist(l.u, l.q);
  CHECK(!lune_contains(l, {ru + 1.0, 0}));
}

TEST_CASE("wedge membership") {
  Wedge w{{0, 0}, TurnAngle::turns(0, 8), TurnAngle::turns(1, 4)};
  CHECK(w.contains_dir(TurnAngle::turns(1, 8)));
  CHECK(w.contains_dir(TurnAngle::turns(0, 8)));
  CHECK(!w.contains_dir(TurnAngle::turns(0, 8), true));
  CHECK(!w.contains_dir(TurnAngle::turns(3, 8), true));
  CHECK(w.bisector().turn_fraction() == Fraction(1, 8));
  CHECK(w.contains_point({1, 1}));
  CHECK(!w.contains_point({-1, 0}, true));
}
