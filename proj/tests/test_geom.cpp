#include "doctest.h"

#include "geocover/errors.hpp"
#include "geocover/geom.hpp"
#include "geocover/rng.hpp"
#include "support.hpp"

using namespace geocover;

namespace {
Point P(Coord x, Coord y, int id = 0) { return Point{x, y, id}; }
}  // namespace

TEST_SUITE("geom") {
  TEST_CASE("orient examples") {
    CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
    CHECK(orient(P(0, 0), P(1, 1), P(2, 2)) == 0);
    CHECK(orient(P(0, 0), P(2, 1), P(1, 3)) == 1);
    CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
  }

  TEST_CASE("orient is antisymmetric and exact at the coordinate limit") {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
      const Point a = P(rng.uniform(-kMaxCoord, kMaxCoord), rng.uniform(-kMaxCoord, kMaxCoord));
      const Point b = P(rng.uniform(-kMaxCoord, kMaxCoord), rng.uniform(-kMaxCoord, kMaxCoord));
      const Point c = P(rng.uniform(-kMaxCoord, kMaxCoord), rng.uniform(-kMaxCoord, kMaxCoord));
      const int s = orient(a, b, c);
      CHECK(orient(b, a, c) == -s);
      CHECK(orient(a, c, b) == -s);
      CHECK(orient(c, b, a) == -s);
      CHECK(orient(b, c, a) == s);
    }
    CHECK(orient(P(-kMaxCoord, -kMaxCoord), P(kMaxCoord, kMaxCoord), P(kMaxCoord - 1, kMaxCoord)) == 1);
    CHECK(orient(P(-kMaxCoord, -kMaxCoord), P(kMaxCoord, kMaxCoord), P(0, 0)) == 0);
  }

  TEST_CASE("segments_cross examples") {
    CHECK(segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
    CHECK_FALSE(segments_cross(P(0, 0), P(1, 0), P(2, 0), P(3, 1)));
    // (1,1) is interior to the first segment but an endpoint of the second.
    CHECK_FALSE(segments_cross(P(0, 0), P(4, 4), P(1, 1), P(5, 0)));
    CHECK(segments_cross(P(0, 0), P(4, 4), P(1, 1), P(5, 0)) ==
          testing_support::rational_segments_cross(P(0, 0), P(4, 4), P(1, 1), P(5, 0)));
  }

  TEST_CASE("segments_cross agrees with the rational oracle on 1e5 quadruples") {
    Rng rng(5);
    int crossings = 0;
    for (int i = 0; i < 100000; ++i) {
      Point q[4];
      for (auto& p : q) p = P(rng.uniform(-6, 6), rng.uniform(-6, 6));
      if (q[0] == q[1] || q[2] == q[3]) continue;
      // Shared endpoints are excluded by the contract.
      if (q[0] == q[2] || q[0] == q[3] || q[1] == q[2] || q[1] == q[3]) continue;
      const bool expect = testing_support::rational_segments_cross(q[0], q[1], q[2], q[3]);
      crossings += expect;
      REQUIRE(segments_cross(q[0], q[1], q[2], q[3]) == expect);
      REQUIRE(segments_cross(q[2], q[3], q[0], q[1]) == expect);
      REQUIRE(segments_cross(q[1], q[0], q[3], q[2]) == expect);
    }
    CHECK(crossings > 1000);
  }

  TEST_CASE("project_compare examples and symmetry") {
    CHECK(project_compare(P(0, 0), P(1, 0), Direction(1, 0)) == std::strong_ordering::less);
    CHECK(project_compare(P(0, 5), P(0, 7), Direction(1, 0)) == std::strong_ordering::equal);
    CHECK(project_compare(P(3, 1), P(1, 4), Direction(2, 1)) == std::strong_ordering::greater);
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
      const Point p = P(rng.uniform(-50, 50), rng.uniform(-50, 50));
      const Point q = P(rng.uniform(-50, 50), rng.uniform(-50, 50));
      Coord dx = rng.uniform(-9, 9), dy = rng.uniform(-9, 9);
      if (dx == 0 && dy == 0) dx = 1;
      const Direction u(dx, dy);
      const auto pq = project_compare(p, q, u);
      CHECK(project_compare(q, p, u) == 0 <=> pq);
      CHECK(project_compare(p, q, -u) == 0 <=> pq);
    }
  }

  TEST_CASE("projection_order breaks ties like a small ccw rotation") {
    const Direction u(1, 0);
    // Equal x: the larger y comes later, since rotating u ccw gives it a
    // positive y component.
    CHECK(projection_order(P(0, 5, 0), P(0, 7, 1), u) == std::strong_ordering::less);
    CHECK(projection_order(P(0, 7, 0), P(0, 5, 1), u) == std::strong_ordering::greater);
    CHECK(projection_order(P(0, 7, 0), P(0, 7, 1), u) == std::strong_ordering::less);
  }

  TEST_CASE("Direction reduction and canonical line representative") {
    const Direction d(6, -4);
    CHECK(d.dx() == 3);
    CHECK(d.dy() == -2);
    CHECK(d.line_canonical() == Direction(-3, 2));
    CHECK(Direction(-5, 0).line_canonical() == Direction(1, 0));
    CHECK_THROWS_AS(Direction(0, 0), InputError);
    CHECK_THROWS_AS(Direction(kMaxDirection + 1, 0), InputError);
  }

  TEST_CASE("monotonicity_interval examples") {
    const std::vector<Direction> one{Direction(1, 0)};
    const auto r1 = monotonicity_interval(one);
    REQUIRE(r1);
    CHECK(r1->contains(Direction(1, 5)));
    CHECK_FALSE(r1->contains(Direction(0, 1)));
    CHECK_FALSE(r1->contains(Direction(-1, 1)));

    const std::vector<Direction> opposite{Direction(1, 0), Direction(-1, 0)};
    CHECK_FALSE(monotonicity_interval(opposite));

    const std::vector<Direction> three{Direction(2, 0), Direction(-1, 1), Direction(0, -2)};
    CHECK_FALSE(monotonicity_interval(three));
  }

  TEST_CASE("monotonicity_interval agrees with the convex-hull oracle and its witness checks out") {
    Rng rng(21);
    int feasible = 0;
    for (int trial = 0; trial < 20000; ++trial) {
      const int m = 1 + static_cast<int>(rng.uniform(0, 4));
      std::vector<Direction> dirs;
      std::vector<std::pair<__int128, __int128>> raw;
      for (int i = 0; i < m; ++i) {
        Coord dx = rng.uniform(-4, 4), dy = rng.uniform(-4, 4);
        if (dx == 0 && dy == 0) dy = 1;
        dirs.emplace_back(dx, dy);
        raw.emplace_back(dx, dy);
      }
      const auto r = monotonicity_interval(dirs);
      REQUIRE(r.has_value() == testing_support::in_open_halfplane(raw));
      if (!r) continue;
      ++feasible;
      const Direction w = r->witness();
      CHECK(r->contains(w));
      for (const Direction& e : dirs) REQUIRE(dot(e, w) > 0);
    }
    CHECK(feasible > 5000);
  }

  TEST_CASE("bisector lies strictly between its arguments") {
    Rng rng(8);
    for (int i = 0; i < 2000; ++i) {
      const Direction a(rng.uniform(-1000, 1000), rng.uniform(1, 1000));
      const Direction b(rng.uniform(-1000, 1000), rng.uniform(1, 1000));
      if (cross(a, b) <= 0) continue;
      const Direction m = bisector(a, b);
      CHECK(cross(a, m) > 0);
      CHECK(cross(m, b) > 0);
    }
  }
}
