#include "doctest.h"

#include <set>

#include "geocover/errors.hpp"
#include "geocover/pointgen.hpp"
#include "geocover/rng.hpp"
#include "geocover/zigzag_ham.hpp"
#include "support.hpp"

using namespace geocover;

namespace {

// Direct restatement: consecutive turns alternate in sign.
bool turns_alternate(const PointSet& ps, const std::vector<int>& v) {
  for (std::size_t i = 0; i + 3 < v.size(); ++i) {
    const int s1 = orient(ps[v[i]], ps[v[i + 1]], ps[v[i + 2]]);
    const int s2 = orient(ps[v[i + 1]], ps[v[i + 2]], ps[v[i + 3]]);
    if (s1 * s2 >= 0) return false;
  }
  return true;
}

bool contains_edge(const std::vector<int>& v, int a, int b) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if ((v[i] == a && v[i + 1] == b) || (v[i] == b && v[i + 1] == a)) return true;
  }
  return false;
}

// Greedy half path with angles compared through squared cosines, exact for
// coordinates below 2^12.
std::vector<int> oracle_half_path(const PointSet& ps, int a, int b) {
  using I = __int128;
  std::vector<int> path{a, b}, rest;
  for (int v = 0; v < ps.size(); ++v) {
    if (v != a && v != b && orient(ps[a], ps[b], ps[v]) > 0) rest.push_back(v);
  }
  while (!rest.empty()) {
    const Point& prev = ps[path[path.size() - 2]];
    const Point& at = ps[path.back()];
    const I vx = prev.x - at.x, vy = prev.y - at.y;
    // cos(p) > cos(q) iff dp/|wp| > dq/|wq|.
    auto larger_cos = [&](int p, int q) {
      const I px = ps[p].x - at.x, py = ps[p].y - at.y, qx = ps[q].x - at.x, qy = ps[q].y - at.y;
      const I dp = vx * px + vy * py, dq = vx * qx + vy * qy;
      const I np = px * px + py * py, nq = qx * qx + qy * qy;
      const int sp = (dp > 0) - (dp < 0), sq = (dq > 0) - (dq < 0);
      if (sp != sq) return sp > sq;
      const I lhs = dp * dp * nq, rhs = dq * dq * np;
      return sp >= 0 ? lhs > rhs : lhs < rhs;
    };
    std::size_t pick = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (larger_cos(rest[i], rest[pick])) pick = i;
    }
    path.push_back(rest[pick]);
    rest.erase(rest.begin() + static_cast<long>(pick));
  }
  return path;
}

}  // namespace

TEST_SUITE("zigzag") {
  TEST_CASE("tiny inputs") {
    const PointSet two = gen_uniform(2, 1);
    CHECK(zigzag_ham_path(two, 0, 1).vertices.size() == 2);
    const PointSet three = gen_uniform(3, 1);
    const PathPiece p = zigzag_ham_path(three, 0, 1);
    CHECK(p.vertices.size() == 3);
    CHECK(contains_edge(p.vertices, 0, 1));
    CHECK(is_zigzag_path(three, p));
    CHECK_THROWS_AS(zigzag_ham_path(three, 0, 0), InputError);
    CHECK_THROWS_AS(zigzag_ham_path(three, 0, 3), InputError);
  }

  TEST_CASE("half paths stay on the left of ab") {
    const PointSet ps = gen_uniform(30, 4);
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 30; b += 7) {
        if (a == b) continue;
        const auto half = zigzag_half_path(ps, a, b);
        REQUIRE(half.size() >= 2);
        CHECK(half[0] == a);
        CHECK(half[1] == b);
        std::size_t left = 0;
        for (int p = 0; p < ps.size(); ++p) left += orient(ps[a], ps[b], ps[p]) > 0;
        CHECK(half.size() == left + 2);
        for (std::size_t i = 2; i < half.size(); ++i) CHECK(orient(ps[a], ps[b], ps[half[i]]) > 0);
      }
    }
  }

  TEST_CASE("greedy choice matches an exact cosine oracle") {
    Rng rng(77);
    int cases = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 4 + static_cast<int>(rng.uniform(0, 20));
      std::vector<std::pair<Coord, Coord>> xy;
      std::set<std::pair<Coord, Coord>> seen;
      while (static_cast<int>(xy.size()) < n) {
        const std::pair<Coord, Coord> p{rng.uniform(0, 4000), rng.uniform(0, 4000)};
        if (seen.insert(p).second) xy.push_back(p);
      }
      const PointSet ps = make_point_set(xy);
      if (!in_general_position(ps)) continue;
      ++cases;
      for (int b = 1; b < n; ++b) CHECK(zigzag_half_path(ps, 0, b) == oracle_half_path(ps, 0, b));
    }
    CHECK(cases > 200);
  }

  TEST_CASE("Hamiltonian, plane, zig-zag and through ab on every pair") {
    int non_monotone = 0;
    for (int n : {10, 25}) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const PointSet ps = gen_uniform(n, seed);
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            const PathPiece p = zigzag_ham_path(ps, a, b);
            REQUIRE(p.vertices.size() == static_cast<std::size_t>(n));
            CHECK(std::set<int>(p.vertices.begin(), p.vertices.end()).size() == static_cast<std::size_t>(n));
            CHECK(contains_edge(p.vertices, a, b));
            CHECK(testing_support::sequence_noncrossing(ps, p.vertices));
            CHECK(turns_alternate(ps, p.vertices));
            non_monotone += !testing_support::path_is_monotone(ps, p.vertices);
          }
        }
      }
    }
    // Zig-zag paths need not be monotone.
    CHECK(non_monotone > 0);
  }

  TEST_CASE("convex position") {
    const PointSet ps = gen_convex(12, 3);
    for (int b = 1; b < 12; ++b) {
      const PathPiece p = zigzag_ham_path(ps, 0, b);
      CHECK(turns_alternate(ps, p.vertices));
      CHECK(testing_support::sequence_noncrossing(ps, p.vertices));
    }
  }

  TEST_CASE("zig-zag covers verify") {
    for (int n : {2, 5, 20, 70}) {
      const PointSet ps = gen_uniform(n, 9);
      const Cover c = zigzag_ham_cover(ps);
      CHECK(check_coverage(ps, c).pass);
      for (const Piece& piece : c.pieces) CHECK(piece.kind == PieceKind::kZigzagPath);
      CHECK(c.pieces.size() <= pair_count(n));
      if (n >= 5) CHECK(c.pieces.size() < pair_count(n) / 2);
    }
  }
}
