#include "doctest.h"

#include <set>

#include "geocover/clique_cover.hpp"
#include "geocover/errors.hpp"
#include "geocover/pointgen.hpp"
#include "geocover/rng.hpp"
#include "support.hpp"

using namespace geocover;

namespace {

constexpr std::array<int, 6> kFirstSix{0, 1, 2, 3, 4, 5};

std::array<Point, 6> six_points(const PointSet& ps, const std::array<int, 6>& ids) {
  std::array<Point, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = ps[ids[i]];
  return out;
}

// Zig-zag by definition: the two end edges turn to opposite sides of the
// middle edge.
bool is_zigzag3(const PointSet& ps, const std::vector<int>& v) {
  if (v.size() != 4) return false;
  return orient(ps[v[0]], ps[v[1]], ps[v[2]]) * orient(ps[v[1]], ps[v[2]], ps[v[3]]) < 0;
}

}  // namespace

TEST_SUITE("clique") {
  TEST_CASE("random six-sets decompose into five zig-zag paths") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const PointSet ps = gen_uniform(6, seed);
      const K6Block blk = k6_zigzag_decomposition(ps, kFirstSix);
      std::set<Edge> edges;
      for (const PathPiece& p : blk.paths) {
        CHECK(is_zigzag3(ps, p.vertices));
        CHECK(testing_support::path_is_monotone(ps, p.vertices));
        CHECK(is_noncrossing(ps, p).ok);
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) edges.emplace(p.vertices[i], p.vertices[i + 1]);
      }
      CHECK(edges.size() == 15);
      CHECK(count_k6_zigzag_decompositions(ps, kFirstSix) >= 1);
    }
    const PointSet ps = gen_uniform(6, 1);
    CHECK_THROWS_AS(k6_zigzag_decomposition(ps, {0, 1, 2, 3, 4, 4}), InputError);
    CHECK_THROWS_AS(k6_zigzag_decomposition(ps, {0, 1, 2, 3, 4, 6}), InputError);
  }

  TEST_CASE("order type signatures") {
    const PointSet a = gen_uniform(6, 3);
    std::array<Point, 6> pts = six_points(a, kFirstSix);
    const OrderTypeSignature s = order_type_signature(pts);
    std::swap(pts[0], pts[4]);
    CHECK(order_type_signature(pts) == s);
    for (Point& p : pts) p.x = -p.x;  // mirror
    CHECK(order_type_signature(pts) == s);
    // Convex hexagons all share one order type.
    CHECK(order_type_signature(six_points(gen_convex(6, 1), kFirstSix)) ==
          order_type_signature(six_points(gen_convex(6, 9), kFirstSix)));
    pts[2] = Point{pts[0].x + (pts[1].x - pts[0].x) * 2, pts[0].y + (pts[1].y - pts[0].y) * 2, 2};
    CHECK_THROWS_AS(order_type_signature(pts), InputError);

    std::set<OrderTypeSignature> seen;
    Rng rng(4);
    for (int i = 0; i < 20000 && seen.size() < 16; ++i) {
      const PointSet ps = gen_uniform(6, rng.next());
      seen.insert(order_type_signature(six_points(ps, kFirstSix)));
    }
    CHECK(seen.size() == 16);
  }

  TEST_CASE("design obstructions") {
    CHECK(k6_design_obstruction(6) == std::nullopt);
    CHECK(k6_design_obstruction(31) == std::nullopt);
    CHECK(k6_design_obstruction(16).has_value());
    CHECK(k6_design_obstruction(21).has_value());
    CHECK(k6_design_obstruction(7).has_value());   // 5 does not divide 6
    CHECK(k6_design_obstruction(11).has_value());  // 15 does not divide 55
    CHECK(search_k6_design(6, 1000).has_value());
    CHECK_FALSE(search_k6_design(16, 50'000'000).has_value());
    CHECK_THROWS_AS(pack_k6(16, PackingMode::kExact), InfeasibleError);
  }

  TEST_CASE("projective plane of order five") {
    const auto blocks = projective_plane_blocks();
    CHECK(blocks.size() == 31);
    PackingPlan plan;
    plan.n = 31;
    plan.blocks = blocks;
    CHECK_NOTHROW(validate_packing(plan));
    const PackingPlan exact = pack_k6(31, PackingMode::kExact);
    CHECK(exact.blocks.size() == 31);
    CHECK(exact.leftover.empty());
  }

  TEST_CASE("exact n = 6 gives five pieces") {
    const PackingPlan plan = pack_k6(6, PackingMode::kExact);
    REQUIRE(plan.blocks.size() == 1);
    CHECK(plan.leftover.empty());
    const PointSet ps = gen_uniform(6, 12);
    const Cover c = packing_cover(ps, plan);
    CHECK(c.pieces.size() == 5);
    CHECK(check_coverage(ps, c).pass);
  }

  TEST_CASE("greedy packings are valid and give verified covers") {
    for (int n : {7, 20, 40, 60}) {
      PackingOptions opts;
      opts.seed = 3;
      const PackingPlan plan = pack_k6(n, PackingMode::kGreedy, opts);
      CHECK_NOTHROW(validate_packing(plan));
      const PointSet ps = gen_uniform(n, 5);
      const Cover c = packing_cover(ps, plan);
      CHECK(check_coverage(ps, c).pass);
      CHECK(c.pieces.size() <= 5 * plan.blocks.size() + (plan.leftover.size() + 1) / 2 + 1);
    }
    CHECK(pack_k6(40, PackingMode::kGreedy) == pack_k6(40, PackingMode::kGreedy));
    PackingPlan broken = pack_k6(12, PackingMode::kGreedy);
    REQUIRE(!broken.leftover.empty());
    broken.leftover.pop_back();
    CHECK_THROWS_AS(validate_packing(broken), InputError);
  }

  TEST_CASE("two-edge cover") {
    for (int n : {2, 3, 4, 9, 10}) {
      const PointSet ps = gen_uniform(n, 2);
      const Cover c = two_edge_cover(ps);
      CHECK(check_coverage(ps, c).pass);
      CHECK(c.pieces.size() == (pair_count(n) + 1) / 2);
      int singles = 0;
      for (const Piece& p : c.pieces) singles += p.edges().size() == 1;
      CHECK(singles == static_cast<int>(pair_count(n) % 2));
    }
  }
}
