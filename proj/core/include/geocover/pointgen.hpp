#pragma once

// Point-set families: uniform random, alpha-dense jittered grids, convex
// position, and the clustered tripartite/bipartite lower-bound instances.
// Every generator is a deterministic function of its parameters and seed.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "geocover/pointset.hpp"

namespace geocover {

/// Side of the integer frame that models the unit square.
inline constexpr Coord kUnitFrame = Coord{1} << 30;

/// Sets up to this size are checked with the O(n^3) triple scan; larger sets
/// use the exact O(n^2 log n) angular scan.
inline constexpr int kExhaustiveGeneralPositionLimit = 1024;

/// Returns a collinear triple (ids) or nullopt, by brute force over all triples.
std::optional<std::array<int, 3>> find_collinear_triple_bruteforce(const std::vector<Point>& pts);

/// Same answer as the brute force, via angular sorting around every point.
std::optional<std::array<int, 3>> find_collinear_triple(const std::vector<Point>& pts);

bool in_general_position(const PointSet& ps);

/// True iff every point is a vertex of the convex hull and the points are
/// listed in counterclockwise hull order.
bool is_convex_hull_order(const PointSet& ps);

/// Independent check: every point is extreme (not inside or on the hull of
/// the others). O(n^4); meant for tests on small sets.
bool all_points_extreme(const PointSet& ps);

/// max/min pairwise distance ratio, and whether it is at most alpha*sqrt(n).
struct DensityCheck {
  Wide max_dist2 = 0;
  Wide min_dist2 = 0;
  double ratio = 0.0;  // sqrt(max/min)
  bool dense = true;
};
DensityCheck density_check(const PointSet& ps, double alpha);

PointSet gen_uniform(int n, std::uint64_t seed);

/// Jittered ceil(sqrt n) x ceil(sqrt n) grid. `alpha` must be at least the
/// ratio the grid achieves; the achieved value is reported on failure.
PointSet gen_dense(int n, double alpha, std::uint64_t seed);

/// Ratio / sqrt(n) of an arbitrary set, rounded up to a multiple of 1e-6
/// plus one step so that density_check passes with it.
double achieved_alpha(const PointSet& ps);

/// Alpha achieved by gen_dense for (n, seed), rounded up to a multiple of
/// 1e-6 plus one step so it passes the exact check.
double gen_dense_alpha(int n, std::uint64_t seed);

PointSet gen_convex(int n, std::uint64_t seed);

enum class ClusterShape { kArc, kGrid };

struct ClusterOptions {
  double lambda = 100.0;
  ClusterShape shape = ClusterShape::kArc;
};

/// n = 3k points near the vertices of an equilateral triangle, groups A, B, C
/// with diam(C) <= diam(B)/lambda, diam(B) <= diam(A)/lambda and
/// diam(A) <= side/lambda.
PointSet gen_tripartite(int k, std::uint64_t seed, ClusterOptions opts = {});

/// n = 2k points in two clusters with diam(B) <= diam(A)/lambda and
/// diam(A) <= separation/lambda.
PointSet gen_bipartite(int k, std::uint64_t seed, ClusterOptions opts = {});

/// Squared diameter of each labelled group (index by Group).
std::array<Wide, 3> group_diameters2(const PointSet& ps);

/// Number of undirected inter-group edges.
std::size_t e0_edge_count(const PointSet& ps);

}  // namespace geocover
