#pragma once

// K6 packings and their zig-zag decompositions: every six points in general
// position split K6 into five 3-edge zig-zag paths, so a packing of K6 blocks
// gives a monotone path cover with five pieces per block.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

struct K6Block {
  std::array<int, 6> ids{};
  std::array<PathPiece, 5> paths;
};

/// First decomposition of the 15 edges among `ids` into five 3-edge zig-zag
/// paths, by backtracking in a fixed edge order. Throws NotFoundError when no
/// decomposition exists and InputError on repeated or out-of-range ids.
K6Block k6_zigzag_decomposition(const PointSet& ps, const std::array<int, 6>& ids);

/// Number of distinct decompositions (as sets of paths); for tests.
std::size_t count_k6_zigzag_decompositions(const PointSet& ps, const std::array<int, 6>& ids);

/// Orientation bit per triple i<j<k of the six points, minimized over all
/// relabelings and the mirror image. Throws InputError on a collinear triple.
using OrderTypeSignature = std::uint32_t;
OrderTypeSignature order_type_signature(const std::array<Point, 6>& pts);

enum class PackingMode { kExact, kGreedy };

struct PackingOptions {
  std::uint64_t seed = 1;
  int restarts = 4;
  bool transversal_seed = true;       // start greedy runs from a TD(6,q) packing
  std::uint64_t node_limit = 50'000'000;  // exact search budget
};

struct PackingPlan {
  int n = 0;
  std::vector<std::array<int, 6>> blocks;  // ids sorted within each block
  std::vector<Edge> leftover;             // sorted
  friend bool operator==(const PackingPlan&, const PackingPlan&) = default;
};

/// Largest n for which exact mode runs a backtracking search.
inline constexpr int kExactSearchLimit = 21;

/// Reasons an exact decomposition of K_n into K6 cannot exist, or nullopt.
/// Covers the divisibility conditions and Fisher's inequality b >= v.
std::optional<std::string> k6_design_obstruction(int n);

/// Exact backtracking for a K6 decomposition of K_n. Returns nullopt when the
/// search space is exhausted; throws SizeGuardError when node_limit runs out.
std::optional<std::vector<std::array<int, 6>>> search_k6_design(int n, std::uint64_t node_limit);

/// Blocks of the projective plane of order 5: a K6 decomposition of K31.
std::vector<std::array<int, 6>> projective_plane_blocks();

/// Exact mode: a perfect decomposition (n = 31 by construction, n <= 21 by
/// search); throws InfeasibleError naming the violated condition and
/// SizeGuardError when no method applies. Greedy mode: best maximal packing
/// over the restarts.
PackingPlan pack_k6(int n, PackingMode mode, const PackingOptions& opts = {});

/// Throws InputError unless blocks are edge-disjoint and blocks plus
/// leftover partition the C(n,2) edges.
void validate_packing(const PackingPlan& plan);

/// Five monotone pieces per block (each a verified 3-edge zig-zag path), the
/// leftover split into 2-edge paths through a shared vertex.
Cover packing_cover(const PointSet& ps, const PackingPlan& plan);

/// Every edge of K_n in 2-edge paths; at most one single edge remains.
Cover two_edge_cover(const PointSet& ps);

}  // namespace geocover
