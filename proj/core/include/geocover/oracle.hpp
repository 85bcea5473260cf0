#pragma once

// Exact minimum covers for tiny instances.

#include <cstdint>
#include <vector>

#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

inline constexpr int kEnumerateLimit = 8;
inline constexpr int kMonotoneOracleLimit = 7;
inline constexpr int kOtherOracleLimit = 6;

/// Every monotone path with at least one edge, once per reversal class (the
/// stored orientation starts at the smaller endpoint id), sorted. Built from
/// the increasing subsequences of every cell's projection order.
std::vector<PathPiece> enumerate_monotone_paths(const PointSet& ps);

struct OracleResult {
  PieceKind kind = PieceKind::kMonotonePath;
  int optimum = 0;
  Cover cover;
  std::size_t candidates = 0;  // maximal candidate pieces searched
  std::uint64_t nodes = 0;
};

/// Minimum number of pieces of the given kind covering all edges. Kinds:
/// monotone path (n <= 7), noncrossing path and plane matching (n <= 6).
OracleResult min_cover(const PointSet& ps, PieceKind kind);

}  // namespace geocover
