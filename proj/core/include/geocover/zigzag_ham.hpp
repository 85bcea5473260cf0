#pragma once

// Plane zig-zag Hamiltonian paths through a prescribed edge, built greedily
// by smallest turning angle on each side of the edge's line.

#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

/// Sets up to this size get the greedy set cover over all C(n,2) paths;
/// larger sets build paths only for edges still uncovered.
inline constexpr int kZigzagFullCoverLimit = 64;

/// Hamiltonian path containing edge ab. Points on each side of line ab are
/// appended one at a time, each minimizing the angle at the previous vertex
/// between the previous edge and the new one. Throws InputError for bad ids
/// and NotFoundError if the result is not plane and zig-zag.
PathPiece zigzag_ham_path(const PointSet& ps, int a, int b);

/// a, b, then every point strictly left of the directed line a->b in greedy
/// order.
std::vector<int> zigzag_half_path(const PointSet& ps, int a, int b);

Cover zigzag_ham_cover(const PointSet& ps);

}  // namespace geocover
