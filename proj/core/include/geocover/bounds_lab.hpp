#pragma once

// Exact certification of how many inter-group edges a single monotone path
// can carry in a clustered instance. The maximum over all directions is
// taken cell by cell over the arrangement of critical directions, so the
// resulting lower bound on the cover size holds for the concrete instance.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

/// Critical line directions (perpendiculars of all point pairs) over the half
/// circle, and one sample strictly inside each cell between consecutive ones.
/// samples[i] lies between critical[i] and critical[i+1] (the last one wraps
/// through -critical[0]).
struct CriticalFan {
  std::vector<Direction> critical;
  std::vector<Direction> samples;
};

CriticalFan build_critical_fan(const PointSet& ps);

struct E0Path {
  int count = 0;
  PathPiece witness;  // one vertex when count == 0
};

/// Longest path in projection order along u counted in inter-group edges.
/// Requires group labels; throws InputError when two points tie along u.
E0Path max_e0_on_monotone_path(const PointSet& ps, const Direction& u);

/// Exhaustive reference: every vertex sequence that is a monotone path.
/// Throws SizeGuardError for n > 10.
E0Path brute_force_max_e0(const PointSet& ps);

struct LowerBoundCertificate {
  int n = 0;
  std::size_t e0_edges = 0;
  std::size_t cells = 0;  // cells evaluated, counting u and -u separately
  int max_e0 = 0;
  PathPiece witness;
  Direction witness_direction{1, 0};
  std::size_t bound = 0;  // ceil(e0_edges / max_e0)
  std::map<int, std::size_t> histogram;  // per-cell maximum -> number of cells
};

LowerBoundCertificate certify_lower_bound(const PointSet& ps);

struct ConditionReport {
  std::string walk;  // groups visited, repeats collapsed, e.g. "ABABAC"
  bool no_triangle_cycle = true;   // (i)
  bool no_two_reversed_types = true;  // (ii)
  bool pair_limits = true;         // (iii)
  std::vector<std::string> violations;

  bool all_hold() const { return no_triangle_cycle && no_two_reversed_types && pair_limits; }
};

/// Checks the structural conditions on a walk given by the group of each
/// vertex in path order. diam2 orders the groups by size.
ConditionReport classify_group_walk(const std::vector<Group>& vertex_groups, const std::array<Wide, 3>& diam2);

/// Same on a concrete path; throws InputError unless the path is monotone.
ConditionReport classify_path_conditions(const PointSet& ps, const PathPiece& path);

}  // namespace geocover
