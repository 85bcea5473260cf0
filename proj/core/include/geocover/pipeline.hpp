#pragma once

// One entry point per covering algorithm, shared by the command line, the
// experiment runner and the acceptance suite.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geocover/clique_cover.hpp"
#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

enum class Algorithm {
  kPhase1,     // monotone matchings from the half-circle sweep
  kPhase12,    // plus greedy plane matchings on the residual
  kDense,      // skip paths on an alpha-dense set
  kK6,         // K6 packing with zig-zag block decompositions
  kZigzagHam,  // plane zig-zag Hamiltonian paths
  kTwoEdge,    // 2-edge paths
  kConvex,     // parallel-chord matchings of a convex set
};

std::string to_string(Algorithm algo);
/// Accepts the names printed by to_string; throws InputError otherwise.
Algorithm algorithm_from_string(const std::string& name);
const std::vector<Algorithm>& all_algorithms();

struct CoverRequest {
  Algorithm algorithm = Algorithm::kPhase12;
  double c = 1.0;
  std::optional<double> alpha;  // dense only; defaults to the set's own ratio
  PackingMode packing = PackingMode::kGreedy;
  std::uint64_t seed = 1;
  int restarts = 4;
};

struct CoverStats {
  int directions = 0;
  std::size_t pieces_phase1 = 0;
  std::size_t residual_edges = 0;
  std::size_t pieces_phase2 = 0;
  std::size_t pieces = 0;
  std::size_t blocks = 0;
  std::size_t leftover_edges = 0;
  int budget = 0;  // dense B
  double alpha = 0.0;
  std::optional<double> wall_time_ms;
};

struct CoverRun {
  Cover cover;
  CoverStats stats;
};

CoverRun run_cover(const PointSet& ps, const CoverRequest& req);

}  // namespace geocover
