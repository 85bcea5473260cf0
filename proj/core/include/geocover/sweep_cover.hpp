#pragma once

// Direction-sweep covers: Phase I monotone spanning paths over a half-circle
// fan, a greedy plane-matching Phase II for the residual, skip-path covers of
// dense sets, and the angular locus predicate that controls which edges a
// sweep picks up.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

class Rng;

enum class FanMode {
  kHalf,  // N directions at k*pi/N
  kFull,  // N directions at 2k*pi/N
};

/// Fan directions are rounded to this radius before gcd reduction.
inline constexpr Coord kFanScale = Coord{1} << 30;

/// round(pi / (c n^-4/3)) in half mode, round(2 pi / (c n^-1/2)) in full mode.
/// Throws InputError when the count would be below 1.
int fan_size(int n, FanMode mode, double c);

/// `count` near-uniform directions starting at (1,0).
std::vector<Direction> fan_directions(int count, FanMode mode);

/// fan_directions(fan_size(n, mode, c), mode).
std::vector<Direction> direction_fan(int n, FanMode mode, double c);

/// All points in projection order along u.
std::vector<int> projection_sorted(const PointSet& ps, const Direction& u);

/// The spanning path in projection order along u. Monotone in u itself when
/// no two points tie, and in a nearby direction otherwise.
PathPiece monotone_spanning_path(const PointSet& ps, const Direction& u);

/// Locus of points on some line that meets segment ab at an angle whose
/// tangent is at most tan_num / tan_den.
struct LocusQuery {
  Point a;
  Point b;
  Coord tan_num = 0;
  Coord tan_den = 1;

  /// tan(theta) rounded to a multiple of 2^-30. Throws InputError if a == b.
  static LocusQuery with_angle(const Point& a, const Point& b, double theta);
};

bool locus_contains(const LocusQuery& q, const Point& p);

struct AreaEstimate {
  double area = 0.0;     // fraction of the unit frame
  double std_error = 0.0;
};

/// Monte-Carlo area of the locus clipped to [0, kUnitFrame]^2, in units of the
/// frame area.
AreaEstimate estimate_locus_area(const LocusQuery& q, int samples, Rng& rng);

enum class SweepPhase { kPhaseOne, kPhaseOneTwo };

struct SweepConfig {
  double c = 1.0;
  SweepPhase phase = SweepPhase::kPhaseOne;
  std::optional<int> directions;  // overrides round(pi / theta)
  bool emit_paths = false;        // one path per direction instead of two matchings
};

struct SweepResult {
  Cover cover;
  std::vector<Edge> residual;  // edges missed by Phase I, sorted
  int directions = 0;
  std::size_t phase1_pieces = 0;
  std::size_t phase2_pieces = 0;
};

/// Phase I, plus Phase II on the residual when cfg.phase asks for it.
SweepResult phase1_cover(const PointSet& ps, const SweepConfig& cfg);

/// Residual of Phase I without materializing the cover. Replays the
/// adjacent swaps of the projection order between fan directions, so the cost
/// is O(n^2 log n) regardless of the fan size.
std::vector<Edge> phase1_residual(const PointSet& ps, const SweepConfig& cfg);

/// Greedy plane matchings: scan the remaining edges by increasing length and
/// keep every edge that is vertex-disjoint from and noncrossing with the
/// current piece; repeat until no edge is left.
Cover phase2_cover(const PointSet& ps, std::span<const Edge> residual);

/// (8c + 4 sqrt2 alpha) / (pi alpha^2).
double dense_beta(double alpha, double c);

struct DenseStats {
  int directions = 0;
  int budget = 0;  // B = floor(beta sqrt n)
  std::size_t pieces = 0;
  std::size_t covered_edges = 0;
  std::size_t total_edges = 0;
};

/// Receives each skip path together with the direction it is monotone in.
using PathSink = std::function<void(const PathPiece&, const Direction&)>;

/// Emits the skip paths a_j a_{i+j} a_{2i+j} ... for every fan direction and
/// 1 <= j <= i <= B. Throws InputError when the set is not alpha-dense.
DenseStats dense_cover_stream(const PointSet& ps, double alpha, double c, const PathSink& sink);

/// Materialized dense cover.
Cover dense_cover(const PointSet& ps, double alpha, double c, DenseStats* stats = nullptr);

/// Runs the dense construction marking edges in a bitset only; returns the
/// stats with covered_edges filled in. Used for timing at large n.
DenseStats dense_coverage(const PointSet& ps, double alpha, double c);

}  // namespace geocover
