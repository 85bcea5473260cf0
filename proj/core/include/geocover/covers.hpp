#pragma once

// Cover representation and exact verifiers for every structural property a
// piece can claim: monotone path or matching, noncrossing path, plane
// matching, zig-zag path, and full coverage of the C(n,2) edges.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geocover/geom.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

enum class PieceKind {
  kMonotonePath,
  kMonotoneMatching,
  kNoncrossingPath,
  kPlaneMatching,
  kZigzagPath,  // plane zig-zag path
};

std::string to_string(PieceKind kind);
/// Throws InputError on unknown names.
PieceKind piece_kind_from_string(const std::string& name);
bool is_path_kind(PieceKind kind);

struct PathPiece {
  std::vector<int> vertices;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Edge edge(std::size_t i) const { return Edge(vertices[i], vertices[i + 1]); }
  std::vector<Edge> edges() const;

  friend bool operator==(const PathPiece&, const PathPiece&) = default;
};

struct MatchingPiece {
  std::vector<Edge> edges;

  friend bool operator==(const MatchingPiece&, const MatchingPiece&) = default;
};

struct Piece {
  PieceKind kind = PieceKind::kMonotonePath;
  std::variant<PathPiece, MatchingPiece> shape;
  std::optional<Direction> witness;
  int block = -1;  // index into Cover::blocks, when the piece came from a K6 block

  const PathPiece* path() const { return std::get_if<PathPiece>(&shape); }
  const MatchingPiece* matching() const { return std::get_if<MatchingPiece>(&shape); }
  std::vector<Edge> edges() const;
  friend bool operator==(const Piece&, const Piece&) = default;
};

Piece make_path_piece(PieceKind kind, std::vector<int> vertices, std::optional<Direction> witness = {});
Piece make_matching_piece(PieceKind kind, std::vector<Edge> edges, std::optional<Direction> witness = {});

struct Cover {
  std::string pointset_hash;
  std::vector<Piece> pieces;
  std::vector<std::array<int, 6>> blocks;  // K6 block provenance, if any

  void append(Cover&& other);
  friend bool operator==(const Cover&, const Cover&) = default;
};

struct CrossingWitness {
  Edge first;
  Edge second;
};

struct PieceVerdict {
  std::size_t index = 0;
  bool pass = true;
  std::string failure;
  std::optional<Direction> witness;
  std::optional<CrossingWitness> crossing;
};

struct VerificationReport {
  bool pass = true;
  int n = 0;
  std::size_t total_edges = 0;
  std::size_t covered_edges = 0;
  std::vector<PieceVerdict> pieces;
  std::vector<Edge> uncovered;
  std::map<PieceKind, std::size_t> counts;

  std::size_t failed_pieces() const;
};

/// Checks ids and distinctness; throws InputError on violations.
void validate_path(const PointSet& ps, const PathPiece& p);
void validate_matching(const PointSet& ps, const MatchingPiece& m);

/// Interval of witness directions, or nullopt when the path is not monotone.
std::optional<AngularInterval> is_monotone_path(const PointSet& ps, const PathPiece& p);

/// True iff the projections of the edges onto u are pairwise disjoint closed
/// intervals.
bool matching_monotone_in(const PointSet& ps, const MatchingPiece& m, const Direction& u);

/// Decision procedure: a witness direction, or nullopt when no direction
/// separates every edge projection. Sweeps the exact critical directions of
/// all edge pairs; O(m^2 log m).
std::optional<Direction> is_monotone_matching(const PointSet& ps, const MatchingPiece& m);

struct NoncrossingResult {
  bool ok = true;
  std::optional<CrossingWitness> crossing;
};

/// Pairwise exact check; long pieces are first screened by
/// sweep_any_crossing and only fall back to the pairwise scan when the sweep
/// finds a crossing or gives up.
NoncrossingResult is_noncrossing(const PointSet& ps, const PathPiece& p);
NoncrossingResult is_noncrossing(const PointSet& ps, const MatchingPiece& m);

/// Whether any two segments cross, by a left-to-right sweep in O(m log m).
/// Segments may share an endpoint id. Returns nullopt on degenerate input:
/// two distinct endpoints with equal x, or an endpoint touching or collinear
/// with a segment it is compared against.
std::optional<bool> sweep_any_crossing(const PointSet& ps, std::span<const Edge> segments);

/// Every three consecutive edges (a,b,c,d) have a and d strictly on opposite
/// sides of line bc. Paths with fewer than three edges pass vacuously.
bool is_zigzag_path(const PointSet& ps, const PathPiece& p);

/// Verifies one piece against its claimed kind. Never throws.
PieceVerdict verify_piece(const PointSet& ps, const Piece& piece, std::size_t index = 0);

VerificationReport check_coverage(const PointSet& ps, const Cover& cover);

/// Replaces each path by its odd-edge and even-edge matchings (empty halves
/// are dropped). Monotone paths become monotone matchings with the same
/// witness; other paths become plane matchings.
Cover paths_to_matchings(const Cover& cover);

/// Parallel-chord classes {i,j : i+j = c mod n} on a convex set in hull order;
/// n plane matchings partitioning the edge set. Throws InputError when the
/// set is not in convex hull order.
Cover convex_matching_decomposition(const PointSet& ps);

/// Decomposes an edge set into 2-edge paths (x, v, y) sharing the middle
/// vertex v. Each connected component with an odd number of edges leaves
/// exactly one single-edge path; nothing else is left over.
std::vector<PathPiece> pair_edges_into_paths(int n, const std::vector<Edge>& edges);

}  // namespace geocover
