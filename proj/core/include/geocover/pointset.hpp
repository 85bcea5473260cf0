#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geocover/geom.hpp"

namespace geocover {

enum class Group : std::uint8_t { kA = 0, kB = 1, kC = 2 };

char group_letter(Group g);

/// Records how a point set was produced; all values are kept as strings so
/// they round-trip through JSON byte for byte.
struct Provenance {
  std::string generator;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Integer point set with ids 0..n-1 matching vector positions.
struct PointSet {
  std::vector<Point> points;
  Provenance provenance;
  std::optional<std::vector<Group>> groups;

  int size() const { return static_cast<int>(points.size()); }
  const Point& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Builds a point set from raw coordinates, assigning ids in order. Throws
/// InputError when a coordinate exceeds kMaxCoord.
PointSet make_point_set(const std::vector<std::pair<Coord, Coord>>& coords,
                        Provenance provenance = {});

/// FNV-1a over n and the coordinates, as 16 lowercase hex digits.
std::string pointset_hash(const PointSet& ps);

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense index of an edge among the C(n,2) pairs in lexicographic order.
inline std::size_t edge_index(int n, const Edge& e) {
  const auto un = static_cast<std::size_t>(n);
  const auto u = static_cast<std::size_t>(e.u);
  const auto v = static_cast<std::size_t>(e.v);
  return u * un - u * (u + 1) / 2 + (v - u - 1);
}

inline std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
}

/// Squared Euclidean distance, exact.
inline Wide dist2(const Point& a, const Point& b) {
  const Wide dx = a.x - b.x;
  const Wide dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace geocover
