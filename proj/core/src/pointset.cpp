#include "geocover/pointset.hpp"

#include <cmath>
#include <cstdio>

#include "geocover/errors.hpp"
#include "geocover/rng.hpp"

namespace geocover {

char group_letter(Group g) {
  switch (g) {
    case Group::kA: return 'A';
    case Group::kB: return 'B';
    case Group::kC: return 'C';
  }
  return '?';
}

PointSet make_point_set(const std::vector<std::pair<Coord, Coord>>& coords, Provenance provenance) {
  PointSet ps;
  ps.provenance = std::move(provenance);
  ps.points.reserve(coords.size());
  int id = 0;
  for (const auto& [x, y] : coords) {
    if (x > kMaxCoord || x < -kMaxCoord || y > kMaxCoord || y < -kMaxCoord) {
      throw InputError("coordinate out of range: (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
    ps.points.push_back(Point{x, y, id++});
  }
  return ps;
}

std::string pointset_hash(const PointSet& ps) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(ps.points.size()));
  for (const Point& p : ps.points) {
    mix(static_cast<std::uint64_t>(p.x));
    mix(static_cast<std::uint64_t>(p.y));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double Rng::normal() {
  double u1 = unit();
  while (u1 <= 0.0) u1 = unit();
  const double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace geocover
