#include "geocover/geom.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "geocover/errors.hpp"

namespace geocover {

namespace {

int sign(Wide v) { return (v > 0) - (v < 0); }

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half(const Direction& d) { return (d.dy() > 0 || (d.dy() == 0 && d.dx() > 0)) ? 0 : 1; }

}  // namespace

Direction::Direction(Coord dx, Coord dy) {
  if (dx == 0 && dy == 0) throw InputError("zero direction vector");
  if (dx > kMaxDirection || dx < -kMaxDirection || dy > kMaxDirection || dy < -kMaxDirection) {
    throw InputError("direction component out of range");
  }
  const Coord g = std::gcd(dx, dy);
  dx_ = dx / g;
  dy_ = dy / g;
}

Direction Direction::line_canonical() const {
  return half(*this) == 0 ? *this : -*this;
}

std::string Direction::str() const {
  return "(" + std::to_string(dx_) + "," + std::to_string(dy_) + ")";
}

Direction bisector(const Direction& a, const Direction& b) {
  return Direction(a.dx() + b.dx(), a.dy() + b.dy());
}

int orient(const Point& a, const Point& b, const Point& c) {
  const Wide det = Wide{b.x - a.x} * (c.y - a.y) - Wide{b.y - a.y} * (c.x - a.x);
  return sign(det);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && o2 == 0) {
    // Collinear: the open segments overlap iff their extents overlap with
    // positive length along the dominant axis.
    const bool use_x = (a.x != b.x) || (c.x != d.x);
    auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    const Coord lo1 = std::min(key(a), key(b));
    const Coord hi1 = std::max(key(a), key(b));
    const Coord lo2 = std::min(key(c), key(d));
    const Coord hi2 = std::max(key(c), key(d));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  }
  // Any remaining contact happens at an endpoint of one of the segments.
  return false;
}

std::strong_ordering project_compare(const Point& p, const Point& q, const Direction& u) {
  const Wide a = dot(p, u);
  const Wide b = dot(q, u);
  return a < b ? std::strong_ordering::less
               : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering projection_order(const Point& p, const Point& q, const Direction& u) {
  if (auto c = project_compare(p, q, u); c != 0) return c;
  if (auto c = project_compare(p, q, u.perp()); c != 0) return c;
  return p.id <=> q.id;
}

bool angle_less(const Direction& a, const Direction& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool AngularInterval::contains(const Direction& u) const {
  if (full) return true;
  const Wide span = cross(lo, hi);
  if (span > 0) return cross(lo, u) > 0 && cross(u, hi) > 0;
  // lo and hi are opposite: the open half circle to the left of lo.
  return cross(lo, u) > 0;
}

Direction AngularInterval::witness() const {
  if (full) return Direction(1, 0);
  if (cross(lo, hi) > 0) return bisector(lo, hi);
  return lo.perp();
}

std::optional<AngularInterval> monotonicity_interval(std::span<const Direction> edges) {
  if (edges.empty()) throw InputError("monotonicity_interval: empty edge list");
  std::vector<Direction> dirs(edges.begin(), edges.end());
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  AngularInterval out;
  if (dirs.size() == 1) {
    out.lo = dirs[0].perp_cw();
    out.hi = dirs[0].perp();
    return out;
  }
  const std::size_t m = dirs.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Direction& cur = dirs[i];
    const Direction& next = dirs[(i + 1) % m];
    if (cross(cur, next) < 0) {
      // The counterclockwise gap after `cur` exceeds pi: `cur` is the most
      // counterclockwise vector and `next` the most clockwise one.
      out.lo = cur.perp_cw();
      out.hi = next.perp();
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace geocover
