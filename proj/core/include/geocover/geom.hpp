#pragma once

// Exact planar predicates on integer coordinates.
//
// Every predicate here is evaluated in 128-bit integer arithmetic. Point
// coordinates are bounded by kMaxCoord, direction components by kMaxDirection,
// which keeps every determinant and dot product used below far from overflow.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace geocover {

using Coord = std::int64_t;
using Wide = __int128;

inline constexpr Coord kMaxCoord = Coord{1} << 30;
inline constexpr Coord kMaxDirection = Coord{1} << 40;

struct Point {
  Coord x = 0;
  Coord y = 0;
  int id = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// A nonzero integer vector reduced by the gcd of its components. Orientation
/// is kept: (1,0) and (-1,0) are different directions.
class Direction {
 public:
  /// Throws InputError for the zero vector or oversized components.
  Direction(Coord dx, Coord dy);

  static Direction from_to(const Point& from, const Point& to) {
    return Direction(to.x - from.x, to.y - from.y);
  }

  Coord dx() const { return dx_; }
  Coord dy() const { return dy_; }

  Direction operator-() const { return Direction(-dx_, -dy_, Unreduced{}); }
  /// Rotated by +90 degrees.
  Direction perp() const { return Direction(-dy_, dx_, Unreduced{}); }
  /// Rotated by -90 degrees.
  Direction perp_cw() const { return Direction(dy_, -dx_, Unreduced{}); }
  /// The representative of the undirected line: dy > 0, or dy == 0 and dx > 0.
  Direction line_canonical() const;

  std::string str() const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  struct Unreduced {};
  Direction(Coord dx, Coord dy, Unreduced) : dx_(dx), dy_(dy) {}

  Coord dx_;
  Coord dy_;
};

/// Sum of two directions; the result lies strictly inside the smaller angle
/// they span when that angle is in (0, pi).
Direction bisector(const Direction& a, const Direction& b);

inline Wide cross(const Direction& a, const Direction& b) {
  return Wide{a.dx()} * b.dy() - Wide{a.dy()} * b.dx();
}

inline Wide dot(const Direction& a, const Direction& b) {
  return Wide{a.dx()} * b.dx() + Wide{a.dy()} * b.dy();
}

inline Wide dot(const Point& p, const Direction& u) {
  return Wide{p.x} * u.dx() + Wide{p.y} * u.dy();
}

inline Wide dot(const Direction& e, const Point& p) { return dot(p, e); }

/// Sign of (b - a) x (c - a): +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

/// True iff the open segments ab and cd share a point. Segments sharing an
/// endpoint only touch at that endpoint, which is never a crossing.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Compares <p,u> with <q,u>.
std::strong_ordering project_compare(const Point& p, const Point& q, const Direction& u);

/// Full projection order used by every sort in the library: <.,u>, then
/// <.,perp(u)>, then id. The second key resolves ties exactly as a tiny
/// counterclockwise rotation of u would, so every sorted order is a strict
/// projection order for a nearby direction.
std::strong_ordering projection_order(const Point& p, const Point& q, const Direction& u);

/// Counterclockwise angular order of directions starting at the +x axis.
bool angle_less(const Direction& a, const Direction& b);

/// Open set of directions strictly between lo and hi, counterclockwise. The
/// span from lo to hi is in (0, pi], or the whole circle when `full` is set.
struct AngularInterval {
  Direction lo{1, 0};
  Direction hi{1, 0};
  bool lo_open = true;
  bool hi_open = true;
  bool full = false;

  bool contains(const Direction& u) const;
  /// An exact direction strictly inside the interval.
  Direction witness() const;
};

/// Directions u with <e,u> > 0 for every e, or nullopt when the vectors do not
/// fit in an open halfplane. Precondition: `edges` is nonempty.
std::optional<AngularInterval> monotonicity_interval(std::span<const Direction> edges);

}  // namespace geocover
