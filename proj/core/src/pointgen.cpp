#include "geocover/pointgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "geocover/errors.hpp"
#include "geocover/rng.hpp"

namespace geocover {

namespace {

constexpr int kMaxRepairs = 100000;

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Coord clamp_coord(double v) {
  const double lim = static_cast<double>(kMaxCoord);
  return static_cast<Coord>(std::llround(std::clamp(v, -lim, lim)));
}

struct Vec {
  Coord x;
  Coord y;
  int id;
};

// Folds a vector into the half-plane [0, pi) so parallel vectors coincide.
Vec fold(Vec v) {
  if (v.y < 0 || (v.y == 0 && v.x < 0)) return Vec{-v.x, -v.y, v.id};
  return v;
}

Wide cross(const Vec& a, const Vec& b) { return Wide{a.x} * b.y - Wide{a.y} * b.x; }

std::optional<std::array<int, 3>> find_collinear_triple_tiered(const std::vector<Point>& pts) {
  if (static_cast<int>(pts.size()) <= kExhaustiveGeneralPositionLimit) {
    return find_collinear_triple_bruteforce(pts);
  }
  return find_collinear_triple(pts);
}

// Redraws points named in collinear triples until none remain.
template <typename Redraw>
void repair_general_position(std::vector<Point>& pts, Redraw&& redraw) {
  for (int attempt = 0; attempt < kMaxRepairs; ++attempt) {
    const auto triple = find_collinear_triple_tiered(pts);
    if (!triple) return;
    const int victim = (*triple)[2];
    redraw(pts[static_cast<std::size_t>(victim)]);
  }
  throw InfeasibleError("could not reach general position after bounded re-draws");
}

void renumber(std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].id = static_cast<int>(i);
}

}  // namespace

std::optional<std::array<int, 3>> find_collinear_triple_bruteforce(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(pts[i], pts[j], pts[k]) == 0) {
          return std::array<int, 3>{pts[i].id, pts[j].id, pts[k].id};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_collinear_triple(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<Vec> around;
  around.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    around.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Vec v{pts[j].x - pts[i].x, pts[j].y - pts[i].y, pts[j].id};
      if (v.x == 0 && v.y == 0) return std::array<int, 3>{pts[i].id, pts[j].id, pts[j].id};
      around.push_back(fold(v));
    }
    std::sort(around.begin(), around.end(), [](const Vec& a, const Vec& b) { return cross(a, b) > 0; });
    for (std::size_t t = 1; t < around.size(); ++t) {
      if (cross(around[t - 1], around[t]) == 0) {
        std::array<int, 3> tri{pts[i].id, around[t - 1].id, around[t].id};
        std::sort(tri.begin(), tri.end());
        return tri;
      }
    }
  }
  return std::nullopt;
}

bool in_general_position(const PointSet& ps) {
  return !find_collinear_triple_tiered(ps.points).has_value();
}

bool is_convex_hull_order(const PointSet& ps) {
  const int n = ps.size();
  if (n < 3) return true;
  int descents = 0;
  for (int i = 0; i < n; ++i) {
    const Point& a = ps[i];
    const Point& b = ps[(i + 1) % n];
    const Point& c = ps[(i + 2) % n];
    if (orient(a, b, c) <= 0) return false;
    if (angle_less(Direction::from_to(b, c), Direction::from_to(a, b))) ++descents;
  }
  return descents == 1;
}

bool all_points_extreme(const PointSet& ps) {
  const int n = ps.size();
  for (int p = 0; p < n; ++p) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          if (a == p || b == p || c == p) continue;
          const int o1 = orient(ps[a], ps[b], ps[p]);
          const int o2 = orient(ps[b], ps[c], ps[p]);
          const int o3 = orient(ps[c], ps[a], ps[p]);
          const bool inside = (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
          if (inside) return false;
        }
      }
    }
  }
  return true;
}

DensityCheck density_check(const PointSet& ps, double alpha) {
  DensityCheck out;
  const int n = ps.size();
  if (n < 2) return out;
  out.min_dist2 = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Wide d = dist2(ps[i], ps[j]);
      out.max_dist2 = std::max(out.max_dist2, d);
      if (out.min_dist2 < 0 || d < out.min_dist2) out.min_dist2 = d;
    }
  }
  if (out.min_dist2 == 0) {
    out.ratio = INFINITY;
    out.dense = false;
    return out;
  }
  // Squared distances stay below 2^64 and are exact in long double.
  const long double mx = static_cast<long double>(out.max_dist2);
  const long double mn = static_cast<long double>(out.min_dist2);
  out.ratio = static_cast<double>(std::sqrt(mx / mn));
  out.dense = mx <= static_cast<long double>(alpha) * alpha * n * mn;
  return out;
}

PointSet gen_uniform(int n, std::uint64_t seed) {
  if (n < 2) throw InputError("gen_uniform: n must be at least 2");
  Rng rng(seed);
  std::vector<Point> pts(static_cast<std::size_t>(n));
  auto draw = [&rng](Point& p) {
    p.x = rng.uniform(0, kUnitFrame);
    p.y = rng.uniform(0, kUnitFrame);
  };
  for (Point& p : pts) draw(p);
  renumber(pts);
  repair_general_position(pts, draw);

  PointSet ps;
  ps.points = std::move(pts);
  ps.provenance = Provenance{"uniform", {{"n", std::to_string(n)}}, seed};
  return ps;
}

namespace {

constexpr double kDenseJitter = 0.05;

std::vector<Point> dense_points(int n, std::uint64_t seed) {
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  const Coord spacing = kUnitFrame / std::max(cols, 1);
  const Coord jitter = static_cast<Coord>(kDenseJitter * static_cast<double>(spacing));
  Rng rng(seed);
  std::vector<Point> pts(static_cast<std::size_t>(n));
  std::vector<std::pair<Coord, Coord>> cell(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Coord cx = spacing / 2 + (i % cols) * spacing;
    const Coord cy = spacing / 2 + (i / cols) * spacing;
    cell[static_cast<std::size_t>(i)] = {cx, cy};
  }
  auto draw = [&](Point& p) {
    const auto [cx, cy] = cell[static_cast<std::size_t>(p.id)];
    p.x = cx + rng.uniform(-jitter, jitter);
    p.y = cy + rng.uniform(-jitter, jitter);
  };
  renumber(pts);
  for (Point& p : pts) draw(p);
  if (n >= 3) repair_general_position(pts, draw);
  return pts;
}

}  // namespace

double gen_dense_alpha(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_dense: n must be positive");
  PointSet ps;
  ps.points = dense_points(n, seed);
  return achieved_alpha(ps);
}

double achieved_alpha(const PointSet& ps) {
  if (ps.size() < 2) return 0.0;
  const double raw = density_check(ps, 0.0).ratio / std::sqrt(static_cast<double>(ps.size()));
  return std::ceil(raw * 1e6) / 1e6 + 1e-6;
}

PointSet gen_dense(int n, double alpha, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_dense: n must be positive");
  PointSet ps;
  ps.points = dense_points(n, seed);
  const DensityCheck check = density_check(ps, alpha);
  if (!check.dense) {
    throw InfeasibleError("gen_dense: alpha=" + fmt_double(alpha) + " is infeasible; achieved ratio " +
                          fmt_double(check.ratio) + " = " +
                          fmt_double(check.ratio / std::sqrt(static_cast<double>(n))) + " * sqrt(n)");
  }
  ps.provenance = Provenance{"dense", {{"n", std::to_string(n)}, {"alpha", fmt_double(alpha)}}, seed};
  return ps;
}

PointSet gen_convex(int n, std::uint64_t seed) {
  if (n < 3) throw InputError("gen_convex: n must be at least 3");
  Rng rng(seed);
  const double radius = static_cast<double>(kUnitFrame) / 2.0;
  const double center = radius;
  std::vector<Point> pts(static_cast<std::size_t>(n));
  renumber(pts);
  auto draw = [&](Point& p) {
    const double angle = 2.0 * M_PI * (p.id + 0.5 * (rng.unit() - 0.5)) / n;
    p.x = clamp_coord(center + radius * std::cos(angle));
    p.y = clamp_coord(center + radius * std::sin(angle));
  };
  for (Point& p : pts) draw(p);

  PointSet ps;
  ps.provenance = Provenance{"convex", {{"n", std::to_string(n)}}, seed};
  for (int attempt = 0; attempt < kMaxRepairs; ++attempt) {
    ps.points = pts;
    if (is_convex_hull_order(ps)) return ps;
    // Strictly convex hull order already implies general position, so the
    // only repair needed is a fresh angle for a point at a non-left turn.
    for (int i = 0; i < n; ++i) {
      if (orient(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>((i + 1) % n)],
                 pts[static_cast<std::size_t>((i + 2) % n)]) <= 0) {
        draw(pts[static_cast<std::size_t>((i + 1) % n)]);
        break;
      }
    }
  }
  throw InfeasibleError("gen_convex: could not reach convex position");
}

namespace {

struct Cluster {
  double cx;
  double cy;
  double arc_angle;  // direction of the arc or grid axis, radians
};

std::vector<std::pair<double, double>> cluster_offsets(int k, double diam, double angle, ClusterShape shape,
                                                       Rng& rng) {
  std::vector<std::pair<double, double>> out;
  if (k == 1 || diam <= 0.0) {
    out.assign(static_cast<std::size_t>(k), {0.0, 0.0});
    return out;
  }
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto place = [&](double t, double h) { out.emplace_back(t * c - h * s, t * s + h * c); };
  if (shape == ClusterShape::kArc) {
    // Roughly equidistant points on a shallow parabolic arc.
    const double width = 0.85 * diam;
    const double sag = 0.1 * width;
    const double step = width / (k - 1);
    for (int i = 0; i < k; ++i) {
      const double t = -width / 2 + i * step + (rng.unit() - 0.5) * 0.06 * step;
      const double r = 2.0 * t / width;
      const double h = sag * r * r - sag / 2 + (rng.unit() - 0.5) * 0.06 * step;
      place(t, h);
    }
  } else {
    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
    const int rows = (k + cols - 1) / cols;
    const int span = std::max(cols, rows) - 1;
    const double step = span > 0 ? 0.85 * diam / (span * std::sqrt(2.0)) : 0.0;
    for (int i = 0; i < k; ++i) {
      const double t = ((i % cols) - (cols - 1) / 2.0) * step + (rng.unit() - 0.5) * 0.2 * step;
      const double h = ((i / cols) - (rows - 1) / 2.0) * step + (rng.unit() - 0.5) * 0.2 * step;
      place(t, h);
    }
  }
  return out;
}

Wide group_diameter2(const std::vector<Point>& pts, const std::vector<Group>& groups, Group g) {
  Wide best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (groups[i] != g) continue;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (groups[j] == g) best = std::max(best, dist2(pts[i], pts[j]));
    }
  }
  return best;
}

PointSet gen_clustered(int k, std::uint64_t seed, ClusterOptions opts, const std::vector<Cluster>& clusters,
                       double unit, const std::string& name) {
  if (k < 1) throw InputError(name + ": k must be at least 1");
  if (!(opts.lambda > 1.0)) throw InputError(name + ": lambda must exceed 1");
  Rng rng(seed);
  const auto groups_n = clusters.size();
  std::vector<Point> pts;
  std::vector<Group> groups;
  pts.reserve(groups_n * static_cast<std::size_t>(k));
  double target = unit / opts.lambda;
  for (std::size_t g = 0; g < groups_n; ++g) {
    if (k > 1 && target < 8.0 * k) {
      throw InfeasibleError(name + ": lambda=" + fmt_double(opts.lambda) +
                            " leaves no room on the integer grid for group " +
                            std::string(1, group_letter(static_cast<Group>(g))));
    }
    const auto offsets = cluster_offsets(k, target, clusters[g].arc_angle, opts.shape, rng);
    const Coord cx = clamp_coord(clusters[g].cx);
    const Coord cy = clamp_coord(clusters[g].cy);
    for (const auto& [dx, dy] : offsets) {
      pts.push_back(Point{cx + std::llround(dx), cy + std::llround(dy), 0});
      groups.push_back(static_cast<Group>(g));
    }
    const double actual = std::sqrt(static_cast<double>(group_diameter2(pts, groups, static_cast<Group>(g))));
    target = actual / opts.lambda;
  }
  renumber(pts);

  if (k > 1 || groups_n > 2) {
    // Re-draw a small jitter on the offending point; clusters are tiny, so the
    // brute-force triple scan is the check.
    auto redraw = [&](Point& p) {
      const auto g = static_cast<std::size_t>(groups[static_cast<std::size_t>(p.id)]);
      const double d = std::sqrt(static_cast<double>(group_diameter2(pts, groups, static_cast<Group>(g))));
      const Coord j = std::max<Coord>(1, static_cast<Coord>(d / (40.0 * k)));
      p.x += rng.uniform(-j, j);
      p.y += rng.uniform(-j, j);
    };
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kMaxRepairs) throw InfeasibleError(name + ": could not reach general position");
      const auto triple = find_collinear_triple_bruteforce(pts);
      if (!triple) break;
      redraw(pts[static_cast<std::size_t>((*triple)[2])]);
    }
  }

  PointSet ps;
  ps.points = std::move(pts);
  ps.groups = std::move(groups);
  ps.provenance = Provenance{
      name,
      {{"k", std::to_string(k)},
       {"lambda", fmt_double(opts.lambda)},
       {"shape", opts.shape == ClusterShape::kArc ? "arc" : "grid"}},
      seed};

  // The diameter chain must hold exactly after the jitter repairs.
  const auto d2 = group_diameters2(ps);
  const Wide lam2 = static_cast<Wide>(std::floor(opts.lambda * opts.lambda));
  for (std::size_t g = 1; g < groups_n; ++g) {
    if (d2[g] * lam2 > d2[g - 1]) {
      throw InfeasibleError(name + ": diameter chain violated after repair");
    }
  }
  return ps;
}

}  // namespace

PointSet gen_tripartite(int k, std::uint64_t seed, ClusterOptions opts) {
  const double side = 1.0e9;
  const double h = side * std::sqrt(3.0) / 2.0;
  // Each cluster is stretched parallel to the opposite side of the triangle,
  // i.e. away from the directions towards the smaller clusters.
  const std::vector<Cluster> clusters = {
      {0.0, 0.0, 2.0 * M_PI / 3.0},
      {side, 0.0, M_PI / 3.0},
      {side / 2.0, h, 0.0},
  };
  return gen_clustered(k, seed, opts, clusters, side, "tripartite");
}

PointSet gen_bipartite(int k, std::uint64_t seed, ClusterOptions opts) {
  const double side = 1.0e9;
  const std::vector<Cluster> clusters = {
      {0.0, 0.0, M_PI / 2.0},
      {side, 0.0, M_PI / 2.0},
  };
  return gen_clustered(k, seed, opts, clusters, side, "bipartite");
}

std::array<Wide, 3> group_diameters2(const PointSet& ps) {
  std::array<Wide, 3> out{0, 0, 0};
  if (!ps.groups) return out;
  for (int g = 0; g < 3; ++g) out[static_cast<std::size_t>(g)] = group_diameter2(ps.points, *ps.groups, static_cast<Group>(g));
  return out;
}

std::size_t e0_edge_count(const PointSet& ps) {
  if (!ps.groups) return 0;
  std::array<std::size_t, 3> sizes{0, 0, 0};
  for (Group g : *ps.groups) ++sizes[static_cast<std::size_t>(g)];
  return sizes[0] * sizes[1] + sizes[0] * sizes[2] + sizes[1] * sizes[2];
}

}  // namespace geocover
