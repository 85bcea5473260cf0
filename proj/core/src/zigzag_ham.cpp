#include "geocover/zigzag_ham.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geocover/errors.hpp"

namespace geocover {

namespace {

using UWide = unsigned __int128;

// Far above the rounding error of a cosine computed in double.
constexpr double kCosineSlack = 1e-9;

// Sign of x*y - z*w for |x|, |y|, |z|, |w| < 2^63.
int compare_products(Wide x, Wide y, Wide z, Wide w) {
  const int s1 = (x > 0) - (x < 0);
  const int s2 = (y > 0) - (y < 0);
  const int s3 = (z > 0) - (z < 0);
  const int s4 = (w > 0) - (w < 0);
  const int lhs = s1 * s2;
  const int rhs = s3 * s4;
  if (lhs != rhs) return lhs > rhs ? 1 : -1;
  if (lhs == 0) return 0;
  const UWide a = static_cast<UWide>(x < 0 ? -x : x) * static_cast<UWide>(y < 0 ? -y : y);
  const UWide b = static_cast<UWide>(z < 0 ? -z : z) * static_cast<UWide>(w < 0 ? -w : w);
  const int mag = a == b ? 0 : (a > b ? 1 : -1);
  return lhs > 0 ? mag : -mag;
}

// True iff angle(prev, at, p) < angle(prev, at, q), angles in (0, pi).
bool smaller_angle(const Point& prev, const Point& at, const Point& p, const Point& q) {
  const Wide vx = prev.x - at.x;
  const Wide vy = prev.y - at.y;
  auto polar = [&](const Point& r) {
    const Wide wx = r.x - at.x;
    const Wide wy = r.y - at.y;
    Wide c = vx * wy - vy * wx;
    if (c < 0) c = -c;
    return std::pair<Wide, Wide>{vx * wx + vy * wy, c};
  };
  // Angles compare as the polar angles of (dot, |cross|) in the upper half
  // plane: p is smaller iff dot_p |cross_q| - |cross_p| dot_q > 0.
  const auto [dp, cp] = polar(p);
  const auto [dq, cq] = polar(q);
  return compare_products(dp, cq, cp, dq) > 0;
}

}  // namespace

std::vector<int> zigzag_half_path(const PointSet& ps, int a, int b) {
  std::vector<int> path{a, b};
  std::vector<int> rest;
  std::vector<double> cosines;
  for (int v = 0; v < ps.size(); ++v) {
    if (v != a && v != b && orient(ps[a], ps[b], ps[v]) > 0) rest.push_back(v);
  }
  while (!rest.empty()) {
    const Point& prev = ps[path[path.size() - 2]];
    const Point& at = ps[path.back()];
    // The smallest angle has the largest cosine. Candidates whose rounded
    // cosine is near the best are settled with the exact comparison.
    const double vx = static_cast<double>(prev.x - at.x);
    const double vy = static_cast<double>(prev.y - at.y);
    const double vlen = std::sqrt(vx * vx + vy * vy);
    cosines.resize(rest.size());
    double best = -2.0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const double wx = static_cast<double>(ps[rest[i]].x - at.x);
      const double wy = static_cast<double>(ps[rest[i]].y - at.y);
      cosines[i] = (vx * wx + vy * wy) / (vlen * std::sqrt(wx * wx + wy * wy));
      best = std::max(best, cosines[i]);
    }
    auto pick = rest.end();
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      if (cosines[static_cast<std::size_t>(it - rest.begin())] < best - kCosineSlack) continue;
      if (pick == rest.end() || smaller_angle(prev, at, ps[*it], ps[*pick])) pick = it;
    }
    path.push_back(*pick);
    rest.erase(pick);
  }
  return path;
}

PathPiece zigzag_ham_path(const PointSet& ps, int a, int b) {
  if (a < 0 || b < 0 || a >= ps.size() || b >= ps.size() || a == b) throw InputError("zigzag_ham_path needs two distinct ids");
  for (int v = 0; v < ps.size(); ++v) {
    if (v != a && v != b && orient(ps[a], ps[b], ps[v]) == 0) {
      throw InputError("point " + std::to_string(v) + " lies on line ab");
    }
  }
  const std::vector<int> left = zigzag_half_path(ps, a, b);
  std::vector<int> right = zigzag_half_path(ps, b, a);
  std::reverse(right.begin(), right.end());  // ..., c2, c1, a, b
  right.insert(right.end(), left.begin() + 2, left.end());
  PathPiece path{std::move(right)};
  if (!is_zigzag_path(ps, path) || !is_noncrossing(ps, path).ok) {
    throw NotFoundError("greedy zig-zag path through (" + std::to_string(a) + "," + std::to_string(b) +
                        ") is not plane zig-zag; point set hash " + pointset_hash(ps));
  }
  return path;
}

Cover zigzag_ham_cover(const PointSet& ps) {
  const int n = ps.size();
  Cover cover;
  cover.pointset_hash = pointset_hash(ps);
  if (n < 2) return cover;
  std::vector<char> covered(pair_count(n), 0);
  auto mark = [&](const PathPiece& p) {
    for (const Edge& e : p.edges()) covered[edge_index(n, e)] = 1;
  };
  if (n > kZigzagFullCoverLimit) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (covered[edge_index(n, Edge(u, v))]) continue;
        PathPiece p = zigzag_ham_path(ps, u, v);
        mark(p);
        cover.pieces.push_back(make_path_piece(PieceKind::kZigzagPath, std::move(p.vertices)));
      }
    }
    return cover;
  }
  // Greedy set cover over the paths of all pairs; ties go to the earliest pair.
  std::vector<PathPiece> paths;
  std::vector<std::vector<std::size_t>> edge_ids;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      paths.push_back(zigzag_ham_path(ps, u, v));
      std::vector<std::size_t> ids;
      for (const Edge& e : paths.back().edges()) ids.push_back(edge_index(n, e));
      edge_ids.push_back(std::move(ids));
    }
  }
  std::size_t open = pair_count(n);
  std::vector<char> taken(paths.size(), 0);
  while (open > 0) {
    std::size_t best = 0;
    std::size_t gain_best = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (taken[i]) continue;
      std::size_t gain = 0;
      for (std::size_t id : edge_ids[i]) gain += covered[id] == 0;
      if (gain > gain_best) {
        gain_best = gain;
        best = i;
      }
    }
    taken[best] = 1;
    for (std::size_t id : edge_ids[best]) {
      if (!covered[id]) {
        covered[id] = 1;
        --open;
      }
    }
    cover.pieces.push_back(make_path_piece(PieceKind::kZigzagPath, paths[best].vertices));
  }
  return cover;
}

}  // namespace geocover
