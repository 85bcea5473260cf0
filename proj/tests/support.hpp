#pragma once

// Reference oracles for the tests. Each one is written from the definitions
// and shares no code with the library predicates it is compared against.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace testing_support {

using geocover::Coord;
using geocover::Edge;
using geocover::Point;
using geocover::PointSet;

using I = __int128;

/// Open segments ab and cd share a point, solved as a linear system with
/// rational parameters s, t in (0, 1) (or overlap of collinear segments).
inline bool rational_segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const I rx = b.x - a.x, ry = b.y - a.y;
  const I sx = d.x - c.x, sy = d.y - c.y;
  const I den = rx * sy - ry * sx;
  const I qx = c.x - a.x, qy = c.y - a.y;
  if (den == 0) {
    if (qx * ry - qy * rx != 0) return false;  // parallel, distinct lines
    // Collinear: parametrize c and d along ab as multiples of |ab|^2.
    const I len = rx * rx + ry * ry;
    I t0 = qx * rx + qy * ry;
    I t1 = (d.x - a.x) * rx + (d.y - a.y) * ry;
    if (t0 > t1) std::swap(t0, t1);
    return std::max<I>(t0, 0) < std::min<I>(t1, len);
  }
  I s = qx * sy - qy * sx;  // parameter on ab, times den
  I t = qx * ry - qy * rx;  // parameter on cd, times den
  I dd = den;
  if (dd < 0) {
    dd = -dd;
    s = -s;
    t = -t;
  }
  return s > 0 && s < dd && t > 0 && t < dd;
}

/// Vectors fit in an open halfplane iff 0 is not in their convex hull. By
/// Caratheodory that fails iff 0 is a vector, lies on a segment between two
/// of them, or inside a triangle of three of them.
inline bool in_open_halfplane(const std::vector<std::pair<I, I>>& v) {
  auto cr = [](const std::pair<I, I>& p, const std::pair<I, I>& q) { return p.first * q.second - p.second * q.first; };
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].first == 0 && v[i].second == 0) return false;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const I dotp = v[i].first * v[j].first + v[i].second * v[j].second;
      if (cr(v[i], v[j]) == 0 && dotp < 0) return false;
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        const I a = cr(v[i], v[j]), b = cr(v[j], v[k]), c = cr(v[k], v[i]);
        if ((a >= 0 && b >= 0 && c >= 0) || (a <= 0 && b <= 0 && c <= 0)) {
          if (a != 0 || b != 0 || c != 0) return false;
        }
      }
    }
  }
  return true;
}

inline bool path_is_monotone(const PointSet& ps, const std::vector<int>& seq) {
  std::vector<std::pair<I, I>> v;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    v.emplace_back(ps[seq[i + 1]].x - ps[seq[i]].x, ps[seq[i + 1]].y - ps[seq[i]].y);
  }
  return in_open_halfplane(v);
}

/// Every vertex sequence of length >= 2 (one orientation per reversal class)
/// that passes the halfplane test.
inline std::set<std::vector<int>> brute_force_monotone_paths(const PointSet& ps) {
  std::set<std::vector<int>> out;
  const int n = ps.size();
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto grow = [&](auto&& self) -> void {
    if (seq.size() >= 2 && seq.front() < seq.back()) {
      if (!path_is_monotone(ps, seq)) return;  // prefixes of monotone paths are monotone
      out.insert(seq);
    } else if (seq.size() >= 2 && !path_is_monotone(ps, seq)) {
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      seq.push_back(w);
      self(self);
      seq.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  grow(grow);
  return out;
}

/// Smallest k such that k of the given edge masks cover `all`, by trying every
/// k-subset in increasing k.
inline int brute_force_min_cover(const std::vector<std::uint32_t>& masks, std::uint32_t all) {
  for (int k = 1; k <= static_cast<int>(masks.size()); ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    auto search = [&](auto&& self, int depth, int from, std::uint32_t cov) -> bool {
      if (depth == k) return cov == all;
      for (int i = from; i < static_cast<int>(masks.size()); ++i) {
        if (self(self, depth + 1, i + 1, cov | masks[static_cast<std::size_t>(i)])) return true;
      }
      return false;
    };
    if (search(search, 0, 0, 0)) return k;
  }
  return -1;
}

/// Bit of edge uv in an n-vertex edge mask, u != v.
inline int edge_bit(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

/// Drops masks contained in another mask (and duplicates).
inline std::vector<std::uint32_t> maximal_masks(std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : masks) {
    bool dominated = false;
    for (std::uint32_t o : masks) dominated = dominated || (o != m && (o & m) == m);
    if (!dominated) out.push_back(m);
  }
  return out;
}

inline bool sequence_noncrossing(const PointSet& ps, const std::vector<int>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    for (std::size_t j = i + 2; j + 1 < seq.size(); ++j) {
      if (rational_segments_cross(ps[seq[i]], ps[seq[i + 1]], ps[seq[j]], ps[seq[j + 1]])) return false;
    }
  }
  return true;
}

enum class BruteKind { kMonotonePath, kNoncrossingPath, kPlaneMatching };

/// Minimum cover by exhaustive search: every candidate piece is enumerated
/// from the definitions, reduced to maximal edge sets, and k-subsets are tried
/// in increasing k. Meant for n <= 6.
inline int exhaustive_min_cover(const PointSet& ps, BruteKind kind) {
  const int n = ps.size();
  std::vector<std::uint32_t> masks;
  if (kind == BruteKind::kPlaneMatching) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    const std::uint32_t m = static_cast<std::uint32_t>(edges.size());
    for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
      bool ok = true;
      for (std::uint32_t i = 0; i < m && ok; ++i) {
        if (!(sub >> i & 1)) continue;
        for (std::uint32_t j = i + 1; j < m && ok; ++j) {
          if (!(sub >> j & 1)) continue;
          const auto [a, b] = edges[i];
          const auto [c, d] = edges[j];
          if (a == c || a == d || b == c || b == d) ok = false;
          else if (rational_segments_cross(ps[a], ps[b], ps[c], ps[d])) ok = false;
        }
      }
      if (ok) masks.push_back(sub);  // bit i of sub is edge i in (u, v) order
    }
  } else {
    std::vector<int> seq;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto grow = [&](auto&& self) -> void {
      if (seq.size() >= 2) {
        const bool ok = kind == BruteKind::kMonotonePath ? path_is_monotone(ps, seq) : sequence_noncrossing(ps, seq);
        if (!ok) return;  // both properties pass to prefixes
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) mask |= 1u << edge_bit(seq[i], seq[i + 1], n);
        masks.push_back(mask);
      }
      for (int w = 0; w < n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = 1;
        seq.push_back(w);
        self(self);
        seq.pop_back();
        used[static_cast<std::size_t>(w)] = 0;
      }
    };
    grow(grow);
  }
  const int total = n * (n - 1) / 2;
  const std::uint32_t all = total == 32 ? ~0u : (1u << total) - 1;
  return brute_force_min_cover(maximal_masks(masks), all);
}

/// Edge multiset of a cover, each edge once.
inline std::set<Edge> edge_union(const geocover::Cover& cover) {
  std::set<Edge> out;
  for (const auto& p : cover.pieces) {
    for (const Edge& e : p.edges()) out.insert(e);
  }
  return out;
}

}  // namespace testing_support
