#include "geocover/sweep_cover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "geocover/errors.hpp"
#include "geocover/pointgen.hpp"
#include "geocover/rng.hpp"

namespace geocover {

namespace {

class EdgeBits {
 public:
  explicit EdgeBits(int n) : n_(n), words_((pair_count(n) + 63) / 64, 0) {}

  void set(int a, int b) {
    const std::size_t idx = edge_index(n_, Edge(a, b));
    words_[idx / 64] |= std::uint64_t{1} << (idx % 64);
  }
  bool test(int a, int b) const {
    const std::size_t idx = edge_index(n_, Edge(a, b));
    return (words_[idx / 64] >> (idx % 64)) & 1u;
  }
  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
  }
  std::vector<Edge> missing() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (!test(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Keeps the projection order between consecutive directions; re-sorting by
// insertion costs O(n + swaps), and neighbouring fan directions differ by few
// swaps.
class ProjectionSorter {
 public:
  explicit ProjectionSorter(const PointSet& ps)
      : ps_(ps), order_(static_cast<std::size_t>(ps.size())), key1_(order_.size()), key2_(order_.size()) {
    std::iota(order_.begin(), order_.end(), 0);
  }

  const std::vector<int>& sort(const Direction& u) {
    const Direction w = u.perp();
    for (int i = 0; i < ps_.size(); ++i) {
      key1_[static_cast<std::size_t>(i)] = dot(ps_[i], u);
      key2_[static_cast<std::size_t>(i)] = dot(ps_[i], w);
    }
    for (std::size_t i = 1; i < order_.size(); ++i) {
      const int v = order_[i];
      std::size_t j = i;
      while (j > 0 && less(v, order_[j - 1])) {
        order_[j] = order_[j - 1];
        --j;
      }
      order_[j] = v;
    }
    return order_;
  }

  // True when two consecutive points share a projection along the last u.
  bool has_ties() const {
    for (std::size_t i = 1; i < order_.size(); ++i) {
      if (key1_[static_cast<std::size_t>(order_[i])] == key1_[static_cast<std::size_t>(order_[i - 1])]) return true;
    }
    return false;
  }

 private:
  bool less(int a, int b) const {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (key1_[ia] != key1_[ib]) return key1_[ia] < key1_[ib];
    if (key2_[ia] != key2_[ib]) return key2_[ia] < key2_[ib];
    return a < b;
  }

  const PointSet& ps_;
  std::vector<int> order_;
  std::vector<Wide> key1_;
  std::vector<Wide> key2_;
};

Direction order_witness(const PointSet& ps, const std::vector<int>& order, const ProjectionSorter& sorter,
                        const Direction& u) {
  if (!sorter.has_ties()) return u;
  const auto interval = is_monotone_path(ps, PathPiece{order});
  if (!interval) throw NotFoundError("projection order is not monotone; predicate bug");
  return interval->witness();
}

int checked_count(double value, const char* what) {
  if (!(value >= 0.5) || value > 1e9) {
    std::ostringstream os;
    os << what << " gives " << value << " directions; adjust c";
    throw InputError(os.str());
  }
  return static_cast<int>(std::llround(value));
}

}  // namespace

int fan_size(int n, FanMode mode, double c) {
  if (n < 2) throw InputError("direction fan needs n >= 2");
  if (!(c > 0)) throw InputError("c must be positive");
  const double nd = static_cast<double>(n);
  if (mode == FanMode::kHalf) return checked_count(M_PI / (c * std::pow(nd, -4.0 / 3.0)), "half fan");
  return checked_count(2.0 * M_PI / (c / std::sqrt(nd)), "full fan");
}

std::vector<Direction> fan_directions(int count, FanMode mode) {
  if (count < 1) throw InputError("direction fan needs at least one direction");
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(count));
  const double span = mode == FanMode::kHalf ? M_PI : 2.0 * M_PI;
  const double r = static_cast<double>(kFanScale);
  for (int k = 0; k < count; ++k) {
    const double a = span * k / count;
    out.emplace_back(static_cast<Coord>(std::llround(r * std::cos(a))), static_cast<Coord>(std::llround(r * std::sin(a))));
  }
  return out;
}

std::vector<Direction> direction_fan(int n, FanMode mode, double c) { return fan_directions(fan_size(n, mode, c), mode); }

std::vector<int> projection_sorted(const PointSet& ps, const Direction& u) {
  std::vector<int> order(static_cast<std::size_t>(ps.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return projection_order(ps[a], ps[b], u) < 0; });
  return order;
}

PathPiece monotone_spanning_path(const PointSet& ps, const Direction& u) { return PathPiece{projection_sorted(ps, u)}; }

LocusQuery LocusQuery::with_angle(const Point& a, const Point& b, double theta) {
  if (a.x == b.x && a.y == b.y) throw InputError("locus needs two distinct points");
  if (!(theta > 0) || !(theta < M_PI / 2)) throw InputError("locus angle must lie in (0, pi/2)");
  LocusQuery q;
  q.a = a;
  q.b = b;
  q.tan_den = Coord{1} << 30;
  const double scaled = std::tan(theta) * static_cast<double>(q.tan_den);
  if (scaled > static_cast<double>(kMaxDirection)) throw InputError("locus angle too close to pi/2");
  q.tan_num = static_cast<Coord>(std::llround(scaled));
  return q;
}

bool locus_contains(const LocusQuery& q, const Point& p) {
  // With h the distance from p to line ab and t its offset along ab, the
  // flattest line from p to the segment has tangent h / max(|t|, |t - |ab||).
  const Wide ex = q.b.x - q.a.x;
  const Wide ey = q.b.y - q.a.y;
  const Wide px = p.x - q.a.x;
  const Wide py = p.y - q.a.y;
  Wide cr = ex * py - ey * px;
  if (cr < 0) cr = -cr;
  Wide ta = px * ex + py * ey;
  Wide tb = (p.x - q.b.x) * ex + (p.y - q.b.y) * ey;
  if (ta < 0) ta = -ta;
  if (tb < 0) tb = -tb;
  const Wide reach = std::max(ta, tb);
  // cr, reach < 2^64 and both tangent parts are at most 2^40.
  return cr * q.tan_den <= reach * q.tan_num;
}

AreaEstimate estimate_locus_area(const LocusQuery& q, int samples, Rng& rng) {
  if (samples < 1) throw InputError("need at least one sample");
  std::int64_t hits = 0;
  for (int s = 0; s < samples; ++s) {
    const Point p{rng.uniform(0, kUnitFrame), rng.uniform(0, kUnitFrame), -1};
    if (locus_contains(q, p)) ++hits;
  }
  AreaEstimate est;
  est.area = static_cast<double>(hits) / samples;
  est.std_error = std::sqrt(est.area * (1.0 - est.area) / samples);
  return est;
}

SweepResult phase1_cover(const PointSet& ps, const SweepConfig& cfg) {
  const int n = ps.size();
  if (n < 2) throw InputError("phase1_cover needs n >= 2");
  SweepResult result;
  result.directions = cfg.directions ? *cfg.directions : fan_size(n, FanMode::kHalf, cfg.c);
  const auto fan = fan_directions(result.directions, FanMode::kHalf);
  result.cover.pointset_hash = pointset_hash(ps);

  EdgeBits seen(n);
  ProjectionSorter sorter(ps);
  for (const Direction& u : fan) {
    const std::vector<int>& order = sorter.sort(u);
    const Direction w = order_witness(ps, order, sorter, u);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) seen.set(order[i], order[i + 1]);
    if (cfg.emit_paths) {
      result.cover.pieces.push_back(make_path_piece(PieceKind::kMonotonePath, order, w));
      continue;
    }
    for (std::size_t parity = 0; parity < 2; ++parity) {
      std::vector<Edge> edges;
      for (std::size_t i = parity; i + 1 < order.size(); i += 2) edges.emplace_back(order[i], order[i + 1]);
      if (!edges.empty()) result.cover.pieces.push_back(make_matching_piece(PieceKind::kMonotoneMatching, std::move(edges), w));
    }
  }
  result.phase1_pieces = result.cover.pieces.size();
  result.residual = seen.missing();
  if (cfg.phase == SweepPhase::kPhaseOneTwo) {
    Cover second = phase2_cover(ps, result.residual);
    result.phase2_pieces = second.pieces.size();
    result.cover.append(std::move(second));
  }
  return result;
}

std::vector<Edge> phase1_residual(const PointSet& ps, const SweepConfig& cfg) {
  const int n = ps.size();
  if (n < 2) throw InputError("phase1_residual needs n >= 2");
  const int count = cfg.directions ? *cfg.directions : fan_size(n, FanMode::kHalf, cfg.c);
  const auto fan = fan_directions(count, FanMode::kHalf);

  // Every pair swaps once over the half circle, at the line direction
  // perpendicular to it. A swap at exactly a fan direction has already
  // happened there, matching the tie rule of projection_order.
  struct Swap {
    Coord dx;
    Coord dy;
    int a;
    int b;
  };
  std::vector<Swap> swaps;
  swaps.reserve(pair_count(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Direction d = Direction::from_to(ps[a], ps[b]).perp().line_canonical();
      if (d.dy() == 0) continue;  // swaps at angle pi, after the last fan direction
      swaps.push_back(Swap{d.dx(), d.dy(), a, b});
    }
  }
  std::sort(swaps.begin(), swaps.end(), [](const Swap& s, const Swap& t) {
    return Wide{s.dx} * t.dy - Wide{s.dy} * t.dx > 0;
  });

  std::vector<int> order = projection_sorted(ps, fan.front());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  // since[i]: fan directions evaluated when the adjacency at slot i began.
  std::vector<int> since(static_cast<std::size_t>(n), 0);
  EdgeBits seen(n);
  int evaluated = 1;
  auto close = [&](int slot) {
    if (slot < 0 || slot + 1 >= n) return;
    const auto s = static_cast<std::size_t>(slot);
    if (evaluated > since[s]) seen.set(order[s], order[s + 1]);
    since[s] = evaluated;
  };

  auto same_dir = [](const Swap& s, const Swap& t) { return Wide{s.dx} * t.dy - Wide{s.dy} * t.dx == 0; };
  std::size_t next = 0;
  std::vector<Swap> batch;
  for (std::size_t k = 1; k < fan.size(); ++k) {
    while (next < swaps.size()) {
      const Swap& first = swaps[next];
      if (Wide{first.dx} * fan[k].dy() - Wide{first.dy} * fan[k].dx() < 0) break;
      // Collinear points swap at the same direction; apply the batch in
      // whatever order keeps each swap adjacent.
      batch.clear();
      for (; next < swaps.size() && same_dir(swaps[next], first); ++next) batch.push_back(swaps[next]);
      while (!batch.empty()) {
        std::size_t kept = 0;
        for (const Swap& s : batch) {
          const int pa = pos[static_cast<std::size_t>(s.a)];
          const int pb = pos[static_cast<std::size_t>(s.b)];
          if (pa - pb != 1 && pb - pa != 1) {
            batch[kept++] = s;
            continue;
          }
          const int lo = std::min(pa, pb);
          close(lo - 1);
          close(lo + 1);
          std::swap(order[static_cast<std::size_t>(lo)], order[static_cast<std::size_t>(lo + 1)]);
          pos[static_cast<std::size_t>(order[static_cast<std::size_t>(lo)])] = lo;
          pos[static_cast<std::size_t>(order[static_cast<std::size_t>(lo + 1)])] = lo + 1;
        }
        if (kept == batch.size()) throw NotFoundError("kinetic sweep met a non-adjacent swap");
        batch.resize(kept);
      }
    }
    ++evaluated;
  }
  for (int slot = 0; slot + 1 < n; ++slot) close(slot);
  return seen.missing();
}

Cover phase2_cover(const PointSet& ps, std::span<const Edge> residual) {
  Cover cover;
  cover.pointset_hash = pointset_hash(ps);
  std::vector<Edge> remaining(residual.begin(), residual.end());
  for (const Edge& e : remaining) {
    if (e.u < 0 || e.v >= ps.size() || e.u == e.v) throw InputError("residual edge out of range");
  }
  std::sort(remaining.begin(), remaining.end(), [&](const Edge& e, const Edge& f) {
    const Wide le = dist2(ps[e.u], ps[e.v]);
    const Wide lf = dist2(ps[f.u], ps[f.v]);
    if (le != lf) return le < lf;
    return e < f;
  });
  remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());

  std::vector<char> used(static_cast<std::size_t>(ps.size()), 0);
  while (!remaining.empty()) {
    std::vector<Edge> piece;
    std::vector<Edge> rest;
    rest.reserve(remaining.size());
    for (const Edge& e : remaining) {
      bool ok = !used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)];
      for (std::size_t i = 0; ok && i < piece.size(); ++i) {
        ok = !segments_cross(ps[e.u], ps[e.v], ps[piece[i].u], ps[piece[i].v]);
      }
      if (ok) {
        piece.push_back(e);
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
      } else {
        rest.push_back(e);
      }
    }
    for (const Edge& e : piece) used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
    cover.pieces.push_back(make_matching_piece(PieceKind::kPlaneMatching, std::move(piece)));
    remaining.swap(rest);
  }
  return cover;
}

double dense_beta(double alpha, double c) {
  return (8.0 * c + 4.0 * std::sqrt(2.0) * alpha) / (M_PI * alpha * alpha);
}

namespace {

// Calls visit(order, witness) for every full-fan direction.
template <typename Visit>
DenseStats dense_sweep(const PointSet& ps, double alpha, double c, Visit&& visit) {
  const int n = ps.size();
  DenseStats stats;
  stats.total_edges = pair_count(n);
  if (!(alpha > 0)) throw InputError("alpha must be positive");
  const DensityCheck density = density_check(ps, alpha);
  if (!density.dense) {
    std::ostringstream os;
    os << "point set is not alpha-dense: max/min distance ratio " << density.ratio << " exceeds alpha*sqrt(n) = "
       << alpha * std::sqrt(static_cast<double>(n));
    throw InputError(os.str());
  }
  if (n < 2) return stats;
  stats.directions = fan_size(n, FanMode::kFull, c);
  stats.budget = static_cast<int>(std::floor(dense_beta(alpha, c) * std::sqrt(static_cast<double>(n))));
  ProjectionSorter sorter(ps);
  for (const Direction& u : fan_directions(stats.directions, FanMode::kFull)) {
    const std::vector<int>& order = sorter.sort(u);
    visit(order, order_witness(ps, order, sorter, u), stats);
  }
  return stats;
}

}  // namespace

DenseStats dense_cover_stream(const PointSet& ps, double alpha, double c, const PathSink& sink) {
  const int n = ps.size();
  EdgeBits seen(std::max(n, 1));
  PathPiece path;
  DenseStats stats = dense_sweep(ps, alpha, c, [&](const std::vector<int>& order, const Direction& w, DenseStats& st) {
    for (int i = 1; i <= st.budget; ++i) {
      for (int j = 1; j <= i; ++j) {
        path.vertices.clear();
        for (int idx = j - 1; idx < n; idx += i) path.vertices.push_back(order[static_cast<std::size_t>(idx)]);
        if (path.vertices.size() < 2) continue;
        for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) seen.set(path.vertices[t], path.vertices[t + 1]);
        ++st.pieces;
        sink(path, w);
      }
    }
  });
  stats.covered_edges = n < 2 ? 0 : seen.count();
  return stats;
}

Cover dense_cover(const PointSet& ps, double alpha, double c, DenseStats* stats) {
  Cover cover;
  cover.pointset_hash = pointset_hash(ps);
  const DenseStats st = dense_cover_stream(ps, alpha, c, [&](const PathPiece& p, const Direction& w) {
    cover.pieces.push_back(make_path_piece(PieceKind::kMonotonePath, p.vertices, w));
  });
  if (stats) *stats = st;
  return cover;
}

DenseStats dense_coverage(const PointSet& ps, double alpha, double c) {
  const int n = ps.size();
  // Skip paths for skip i join exactly the pairs i positions apart, so the
  // covered set is every pair at most B positions apart. Marking it position
  // by position keeps each row of the bit matrix hot in cache.
  const std::size_t words = (static_cast<std::size_t>(std::max(n, 1)) + 63) / 64;
  std::vector<std::uint64_t> rows(words * static_cast<std::size_t>(std::max(n, 1)), 0);
  DenseStats stats = dense_sweep(ps, alpha, c, [&](const std::vector<int>& order, const Direction&, DenseStats& st) {
    for (int i = 1; i <= st.budget; ++i) st.pieces += static_cast<std::size_t>(std::max(0, std::min(i, n - i)));
    for (int p = 0; p < n; ++p) {
      std::uint64_t* row = rows.data() + static_cast<std::size_t>(order[static_cast<std::size_t>(p)]) * words;
      const int last = std::min(n - 1, p + st.budget);
      for (int q = p + 1; q <= last; ++q) {
        const auto w = static_cast<std::size_t>(order[static_cast<std::size_t>(q)]);
        row[w / 64] |= std::uint64_t{1} << (w % 64);
      }
    }
  });
  auto bit = [&](int r, int col) {
    return (rows[static_cast<std::size_t>(r) * words + static_cast<std::size_t>(col) / 64] >> (col % 64)) & 1u;
  };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) stats.covered_edges += bit(u, v) | bit(v, u);
  }
  return stats;
}

}  // namespace geocover
