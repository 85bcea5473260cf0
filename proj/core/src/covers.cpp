#include "geocover/covers.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "geocover/errors.hpp"
#include "geocover/pointgen.hpp"

namespace geocover {

std::string to_string(PieceKind kind) {
  switch (kind) {
    case PieceKind::kMonotonePath: return "monotone_path";
    case PieceKind::kMonotoneMatching: return "monotone_matching";
    case PieceKind::kNoncrossingPath: return "noncrossing_path";
    case PieceKind::kPlaneMatching: return "plane_matching";
    case PieceKind::kZigzagPath: return "zigzag_path";
  }
  return "unknown";
}

PieceKind piece_kind_from_string(const std::string& name) {
  for (PieceKind k : {PieceKind::kMonotonePath, PieceKind::kMonotoneMatching, PieceKind::kNoncrossingPath,
                      PieceKind::kPlaneMatching, PieceKind::kZigzagPath}) {
    if (to_string(k) == name) return k;
  }
  throw InputError("unknown piece kind: " + name);
}

bool is_path_kind(PieceKind kind) {
  return kind == PieceKind::kMonotonePath || kind == PieceKind::kNoncrossingPath || kind == PieceKind::kZigzagPath;
}

std::vector<Edge> PathPiece::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back(edge(i));
  return out;
}

std::vector<Edge> Piece::edges() const {
  if (const PathPiece* p = path()) return p->edges();
  return matching()->edges;
}

Piece make_path_piece(PieceKind kind, std::vector<int> vertices, std::optional<Direction> witness) {
  Piece piece;
  piece.kind = kind;
  piece.shape = PathPiece{std::move(vertices)};
  piece.witness = witness;
  return piece;
}

Piece make_matching_piece(PieceKind kind, std::vector<Edge> edges, std::optional<Direction> witness) {
  Piece piece;
  piece.kind = kind;
  piece.shape = MatchingPiece{std::move(edges)};
  piece.witness = witness;
  return piece;
}

void Cover::append(Cover&& other) {
  const int offset = static_cast<int>(blocks.size());
  for (auto& b : other.blocks) blocks.push_back(b);
  for (auto& p : other.pieces) {
    if (p.block >= 0) p.block += offset;
    pieces.push_back(std::move(p));
  }
}

std::size_t VerificationReport::failed_pieces() const {
  return static_cast<std::size_t>(std::count_if(pieces.begin(), pieces.end(), [](const PieceVerdict& v) { return !v.pass; }));
}

void validate_path(const PointSet& ps, const PathPiece& p) {
  if (p.vertices.size() < 2) throw InputError("path needs at least 2 vertices");
  std::vector<int> seen(p.vertices);
  for (int v : seen) {
    if (v < 0 || v >= ps.size()) throw InputError("path vertex id out of range: " + std::to_string(v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InputError("path repeats a vertex");
}

void validate_matching(const PointSet& ps, const MatchingPiece& m) {
  std::vector<int> seen;
  seen.reserve(2 * m.edges.size());
  for (const Edge& e : m.edges) {
    if (e.u == e.v) throw InputError("matching edge is a loop");
    for (int v : {e.u, e.v}) {
      if (v < 0 || v >= ps.size()) throw InputError("matching vertex id out of range: " + std::to_string(v));
      seen.push_back(v);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InputError("matching edges share a vertex");
}

std::optional<AngularInterval> is_monotone_path(const PointSet& ps, const PathPiece& p) {
  validate_path(ps, p);
  std::vector<Direction> dirs;
  dirs.reserve(p.edge_count());
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    dirs.push_back(Direction::from_to(ps[p.vertices[i]], ps[p.vertices[i + 1]]));
  }
  return monotonicity_interval(dirs);
}

namespace {

struct Interval {
  Wide lo;
  Wide hi;
};

Interval project(const PointSet& ps, const Edge& e, const Direction& u) {
  const Wide a = dot(ps[e.u], u);
  const Wide b = dot(ps[e.v], u);
  return a < b ? Interval{a, b} : Interval{b, a};
}

bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

bool pair_separated(const PointSet& ps, const Edge& e, const Edge& f, const Direction& u) {
  return disjoint(project(ps, e, u), project(ps, f, u));
}

// Angular order on canonical line directions (angles in [0, pi)).
bool line_less(const Direction& a, const Direction& b) { return cross(a, b) > 0; }

// Interior sample of the cell following crit[i] on the half circle.
Direction cell_sample(const std::vector<Direction>& crit, std::size_t i) {
  if (crit.size() == 1) return crit[0].perp();
  if (i + 1 < crit.size()) return bisector(crit[i], crit[i + 1]);
  return bisector(crit.back(), -crit.front());
}

}  // namespace

bool matching_monotone_in(const PointSet& ps, const MatchingPiece& m, const Direction& u) {
  std::vector<Interval> iv;
  iv.reserve(m.edges.size());
  for (const Edge& e : m.edges) iv.push_back(project(ps, e, u));
  std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < iv.size(); ++i) {
    if (!(iv[i - 1].hi < iv[i].lo)) return false;
  }
  return true;
}

std::optional<Direction> is_monotone_matching(const PointSet& ps, const MatchingPiece& m) {
  validate_matching(ps, m);
  const std::size_t count = m.edges.size();
  if (count == 0) return Direction(1, 0);
  if (count == 1) return Direction::from_to(ps[m.edges[0].u], ps[m.edges[0].v]);

  // Critical directions: u perpendicular to a segment joining endpoints of
  // two different edges. Between consecutive critical directions the relative
  // order of all endpoints is constant.
  auto local_critical = [&](const Edge& e, const Edge& f) {
    std::vector<Direction> crit;
    for (int a : {e.u, e.v}) {
      for (int b : {f.u, f.v}) crit.push_back(Direction::from_to(ps[a], ps[b]).perp().line_canonical());
    }
    std::sort(crit.begin(), crit.end(), line_less);
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    return crit;
  };

  std::vector<Direction> global;
  global.reserve(4 * count * (count - 1) / 2);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      for (const Direction& d : local_critical(m.edges[i], m.edges[j])) global.push_back(d);
    }
  }
  std::sort(global.begin(), global.end(), line_less);
  global.erase(std::unique(global.begin(), global.end()), global.end());
  const std::size_t cells = global.size();
  auto index_of = [&](const Direction& d) {
    return static_cast<std::size_t>(std::lower_bound(global.begin(), global.end(), d, line_less) - global.begin());
  };

  // coverage[c] counts edge pairs whose projections are disjoint in cell c.
  std::vector<std::int64_t> diff(cells + 1, 0);
  auto add_range = [&](std::size_t from, std::size_t to) {  // cells [from, to)
    if (from < to) {
      ++diff[from];
      --diff[to];
    }
  };
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      ++pairs;
      const auto crit = local_critical(m.edges[i], m.edges[j]);
      bool any = false;
      for (std::size_t c = 0; c < crit.size(); ++c) {
        if (!pair_separated(ps, m.edges[i], m.edges[j], cell_sample(crit, c))) continue;
        any = true;
        const std::size_t from = index_of(crit[c]);
        if (crit.size() == 1) {
          add_range(0, cells);
        } else if (c + 1 < crit.size()) {
          add_range(from, index_of(crit[c + 1]));
        } else {
          add_range(from, cells);
          add_range(0, index_of(crit.front()));
        }
      }
      if (!any) return std::nullopt;
    }
  }
  std::int64_t running = 0;
  for (std::size_t c = 0; c < cells; ++c) {
    running += diff[c];
    if (running == static_cast<std::int64_t>(pairs)) {
      const Direction u = cell_sample(global, c);
      if (matching_monotone_in(ps, m, u)) return u;
    }
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kSweepMinSegments = 24;

struct DegenerateSweep {};

}  // namespace

std::optional<bool> sweep_any_crossing(const PointSet& ps, std::span<const Edge> segments) {
  struct Seg {
    int l;
    int r;
  };
  const std::size_t m = segments.size();
  std::vector<Seg> seg(m);
  std::vector<int> verts;
  verts.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    int a = segments[i].u, b = segments[i].v;
    if (ps[a].x == ps[b].x) return std::nullopt;
    if (ps[a].x > ps[b].x) std::swap(a, b);
    seg[i] = Seg{a, b};
    verts.push_back(a);
    verts.push_back(b);
  }
  std::sort(verts.begin(), verts.end(), [&](int a, int b) { return ps[a].x != ps[b].x ? ps[a].x < ps[b].x : a < b; });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    if (ps[verts[i]].x == ps[verts[i + 1]].x) return std::nullopt;
  }

  Coord sweep_x = 0;
  // Sign of y_i - y_j on the vertical line x = sweep_x.
  auto height_sign = [&](int i, int j) {
    const Point& li = ps[seg[static_cast<std::size_t>(i)].l];
    const Point& ri = ps[seg[static_cast<std::size_t>(i)].r];
    const Point& lj = ps[seg[static_cast<std::size_t>(j)].l];
    const Point& rj = ps[seg[static_cast<std::size_t>(j)].r];
    const Wide dxi = ri.x - li.x, dxj = rj.x - lj.x;
    const Wide yi = Wide{li.y} * dxi + Wide{ri.y - li.y} * (sweep_x - li.x);  // y_i * dxi
    const Wide yj = Wide{lj.y} * dxj + Wide{rj.y - lj.y} * (sweep_x - lj.x);
    const Wide diff = yi * dxj - yj * dxi;
    return (diff > 0) - (diff < 0);
  };
  auto below = [&](int i, int j) {
    if (i == j) return false;
    const int s = height_sign(i, j);
    if (s != 0) return s < 0;
    const Seg& a = seg[static_cast<std::size_t>(i)];
    const Seg& b = seg[static_cast<std::size_t>(j)];
    // Two segments leaving the same vertex: order by slope.
    if (a.l != b.l || ps[a.l].x != sweep_x) throw DegenerateSweep{};
    const int o = orient(ps[a.l], ps[a.r], ps[b.r]);
    if (o == 0) throw DegenerateSweep{};
    return o > 0;
  };
  auto cross = [&](int i, int j) {
    const Seg& a = seg[static_cast<std::size_t>(i)];
    const Seg& b = seg[static_cast<std::size_t>(j)];
    int shared = -1, p = -1, q = -1;
    if (a.l == b.l || a.l == b.r) shared = a.l, p = a.r, q = a.l == b.l ? b.r : b.l;
    else if (a.r == b.l || a.r == b.r) shared = a.r, p = a.l, q = a.r == b.l ? b.r : b.l;
    if (shared >= 0) {
      if (p == q || orient(ps[shared], ps[p], ps[q]) == 0) throw DegenerateSweep{};
      return false;
    }
    const int o1 = orient(ps[a.l], ps[a.r], ps[b.l]);
    const int o2 = orient(ps[a.l], ps[a.r], ps[b.r]);
    const int o3 = orient(ps[b.l], ps[b.r], ps[a.l]);
    const int o4 = orient(ps[b.l], ps[b.r], ps[a.r]);
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) throw DegenerateSweep{};
    return o1 * o2 < 0 && o3 * o4 < 0;
  };

  std::vector<std::vector<int>> starts(static_cast<std::size_t>(ps.size()));
  std::vector<std::vector<int>> ends(static_cast<std::size_t>(ps.size()));
  for (std::size_t i = 0; i < m; ++i) {
    starts[static_cast<std::size_t>(seg[i].l)].push_back(static_cast<int>(i));
    ends[static_cast<std::size_t>(seg[i].r)].push_back(static_cast<int>(i));
  }
  using Status = std::set<int, decltype(below)>;
  Status status(below);
  std::vector<Status::iterator> where(m, status.end());
  try {
    for (int v : verts) {
      sweep_x = ps[v].x;
      for (int i : ends[static_cast<std::size_t>(v)]) {
        auto it = where[static_cast<std::size_t>(i)];
        auto next = std::next(it);
        if (it != status.begin() && next != status.end() && cross(*std::prev(it), *next)) return true;
        status.erase(it);
      }
      for (int i : starts[static_cast<std::size_t>(v)]) {
        const auto [it, fresh] = status.insert(i);
        if (!fresh) throw DegenerateSweep{};
        where[static_cast<std::size_t>(i)] = it;
        if (it != status.begin() && cross(*std::prev(it), i)) return true;
        if (auto next = std::next(it); next != status.end() && cross(i, *next)) return true;
      }
    }
  } catch (const DegenerateSweep&) {
    return std::nullopt;
  }
  return false;
}

NoncrossingResult is_noncrossing(const PointSet& ps, const PathPiece& p) {
  validate_path(ps, p);
  const std::size_t edges = p.edge_count();
  if (edges >= kSweepMinSegments) {
    const std::vector<Edge> segs = p.edges();
    if (sweep_any_crossing(ps, segs) == false) return {};
  }
  for (std::size_t i = 0; i < edges; ++i) {
    for (std::size_t j = i + 2; j < edges; ++j) {
      const int a = p.vertices[i], b = p.vertices[i + 1];
      const int c = p.vertices[j], d = p.vertices[j + 1];
      if (segments_cross(ps[a], ps[b], ps[c], ps[d])) {
        return NoncrossingResult{false, CrossingWitness{Edge(a, b), Edge(c, d)}};
      }
    }
  }
  return {};
}

NoncrossingResult is_noncrossing(const PointSet& ps, const MatchingPiece& m) {
  validate_matching(ps, m);
  if (m.edges.size() >= kSweepMinSegments && sweep_any_crossing(ps, m.edges) == false) return {};
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
      const Edge& e = m.edges[i];
      const Edge& f = m.edges[j];
      if (segments_cross(ps[e.u], ps[e.v], ps[f.u], ps[f.v])) {
        return NoncrossingResult{false, CrossingWitness{e, f}};
      }
    }
  }
  return {};
}

bool is_zigzag_path(const PointSet& ps, const PathPiece& p) {
  validate_path(ps, p);
  const auto& v = p.vertices;
  for (std::size_t i = 0; i + 3 < v.size(); ++i) {
    const int s1 = orient(ps[v[i + 1]], ps[v[i + 2]], ps[v[i]]);
    const int s2 = orient(ps[v[i + 1]], ps[v[i + 2]], ps[v[i + 3]]);
    if (s1 * s2 >= 0) return false;
  }
  return true;
}

PieceVerdict verify_piece(const PointSet& ps, const Piece& piece, std::size_t index) {
  PieceVerdict verdict;
  verdict.index = index;
  auto fail = [&verdict](std::string why) {
    verdict.pass = false;
    verdict.failure = std::move(why);
    return verdict;
  };
  try {
    const PathPiece* path = piece.path();
    const MatchingPiece* matching = piece.matching();
    if (is_path_kind(piece.kind) != (path != nullptr)) return fail("piece shape does not match kind " + to_string(piece.kind));
    switch (piece.kind) {
      case PieceKind::kMonotonePath: {
        validate_path(ps, *path);
        if (piece.witness) {
          bool ok = true;
          for (std::size_t i = 0; ok && i + 1 < path->vertices.size(); ++i) {
            ok = dot(Direction::from_to(ps[path->vertices[i]], ps[path->vertices[i + 1]]), *piece.witness) > 0;
          }
          if (ok) {
            verdict.witness = piece.witness;
            return verdict;
          }
        }
        const auto interval = is_monotone_path(ps, *path);
        if (!interval) return fail("path is not monotone in any direction");
        verdict.witness = interval->witness();
        return verdict;
      }
      case PieceKind::kMonotoneMatching: {
        validate_matching(ps, *matching);
        if (piece.witness && matching_monotone_in(ps, *matching, *piece.witness)) {
          verdict.witness = piece.witness;
          return verdict;
        }
        const auto w = is_monotone_matching(ps, *matching);
        if (!w) return fail("matching is not monotone in any direction");
        verdict.witness = w;
        return verdict;
      }
      case PieceKind::kNoncrossingPath: {
        const auto r = is_noncrossing(ps, *path);
        if (!r.ok) {
          verdict.crossing = r.crossing;
          return fail("path edges cross");
        }
        return verdict;
      }
      case PieceKind::kPlaneMatching: {
        const auto r = is_noncrossing(ps, *matching);
        if (!r.ok) {
          verdict.crossing = r.crossing;
          return fail("matching edges cross");
        }
        return verdict;
      }
      case PieceKind::kZigzagPath: {
        if (!is_zigzag_path(ps, *path)) return fail("path is not zig-zag");
        const auto r = is_noncrossing(ps, *path);
        if (!r.ok) {
          verdict.crossing = r.crossing;
          return fail("zig-zag path edges cross");
        }
        return verdict;
      }
    }
  } catch (const Error& e) {
    return fail(std::string("invalid piece: ") + e.what());
  }
  return fail("unknown piece kind");
}

VerificationReport check_coverage(const PointSet& ps, const Cover& cover) {
  VerificationReport report;
  const int n = ps.size();
  report.n = n;
  report.total_edges = pair_count(n);
  std::vector<std::uint64_t> seen((report.total_edges + 63) / 64, 0);
  report.pieces.reserve(cover.pieces.size());
  for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
    const Piece& piece = cover.pieces[i];
    PieceVerdict verdict = verify_piece(ps, piece, i);
    ++report.counts[piece.kind];
    if (verdict.pass) {
      for (const Edge& e : piece.edges()) {
        const std::size_t idx = edge_index(n, e);
        seen[idx / 64] |= std::uint64_t{1} << (idx % 64);
      }
    } else {
      report.pass = false;
    }
    report.pieces.push_back(std::move(verdict));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::size_t idx = edge_index(n, Edge(u, v));
      if (seen[idx / 64] >> (idx % 64) & 1u) {
        ++report.covered_edges;
      } else {
        report.uncovered.emplace_back(u, v);
      }
    }
  }
  if (!report.uncovered.empty()) report.pass = false;
  return report;
}

Cover paths_to_matchings(const Cover& cover) {
  Cover out;
  out.pointset_hash = cover.pointset_hash;
  out.blocks = cover.blocks;
  for (const Piece& piece : cover.pieces) {
    const PathPiece* path = piece.path();
    if (path == nullptr) {
      out.pieces.push_back(piece);
      continue;
    }
    const PieceKind kind =
        piece.kind == PieceKind::kMonotonePath ? PieceKind::kMonotoneMatching : PieceKind::kPlaneMatching;
    for (std::size_t parity = 0; parity < 2; ++parity) {
      std::vector<Edge> edges;
      for (std::size_t i = parity; i < path->edge_count(); i += 2) edges.push_back(path->edge(i));
      if (edges.empty()) continue;
      Piece m = make_matching_piece(kind, std::move(edges), kind == PieceKind::kMonotoneMatching ? piece.witness : std::nullopt);
      m.block = piece.block;
      out.pieces.push_back(std::move(m));
    }
  }
  return out;
}

Cover convex_matching_decomposition(const PointSet& ps) {
  const int n = ps.size();
  if (n < 3 || !is_convex_hull_order(ps)) {
    throw InputError("convex_matching_decomposition: points are not in convex hull order");
  }
  Cover cover;
  cover.pointset_hash = pointset_hash(ps);
  for (int c = 0; c < n; ++c) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      const int j = ((c - i) % n + n) % n;
      if (i < j) edges.emplace_back(i, j);
    }
    cover.pieces.push_back(make_matching_piece(PieceKind::kPlaneMatching, std::move(edges)));
  }
  return cover;
}

std::vector<PathPiece> pair_edges_into_paths(int n, const std::vector<Edge>& edges) {
  const std::size_t m = edges.size();
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m; ++i) {
    adj[static_cast<std::size_t>(edges[i].u)].emplace_back(edges[i].v, i);
    adj[static_cast<std::size_t>(edges[i].v)].emplace_back(edges[i].u, i);
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(static_cast<std::size_t>(n), kNone);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> preorder;
  preorder.reserve(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (visited[static_cast<std::size_t>(root)] || adj[static_cast<std::size_t>(root)].empty()) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    visited[static_cast<std::size_t>(root)] = 1;
    preorder.push_back(root);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nbrs = adj[static_cast<std::size_t>(v)];
      if (next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const auto [w, eid] = nbrs[next++];
      if (visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = 1;
      parent_edge[static_cast<std::size_t>(w)] = eid;
      preorder.push_back(w);
      stack.emplace_back(w, 0);
    }
  }

  // Children are handled before parents, so when a vertex is processed every
  // unused incident edge except its parent edge can be paired through it.
  std::vector<char> used(m, 0);
  std::vector<PathPiece> out;
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const int v = *it;
    const std::size_t pe = parent_edge[static_cast<std::size_t>(v)];
    std::vector<std::pair<int, std::size_t>> open;
    for (const auto& [w, eid] : adj[static_cast<std::size_t>(v)]) {
      if (!used[eid] && eid != pe) open.emplace_back(w, eid);
    }
    if (open.size() % 2 == 1 && pe != kNone) {
      const Edge& e = edges[pe];
      open.emplace_back(e.u == v ? e.v : e.u, pe);
    }
    std::size_t i = 0;
    for (; i + 1 < open.size(); i += 2) {
      used[open[i].second] = used[open[i + 1].second] = 1;
      out.push_back(PathPiece{{open[i].first, v, open[i + 1].first}});
    }
    if (i < open.size()) {
      used[open[i].second] = 1;
      out.push_back(PathPiece{{v, open[i].first}});
    }
  }
  return out;
}

}  // namespace geocover
