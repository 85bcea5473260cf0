#include "geocover/bounds_lab.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "geocover/errors.hpp"
#include "geocover/pointgen.hpp"

namespace geocover {

namespace {

const std::vector<Group>& labels_of(const PointSet& ps) {
  if (!ps.groups || ps.groups->size() != ps.points.size()) throw InputError("point set has no group labels");
  return *ps.groups;
}

bool line_less(const Direction& a, const Direction& b) { return cross(a, b) > 0; }

}  // namespace

CriticalFan build_critical_fan(const PointSet& ps) {
  CriticalFan fan;
  const int n = ps.size();
  fan.critical.reserve(pair_count(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      fan.critical.push_back(Direction::from_to(ps[a], ps[b]).perp().line_canonical());
    }
  }
  std::sort(fan.critical.begin(), fan.critical.end(), line_less);
  fan.critical.erase(std::unique(fan.critical.begin(), fan.critical.end()), fan.critical.end());
  const std::size_t m = fan.critical.size();
  if (m == 1) fan.samples.push_back(fan.critical[0].perp());
  for (std::size_t i = 0; m > 1 && i < m; ++i) {
    fan.samples.push_back(i + 1 < m ? bisector(fan.critical[i], fan.critical[i + 1])
                                    : bisector(fan.critical[i], -fan.critical[0]));
  }
  return fan;
}

E0Path max_e0_on_monotone_path(const PointSet& ps, const Direction& u) {
  const auto& groups = labels_of(ps);
  const int n = ps.size();
  E0Path out;
  if (n == 0) return out;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dot(ps[a], u) < dot(ps[b], u); });
  for (int i = 1; i < n; ++i) {
    if (dot(ps[order[static_cast<std::size_t>(i)]], u) == dot(ps[order[static_cast<std::size_t>(i - 1)]], u)) {
      throw InputError("projection tie along " + u.str() + "; use a cell sample");
    }
  }
  // best[v]: most inter-group edges on an increasing path ending at v. The
  // best predecessor is the best vertex so far in the same group, or the
  // best in another group plus one edge.
  std::vector<int> best(static_cast<std::size_t>(n), 0);
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  std::array<int, 3> group_best{-1, -1, -1};  // vertex ids
  auto value = [&](int v) { return v < 0 ? -1 : best[static_cast<std::size_t>(v)]; };
  int top = order[0];
  for (int v : order) {
    const auto g = static_cast<std::size_t>(groups[static_cast<std::size_t>(v)]);
    int score = 0;
    int from = -1;
    if (group_best[g] >= 0 && value(group_best[g]) > score) {
      score = value(group_best[g]);
      from = group_best[g];
    }
    for (std::size_t h = 0; h < 3; ++h) {
      if (h == g || group_best[h] < 0) continue;
      if (value(group_best[h]) + 1 > score) {
        score = value(group_best[h]) + 1;
        from = group_best[h];
      }
    }
    best[static_cast<std::size_t>(v)] = score;
    pred[static_cast<std::size_t>(v)] = from;
    if (group_best[g] < 0 || score > value(group_best[g])) group_best[g] = v;
    if (score > value(top)) top = v;
  }
  out.count = value(top);
  std::vector<int> path;
  for (int v = top; v >= 0; v = pred[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  out.witness.vertices = std::move(path);
  return out;
}

E0Path brute_force_max_e0(const PointSet& ps) {
  const auto& groups = labels_of(ps);
  const int n = ps.size();
  if (n > 10) throw SizeGuardError("brute-force E0 maximum supports n <= 10");
  E0Path best;
  if (n > 0) best.witness.vertices = {0};
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<Direction> dirs;
  std::function<void(int)> grow = [&](int e0) {
    if (e0 > best.count) {
      best.count = e0;
      best.witness.vertices = seq;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      dirs.push_back(Direction::from_to(ps[seq.back()], ps[w]));
      if (monotonicity_interval(dirs)) {
        used[static_cast<std::size_t>(w)] = 1;
        seq.push_back(w);
        grow(e0 + (groups[static_cast<std::size_t>(w)] != groups[static_cast<std::size_t>(seq[seq.size() - 2])]));
        seq.pop_back();
        used[static_cast<std::size_t>(w)] = 0;
      }
      dirs.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    used[static_cast<std::size_t>(s)] = 1;
    seq.assign(1, s);
    grow(0);
    used[static_cast<std::size_t>(s)] = 0;
  }
  return best;
}

LowerBoundCertificate certify_lower_bound(const PointSet& ps) {
  labels_of(ps);
  LowerBoundCertificate cert;
  cert.n = ps.size();
  cert.e0_edges = e0_edge_count(ps);
  if (cert.n < 2) return cert;
  const CriticalFan fan = build_critical_fan(ps);
  bool first = true;
  for (const Direction& s : fan.samples) {
    for (const Direction& u : {s, -s}) {
      const E0Path r = max_e0_on_monotone_path(ps, u);
      ++cert.cells;
      ++cert.histogram[r.count];
      if (first || r.count > cert.max_e0) {
        cert.max_e0 = r.count;
        cert.witness = r.witness;
        cert.witness_direction = u;
        first = false;
      }
    }
  }
  if (cert.max_e0 > 0) {
    cert.bound = (cert.e0_edges + static_cast<std::size_t>(cert.max_e0) - 1) / static_cast<std::size_t>(cert.max_e0);
  }
  return cert;
}

ConditionReport classify_group_walk(const std::vector<Group>& vertex_groups, const std::array<Wide, 3>& diam2) {
  ConditionReport report;
  std::vector<Group> walk;
  for (Group g : vertex_groups) {
    if (walk.empty() || walk.back() != g) walk.push_back(g);
  }
  for (Group g : walk) report.walk.push_back(group_letter(g));

  // (i) no closed walk X -> Y -> Z -> X through all three groups.
  for (std::size_t i = 0; i + 3 < walk.size(); ++i) {
    if (walk[i] == walk[i + 3] && walk[i] != walk[i + 1] && walk[i] != walk[i + 2] && walk[i + 1] != walk[i + 2]) {
      report.no_triangle_cycle = false;
      report.violations.push_back("(i) cycle " + report.walk.substr(i, 4));
      break;
    }
  }

  // (ii) no two undirected group pairs each used in both orientations.
  std::set<std::pair<int, int>> types;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    types.emplace(static_cast<int>(walk[i]), static_cast<int>(walk[i + 1]));
  }
  int both_ways = 0;
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      if (types.count({x, y}) && types.count({y, x})) ++both_ways;
    }
  }
  if (both_ways >= 2) {
    report.no_two_reversed_types = false;
    report.violations.push_back("(ii) two edge types appear in both orientations");
  }

  // (iii) at most four edges between two groups; with four, the path starts
  // or ends in the larger group.
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      int edges = 0;
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const int a = static_cast<int>(walk[i]);
        const int b = static_cast<int>(walk[i + 1]);
        edges += (a == x && b == y) || (a == y && b == x);
      }
      const std::string pair{group_letter(static_cast<Group>(x)), group_letter(static_cast<Group>(y))};
      if (edges > 4) {
        report.pair_limits = false;
        report.violations.push_back("(iii) " + std::to_string(edges) + " edges between " + pair);
      } else if (edges == 4) {
        const auto big = static_cast<Group>(diam2[static_cast<std::size_t>(x)] >= diam2[static_cast<std::size_t>(y)] ? x : y);
        if (walk.front() != big && walk.back() != big) {
          report.pair_limits = false;
          report.violations.push_back("(iii) four edges between " + pair + " but no end in group " + group_letter(big));
        }
      }
    }
  }
  return report;
}

ConditionReport classify_path_conditions(const PointSet& ps, const PathPiece& path) {
  const auto& groups = labels_of(ps);
  if (path.vertices.size() >= 2 && !is_monotone_path(ps, path)) throw InputError("path is not monotone");
  std::vector<Group> seq;
  for (int v : path.vertices) {
    if (v < 0 || v >= ps.size()) throw InputError("path vertex out of range");
    seq.push_back(groups[static_cast<std::size_t>(v)]);
  }
  return classify_group_walk(seq, group_diameters2(ps));
}

}  // namespace geocover
