#include "geocover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_map>

#include "geocover/bounds_lab.hpp"
#include "geocover/errors.hpp"
#include "geocover/sweep_cover.hpp"

namespace geocover {

namespace {

std::vector<int> canonical(std::vector<int> v) {
  if (v.front() > v.back()) std::reverse(v.begin(), v.end());
  return v;
}

std::uint32_t edge_mask(int n, const std::vector<Edge>& edges) {
  std::uint32_t m = 0;
  for (const Edge& e : edges) m |= 1u << edge_index(n, e);
  return m;
}

std::vector<std::vector<int>> all_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void()> grow = [&]() {
    if (seq.size() >= 2 && seq.front() < seq.back()) out.push_back(seq);
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      seq.push_back(w);
      grow();
      seq.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  grow();
  return out;
}

std::vector<std::vector<Edge>> all_matchings(int n) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> cur;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // Edges are added in increasing order so each matching appears once.
  std::function<void(int)> grow = [&](int from) {
    if (!cur.empty()) out.push_back(cur);
    for (int idx = from; idx < static_cast<int>(pair_count(n)); ++idx) {
      int u = 0;
      int rest = idx;
      while (rest >= n - 1 - u) {
        rest -= n - 1 - u;
        ++u;
      }
      const int v = u + 1 + rest;
      if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
      cur.emplace_back(u, v);
      grow(idx + 1);
      cur.pop_back();
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
    }
  };
  grow(0);
  return out;
}

}  // namespace

std::vector<PathPiece> enumerate_monotone_paths(const PointSet& ps) {
  const int n = ps.size();
  if (n > kEnumerateLimit) throw SizeGuardError("monotone path enumeration supports n <= " + std::to_string(kEnumerateLimit));
  std::set<std::vector<int>> found;
  if (n >= 2) {
    const CriticalFan fan = build_critical_fan(ps);
    for (const Direction& s : fan.samples) {
      for (const Direction& u : {s, -s}) {
        const std::vector<int> order = projection_sorted(ps, u);
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
          if (std::popcount(subset) < 2) continue;
          std::vector<int> seq;
          for (int i = 0; i < n; ++i) {
            if ((subset >> i) & 1u) seq.push_back(order[static_cast<std::size_t>(i)]);
          }
          found.insert(canonical(std::move(seq)));
        }
      }
    }
  }
  std::vector<PathPiece> out;
  out.reserve(found.size());
  for (const auto& v : found) out.push_back(PathPiece{v});
  return out;
}

OracleResult min_cover(const PointSet& ps, PieceKind kind) {
  const int n = ps.size();
  OracleResult result;
  result.kind = kind;
  result.cover.pointset_hash = pointset_hash(ps);

  struct Candidate {
    std::uint32_t mask;
    Piece piece;
  };
  std::vector<Candidate> cands;
  switch (kind) {
    case PieceKind::kMonotonePath: {
      if (n > kMonotoneOracleLimit) throw SizeGuardError("monotone oracle supports n <= " + std::to_string(kMonotoneOracleLimit));
      for (const PathPiece& p : enumerate_monotone_paths(ps)) {
        const auto interval = is_monotone_path(ps, p);
        cands.push_back({edge_mask(n, p.edges()), make_path_piece(kind, p.vertices, interval->witness())});
      }
      break;
    }
    case PieceKind::kNoncrossingPath: {
      if (n > kOtherOracleLimit) throw SizeGuardError("noncrossing path oracle supports n <= " + std::to_string(kOtherOracleLimit));
      for (auto& seq : all_sequences(n)) {
        PathPiece p{seq};
        if (is_noncrossing(ps, p).ok) cands.push_back({edge_mask(n, p.edges()), make_path_piece(kind, std::move(seq))});
      }
      break;
    }
    case PieceKind::kPlaneMatching: {
      if (n > kOtherOracleLimit) throw SizeGuardError("plane matching oracle supports n <= " + std::to_string(kOtherOracleLimit));
      for (auto& edges : all_matchings(n)) {
        if (is_noncrossing(ps, MatchingPiece{edges}).ok) {
          const std::uint32_t m = edge_mask(n, edges);
          cands.push_back({m, make_matching_piece(kind, std::move(edges))});
        }
      }
      break;
    }
    default:
      throw InputError("oracle does not support piece kind " + to_string(kind));
  }

  // Keep one candidate per edge set, then drop those whose edge set is a
  // proper subset of another's: an optimal cover never needs them.
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    const int pa = std::popcount(a.mask);
    const int pb = std::popcount(b.mask);
    return pa != pb ? pa > pb : a.mask < b.mask;
  });
  cands.erase(std::unique(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.mask == b.mask; }),
              cands.end());
  std::vector<Candidate> maximal;
  for (const Candidate& c : cands) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const Candidate& m) { return (c.mask & m.mask) == c.mask; });
    if (!dominated) maximal.push_back(c);
  }
  result.candidates = maximal.size();

  const std::uint32_t all = pair_count(n) == 32 ? ~0u : ((1u << pair_count(n)) - 1);
  if (all == 0) return result;
  const int max_size = maximal.empty() ? 1 : std::popcount(maximal.front().mask);

  std::vector<std::vector<int>> by_edge(pair_count(n));
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::uint32_t m = maximal[i].mask; m; m &= m - 1) by_edge[static_cast<std::size_t>(std::countr_zero(m))].push_back(static_cast<int>(i));
  }

  // Iterative deepening; failed[mask] is the largest budget known to fail.
  std::unordered_map<std::uint32_t, int> failed;
  std::vector<int> chosen;
  std::function<bool(std::uint32_t, int)> search = [&](std::uint32_t covered, int budget) -> bool {
    ++result.nodes;
    if (covered == all) return true;
    const int open = std::popcount(all & ~covered);
    if (budget * max_size < open) return false;
    if (auto it = failed.find(covered); it != failed.end() && it->second >= budget) return false;
    const int edge = std::countr_zero(all & ~covered);
    for (int c : by_edge[static_cast<std::size_t>(edge)]) {
      chosen.push_back(c);
      if (search(covered | maximal[static_cast<std::size_t>(c)].mask, budget - 1)) return true;
      chosen.pop_back();
    }
    auto& slot = failed[covered];
    slot = std::max(slot, budget);
    return false;
  };
  const int lower = (static_cast<int>(pair_count(n)) + max_size - 1) / max_size;
  for (int budget = lower;; ++budget) {
    chosen.clear();
    if (search(0, budget)) {
      result.optimum = budget == 0 ? 0 : static_cast<int>(chosen.size());
      break;
    }
  }
  for (int c : chosen) result.cover.pieces.push_back(maximal[static_cast<std::size_t>(c)].piece);
  return result;
}

}  // namespace geocover
