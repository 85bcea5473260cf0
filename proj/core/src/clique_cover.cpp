#include "geocover/clique_cover.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "geocover/errors.hpp"
#include "geocover/rng.hpp"

namespace geocover {

namespace {

// The fifteen pairs (i, j), i < j, of six local indices, and their positions.
struct K6Edges {
  std::array<std::array<int, 2>, 15> pairs{};
  std::array<std::array<int, 6>, 6> index{};

  K6Edges() {
    int t = 0;
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        pairs[static_cast<std::size_t>(t)] = {i, j};
        index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
        index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = t;
        ++t;
      }
    }
  }
};

const K6Edges& k6_edges() {
  static const K6Edges edges;
  return edges;
}

struct LocalPath {
  std::array<int, 4> v;
  std::uint16_t mask;  // bits of the three edges
};

// All 3-edge zig-zag paths on six points, one orientation each.
std::vector<LocalPath> zigzag_candidates(const std::array<Point, 6>& pts) {
  const K6Edges& e = k6_edges();
  std::vector<LocalPath> out;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) {
        for (int d = 0; d < 6; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (a > d) continue;  // keep one of the two orientations
          const int s1 = orient(pts[static_cast<std::size_t>(b)], pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(a)]);
          const int s2 = orient(pts[static_cast<std::size_t>(b)], pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(d)]);
          if (s1 * s2 >= 0) continue;
          const auto bit = [&](int x, int y) {
            return static_cast<std::uint16_t>(1u << e.index[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
          };
          out.push_back(LocalPath{{a, b, c, d}, static_cast<std::uint16_t>(bit(a, b) | bit(b, c) | bit(c, d))});
        }
      }
    }
  }
  return out;
}

std::array<Point, 6> gather(const PointSet& ps, const std::array<int, 6>& ids) {
  std::array<Point, 6> pts{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (ids[i] < 0 || ids[i] >= ps.size()) throw InputError("K6 id out of range: " + std::to_string(ids[i]));
    for (std::size_t j = 0; j < i; ++j) {
      if (ids[i] == ids[j]) throw InputError("K6 ids repeat");
    }
    pts[i] = ps[ids[i]];
  }
  return pts;
}

// Exact cover of the 15 edges; stop() returns true to end the search.
void decompose(const std::vector<LocalPath>& cands, std::uint16_t covered, std::vector<int>& chosen,
               const std::function<bool(const std::vector<int>&)>& found, bool& done) {
  if (done) return;
  if (covered == 0x7fff) {
    done = found(chosen);
    return;
  }
  const int lowest = std::countr_one(covered);
  for (std::size_t i = 0; i < cands.size() && !done; ++i) {
    const std::uint16_t m = cands[i].mask;
    if (!((m >> lowest) & 1u) || (m & covered)) continue;
    chosen.push_back(static_cast<int>(i));
    decompose(cands, static_cast<std::uint16_t>(covered | m), chosen, found, done);
    chosen.pop_back();
  }
}

}  // namespace

K6Block k6_zigzag_decomposition(const PointSet& ps, const std::array<int, 6>& ids) {
  const auto pts = gather(ps, ids);
  const auto cands = zigzag_candidates(pts);
  K6Block block;
  block.ids = ids;
  std::vector<int> chosen;
  bool done = false;
  decompose(cands, 0, chosen, [&](const std::vector<int>& sol) {
    for (std::size_t p = 0; p < 5; ++p) {
      const auto& v = cands[static_cast<std::size_t>(sol[p])].v;
      block.paths[p].vertices.clear();
      for (int local : v) block.paths[p].vertices.push_back(ids[static_cast<std::size_t>(local)]);
    }
    return true;
  }, done);
  if (!done) throw NotFoundError("no zig-zag decomposition of K6; input not in general position?");
  return block;
}

std::size_t count_k6_zigzag_decompositions(const PointSet& ps, const std::array<int, 6>& ids) {
  const auto cands = zigzag_candidates(gather(ps, ids));
  std::size_t count = 0;
  std::vector<int> chosen;
  bool done = false;
  decompose(cands, 0, chosen, [&](const std::vector<int>&) {
    ++count;
    return false;
  }, done);
  return count;
}

namespace {

struct Relabelings {
  // For permutation p and target triple t: source triple index and whether
  // the orientation flips.
  std::vector<std::array<std::uint8_t, 20>> source;
  std::vector<std::uint32_t> flip;
  std::array<std::array<int, 3>, 20> triples{};
};

const Relabelings& relabelings() {
  static const Relabelings r = [] {
    Relabelings out;
    std::array<std::array<std::array<int, 6>, 6>, 6> tri_index{};
    int t = 0;
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        for (int k = j + 1; k < 6; ++k) {
          out.triples[static_cast<std::size_t>(t)] = {i, j, k};
          tri_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = t;
          ++t;
        }
      }
    }
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do {
      std::array<std::uint8_t, 20> src{};
      std::uint32_t flips = 0;
      for (std::size_t tt = 0; tt < 20; ++tt) {
        std::array<int, 3> img{perm[static_cast<std::size_t>(out.triples[tt][0])],
                               perm[static_cast<std::size_t>(out.triples[tt][1])],
                               perm[static_cast<std::size_t>(out.triples[tt][2])]};
        int inversions = 0;
        for (int a = 0; a < 3; ++a) {
          for (int b = a + 1; b < 3; ++b) inversions += img[static_cast<std::size_t>(a)] > img[static_cast<std::size_t>(b)];
        }
        std::sort(img.begin(), img.end());
        src[tt] = static_cast<std::uint8_t>(
            tri_index[static_cast<std::size_t>(img[0])][static_cast<std::size_t>(img[1])][static_cast<std::size_t>(img[2])]);
        if (inversions % 2) flips |= 1u << tt;
      }
      out.source.push_back(src);
      out.flip.push_back(flips);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return r;
}

}  // namespace

OrderTypeSignature order_type_signature(const std::array<Point, 6>& pts) {
  const Relabelings& r = relabelings();
  std::uint32_t ccw = 0;
  for (std::size_t t = 0; t < 20; ++t) {
    const auto& tr = r.triples[t];
    const int s = orient(pts[static_cast<std::size_t>(tr[0])], pts[static_cast<std::size_t>(tr[1])],
                         pts[static_cast<std::size_t>(tr[2])]);
    if (s == 0) throw InputError("order type needs six points in general position");
    if (s > 0) ccw |= 1u << t;
  }
  constexpr std::uint32_t kAll = (1u << 20) - 1;
  std::uint32_t best = kAll;
  for (std::size_t p = 0; p < r.source.size(); ++p) {
    std::uint32_t sig = 0;
    for (std::size_t t = 0; t < 20; ++t) sig |= ((ccw >> r.source[p][t]) & 1u) << t;
    sig ^= r.flip[p];
    best = std::min({best, sig, sig ^ kAll});
  }
  return best;
}

std::optional<std::string> k6_design_obstruction(int n) {
  if (n < 6) return "K6 decomposition needs n >= 6";
  if ((n - 1) % 5 != 0) return "5 does not divide n-1 = " + std::to_string(n - 1);
  const long long edges = static_cast<long long>(n) * (n - 1) / 2;
  if (edges % 15 != 0) return "15 does not divide C(n,2) = " + std::to_string(edges);
  const long long blocks = edges / 15;
  if (blocks > 1 && blocks < n) {
    return "Fisher's inequality fails: " + std::to_string(blocks) + " blocks < " + std::to_string(n) + " points";
  }
  return std::nullopt;
}

std::optional<std::vector<std::array<int, 6>>> search_k6_design(int n, std::uint64_t node_limit) {
  if (n < 6 || n > 32) throw SizeGuardError("exact K6 search supports 6 <= n <= 32");
  // unused[v]: bit w set while edge vw is not yet in a block.
  std::vector<std::uint32_t> unused(static_cast<std::size_t>(n));
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  for (int v = 0; v < n; ++v) unused[static_cast<std::size_t>(v)] = all & ~(1u << v);
  std::vector<std::array<int, 6>> blocks;
  std::uint64_t nodes = 0;

  auto toggle = [&](const std::array<int, 6>& b) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        if (i != j) unused[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])] ^= 1u << b[static_cast<std::size_t>(j)];
      }
    }
  };

  std::function<bool()> solve = [&]() -> bool {
    if (++nodes > node_limit) throw SizeGuardError("exact K6 search exceeded its node budget");
    int u = 0;
    while (u < n && unused[static_cast<std::size_t>(u)] == 0) ++u;
    if (u == n) return true;
    const int v = std::countr_zero(unused[static_cast<std::size_t>(u)]);
    const std::uint32_t cand0 = unused[static_cast<std::size_t>(u)] & unused[static_cast<std::size_t>(v)];
    std::array<int, 6> block{u, v, 0, 0, 0, 0};
    std::function<bool(std::uint32_t, int)> extend = [&](std::uint32_t cand, int depth) -> bool {
      if (depth == 6) {
        toggle(block);
        blocks.push_back(block);
        if (solve()) return true;
        blocks.pop_back();
        toggle(block);
        return false;
      }
      while (cand) {
        const int w = std::countr_zero(cand);
        cand &= cand - 1;
        block[static_cast<std::size_t>(depth)] = w;
        if (extend(cand & unused[static_cast<std::size_t>(w)], depth + 1)) return true;
      }
      return false;
    };
    return extend(cand0, 2);
  };
  if (!solve()) return std::nullopt;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<std::array<int, 6>> projective_plane_blocks() {
  constexpr int q = 5;
  // Points of PG(2,5): nonzero vectors of GF(5)^3 whose first nonzero
  // coordinate is 1. Lines use the same representatives; incidence is a zero
  // dot product.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const std::array<int, 3> v{a, b, c};
        const auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (first != v.end() && *first == 1) reps.push_back(v);
      }
    }
  }
  std::vector<std::array<int, 6>> blocks;
  for (const auto& line : reps) {
    std::array<int, 6> block{};
    std::size_t k = 0;
    for (std::size_t p = 0; p < reps.size(); ++p) {
      const int d = line[0] * reps[p][0] + line[1] * reps[p][1] + line[2] * reps[p][2];
      if (d % q == 0) block[k++] = static_cast<int>(p);
    }
    if (k != 6) throw NotFoundError("projective plane line does not have 6 points");
    blocks.push_back(block);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

namespace {

class BitGraph {
 public:
  explicit BitGraph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), rows_(static_cast<std::size_t>(n)) {
    for (int v = 0; v < n; ++v) {
      auto& row = rows_[static_cast<std::size_t>(v)];
      row.assign(words_, 0);
      for (int w = 0; w < n; ++w) {
        if (w != v) row[static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);
      }
    }
  }

  int size() const { return n_; }
  bool has(int a, int b) const { return (rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1u; }
  void erase(int a, int b) {
    rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] &= ~(std::uint64_t{1} << (b % 64));
    rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a) / 64] &= ~(std::uint64_t{1} << (a % 64));
  }
  const std::vector<std::uint64_t>& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::size_t words() const { return words_; }

  bool block_free(const std::array<int, 6>& b) const {
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        if (!has(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)])) return false;
      }
    }
    return true;
  }
  void remove_block(const std::array<int, 6>& b) {
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) erase(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
    }
  }

  // A K6 through v in the remaining graph, visiting candidates in `rank` order.
  std::optional<std::array<int, 6>> k6_through(int v, const std::vector<int>& rank) const {
    std::array<int, 6> block{v, 0, 0, 0, 0, 0};
    std::vector<std::uint64_t> cand = row(v);
    return extend(block, 1, cand, rank) ? std::optional(block) : std::nullopt;
  }

 private:
  bool extend(std::array<int, 6>& block, int depth, const std::vector<std::uint64_t>& cand,
              const std::vector<int>& rank) const {
    if (depth == 6) return true;
    std::vector<int> members;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = cand[w]; bits; bits &= bits - 1) {
        members.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
    if (static_cast<int>(members.size()) < 6 - depth) return false;
    std::sort(members.begin(), members.end(), [&](int a, int b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; });
    std::vector<std::uint64_t> next(words_);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int w = members[i];
      // Only later members, so each clique is tried once.
      std::fill(next.begin(), next.end(), 0);
      const auto& r = row(w);
      std::size_t count = 0;
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int x = members[j];
        if ((r[static_cast<std::size_t>(x) / 64] >> (x % 64)) & 1u) {
          next[static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (x % 64);
          ++count;
        }
      }
      if (static_cast<int>(count) < 5 - depth) continue;
      block[static_cast<std::size_t>(depth)] = w;
      if (extend(block, depth + 1, next, rank)) return true;
    }
    return false;
  }

  int n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

constexpr std::uint64_t kGroupNodeLimit = 200'000;

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

int transversal_order(int n) {
  int q = 5;
  while (6 * q < n || !is_prime(q)) ++q;
  return q;
}

// Blocks of a transversal design TD(6,q) restricted to ids < n. Point (g, y)
// has id g*q + y; the block for (a, b) is {(g, a + b g) : g < 5} + {(5, b)}.
std::vector<std::array<int, 6>> transversal_blocks(int n, int q) {
  std::vector<std::array<int, 6>> out;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      std::array<int, 6> block{};
      for (int g = 0; g < 5; ++g) block[static_cast<std::size_t>(g)] = g * q + (a + b * g) % q;
      block[5] = 5 * q + b;
      if (std::all_of(block.begin(), block.end(), [n](int id) { return id < n; })) {
        std::sort(block.begin(), block.end());
        out.push_back(block);
      }
    }
  }
  return out;
}

// Largest K6 packing found within `ids` (at most 32 vertices) in the
// remaining graph, by branch and bound with a node budget.
std::vector<std::array<int, 6>> small_max_packing(const BitGraph& g, const std::vector<int>& ids, std::uint64_t node_limit) {
  const int m = static_cast<int>(ids.size());
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && g.has(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)])) adj[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
  std::vector<std::array<int, 6>> best;
  std::vector<std::array<int, 6>> cur;
  std::uint64_t nodes = 0;
  auto toggle = [&](const std::array<int, 6>& b) {
    for (int x : b) {
      for (int y : b) {
        if (x != y) adj[static_cast<std::size_t>(x)] ^= 1u << y;
      }
    }
  };
  std::function<void()> dfs = [&]() {
    if (++nodes > node_limit) return;
    int bound = 0;
    int u = -1;
    for (int i = 0; i < m; ++i) {
      const int d = std::popcount(adj[static_cast<std::size_t>(i)]);
      bound += d / 5;
      if (u < 0 && d >= 5) u = i;
    }
    if (cur.size() + static_cast<std::size_t>(bound / 6) <= best.size()) return;
    if (u < 0) {
      best = cur;
      return;
    }
    std::array<int, 6> block{u, 0, 0, 0, 0, 0};
    std::function<void(std::uint32_t, int)> extend = [&](std::uint32_t cand, int depth) {
      if (nodes > node_limit) return;
      if (depth == 6) {
        toggle(block);
        cur.push_back(block);
        dfs();
        cur.pop_back();
        toggle(block);
        return;
      }
      while (cand && std::popcount(cand) >= 6 - depth) {
        const int w = std::countr_zero(cand);
        cand &= cand - 1;
        block[static_cast<std::size_t>(depth)] = w;
        extend(cand & adj[static_cast<std::size_t>(w)], depth + 1);
      }
    };
    extend(adj[static_cast<std::size_t>(u)], 1);
    // Or u joins no further block.
    const std::uint32_t saved = adj[static_cast<std::size_t>(u)];
    for (std::uint32_t r = saved; r; r &= r - 1) adj[static_cast<std::size_t>(std::countr_zero(r))] &= ~(1u << u);
    adj[static_cast<std::size_t>(u)] = 0;
    dfs();
    adj[static_cast<std::size_t>(u)] = saved;
    for (std::uint32_t r = saved; r; r &= r - 1) adj[static_cast<std::size_t>(std::countr_zero(r))] |= 1u << u;
  };
  dfs();
  for (auto& b : best) {
    for (int& x : b) x = ids[static_cast<std::size_t>(x)];
    std::sort(b.begin(), b.end());
  }
  return best;
}

PackingPlan finish_plan(int n, std::vector<std::array<int, 6>> blocks) {
  PackingPlan plan;
  plan.n = n;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  std::vector<char> used(pair_count(n), 0);
  for (const auto& b : blocks) {
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) used[edge_index(n, Edge(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]))] = 1;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used[edge_index(n, Edge(u, v))]) plan.leftover.emplace_back(u, v);
    }
  }
  plan.blocks = std::move(blocks);
  return plan;
}

std::vector<std::array<int, 6>> greedy_packing(int n, bool seeded, Rng& rng) {
  BitGraph g(n);
  std::vector<std::array<int, 6>> blocks;
  if (seeded) {
    const int q = transversal_order(n);
    for (const auto& b : transversal_blocks(n, q)) {
      if (g.block_free(b)) {
        g.remove_block(b);
        blocks.push_back(b);
      }
    }
    // Groups of the design are still complete graphs; pack them separately.
    for (int grp = 0; grp < 6 && q <= 32; ++grp) {
      std::vector<int> ids;
      for (int y = 0; y < q && grp * q + y < n; ++y) ids.push_back(grp * q + y);
      const auto fill = small_max_packing(g, ids, kGroupNodeLimit);
      for (const auto& b : fill) {
        g.remove_block(b);
        blocks.push_back(b);
      }
    }
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order.begin(), order.end());
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  // Once v lies in no K6 of the remaining graph it never will again, so one
  // pass leaves a maximal packing.
  for (int v : order) {
    while (auto b = g.k6_through(v, rank)) {
      g.remove_block(*b);
      blocks.push_back(*b);
    }
  }
  return blocks;
}

}  // namespace

PackingPlan pack_k6(int n, PackingMode mode, const PackingOptions& opts) {
  if (n < 1) throw InputError("pack_k6 needs n >= 1");
  if (mode == PackingMode::kExact) {
    if (const auto why = k6_design_obstruction(n)) {
      throw InfeasibleError("no exact K6 decomposition of K" + std::to_string(n) + ": " + *why);
    }
    if (n == 31) return finish_plan(n, projective_plane_blocks());
    if (n > kExactSearchLimit) {
      throw SizeGuardError("exact K6 packing only for n <= " + std::to_string(kExactSearchLimit) + " or n = 31");
    }
    auto blocks = search_k6_design(n, opts.node_limit);
    if (!blocks) throw InfeasibleError("exhaustive search found no K6 decomposition of K" + std::to_string(n));
    return finish_plan(n, std::move(*blocks));
  }
  if (n > 4096) throw SizeGuardError("greedy K6 packing supports n <= 4096");
  Rng rng(opts.seed);
  std::vector<std::array<int, 6>> best;
  bool have = false;
  const int runs = std::max(1, opts.restarts);
  for (int r = 0; r < runs; ++r) {
    // Alternate seeded and unseeded runs when seeding is on.
    const bool seeded = opts.transversal_seed && r % 2 == 0;
    auto blocks = n >= 6 ? greedy_packing(n, seeded, rng) : std::vector<std::array<int, 6>>{};
    if (!have || blocks.size() > best.size()) {
      best = std::move(blocks);
      have = true;
    }
  }
  return finish_plan(n, std::move(best));
}

void validate_packing(const PackingPlan& plan) {
  const int n = plan.n;
  std::vector<int> hits(pair_count(n), 0);
  for (const auto& b : plan.blocks) {
    for (int i = 0; i < 6; ++i) {
      const int x = b[static_cast<std::size_t>(i)];
      if (x < 0 || x >= n) throw InputError("block id out of range");
      for (int j = i + 1; j < 6; ++j) {
        const int y = b[static_cast<std::size_t>(j)];
        if (x == y) throw InputError("block repeats an id");
        ++hits[edge_index(n, Edge(x, y))];
      }
    }
  }
  for (const Edge& e : plan.leftover) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw InputError("leftover edge out of range");
    ++hits[edge_index(n, e)];
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] != 1) throw InputError("packing does not partition the edges (edge index " + std::to_string(i) + ")");
  }
}

namespace {

Piece monotone_piece(const PointSet& ps, std::vector<int> vertices) {
  const auto interval = is_monotone_path(ps, PathPiece{vertices});
  if (!interval) throw NotFoundError("expected a monotone path; input not in general position?");
  return make_path_piece(PieceKind::kMonotonePath, std::move(vertices), interval->witness());
}

void append_pairs(const PointSet& ps, const std::vector<Edge>& edges, Cover& cover) {
  for (PathPiece& p : pair_edges_into_paths(ps.size(), edges)) cover.pieces.push_back(monotone_piece(ps, std::move(p.vertices)));
}

}  // namespace

Cover packing_cover(const PointSet& ps, const PackingPlan& plan) {
  if (plan.n != ps.size()) throw InputError("packing plan is for a different n");
  validate_packing(plan);
  Cover cover;
  cover.pointset_hash = pointset_hash(ps);
  for (const auto& ids : plan.blocks) {
    const K6Block block = k6_zigzag_decomposition(ps, ids);
    const int index = static_cast<int>(cover.blocks.size());
    cover.blocks.push_back(ids);
    for (const PathPiece& p : block.paths) {
      Piece piece = monotone_piece(ps, p.vertices);
      piece.block = index;
      cover.pieces.push_back(std::move(piece));
    }
  }
  append_pairs(ps, plan.leftover, cover);
  return cover;
}

Cover two_edge_cover(const PointSet& ps) {
  Cover cover;
  cover.pointset_hash = pointset_hash(ps);
  std::vector<Edge> all;
  all.reserve(pair_count(ps.size()));
  for (int u = 0; u < ps.size(); ++u) {
    for (int v = u + 1; v < ps.size(); ++v) all.emplace_back(u, v);
  }
  append_pairs(ps, all, cover);
  return cover;
}

}  // namespace geocover
