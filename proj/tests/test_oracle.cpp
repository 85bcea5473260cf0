#include "doctest.h"

#include <string>

#include "geocover/errors.hpp"
#include "geocover/json_io.hpp"
#include "geocover/oracle.hpp"
#include "geocover/pipeline.hpp"
#include "geocover/pointgen.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace geocover;
using testing_support::BruteKind;

namespace {

struct CorpusEntry {
  std::string name;
  PointSet ps;
  int monotone = 0;
  int noncrossing = 0;
  int matching = 0;
};

std::vector<CorpusEntry> load_corpus() {
  const auto doc = nlohmann::json::parse(read_text_file(std::string(GEOCOVER_CORPUS_DIR) + "/oracle_constants.json"));
  std::vector<CorpusEntry> out;
  for (const auto& e : doc) {
    out.push_back(CorpusEntry{e.at("name").get<std::string>(), pointset_from_json(e.at("points").dump()),
                              e.at("optimum").at("monotone_path").get<int>(),
                              e.at("optimum").at("noncrossing_path").get<int>(),
                              e.at("optimum").at("plane_matching").get<int>()});
  }
  return out;
}

bool piece_is_monotone(const PointSet& ps, const Piece& p) {
  if (const auto* path = p.path()) return is_monotone_path(ps, *path).has_value();
  return is_monotone_matching(ps, *p.matching()).has_value();
}

bool piece_is_noncrossing_path(const PointSet& ps, const Piece& p) {
  return p.path() && is_noncrossing(ps, *p.path()).ok;
}

bool piece_is_plane_matching(const PointSet& ps, const Piece& p) {
  return p.matching() && is_noncrossing(ps, *p.matching()).ok;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("monotone path enumeration matches sequence brute force") {
    for (int n = 2; n <= 6; ++n) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const PointSet ps = n == 6 && seed == 4 ? gen_convex(6, 2) : gen_uniform(n, seed);
        std::set<std::vector<int>> got;
        for (const PathPiece& p : enumerate_monotone_paths(ps)) got.insert(p.vertices);
        CHECK(got == testing_support::brute_force_monotone_paths(ps));
      }
    }
    // Three edges and three 2-edge paths, one per middle vertex.
    CHECK(enumerate_monotone_paths(gen_uniform(3, 1)).size() == 6);
  }

  TEST_CASE("small optima") {
    CHECK(min_cover(gen_uniform(2, 1), PieceKind::kMonotonePath).optimum == 1);
    const OracleResult tri = min_cover(gen_uniform(3, 1), PieceKind::kMonotonePath);
    CHECK(tri.optimum == 2);
    CHECK(tri.cover.pieces.size() == 2);
    CHECK(check_coverage(gen_uniform(3, 1), tri.cover).pass);
    // A convex pentagon: each plane matching has at most two edges.
    CHECK(min_cover(gen_convex(5, 1), PieceKind::kPlaneMatching).optimum == 5);
    // Convex quadrilateral: two monotone paths, frozen and rechecked.
    const PointSet quad = gen_convex(4, 1);
    CHECK(min_cover(quad, PieceKind::kMonotonePath).optimum == 2);
    CHECK(testing_support::exhaustive_min_cover(quad, BruteKind::kMonotonePath) == 2);

    CHECK_THROWS_AS(min_cover(gen_uniform(8, 1), PieceKind::kMonotonePath), SizeGuardError);
    CHECK_THROWS_AS(min_cover(gen_uniform(7, 1), PieceKind::kPlaneMatching), SizeGuardError);
    CHECK_THROWS_AS(min_cover(gen_uniform(4, 1), PieceKind::kZigzagPath), InputError);
  }

  TEST_CASE("oracle covers are valid and minimal on the corpus") {
    const auto corpus = load_corpus();
    REQUIRE(corpus.size() >= 15);
    for (const CorpusEntry& e : corpus) {
      INFO(e.name);
      const std::pair<PieceKind, int> expect[] = {{PieceKind::kMonotonePath, e.monotone},
                                                  {PieceKind::kNoncrossingPath, e.noncrossing},
                                                  {PieceKind::kPlaneMatching, e.matching}};
      for (const auto& [kind, value] : expect) {
        const OracleResult r = min_cover(e.ps, kind);
        CHECK(r.optimum == value);
        CHECK(r.cover.pieces.size() == static_cast<std::size_t>(value));
        CHECK(check_coverage(e.ps, r.cover).pass);
        // Deterministic across calls.
        CHECK(min_cover(e.ps, kind).cover == r.cover);
      }
      CHECK(testing_support::exhaustive_min_cover(e.ps, BruteKind::kMonotonePath) == e.monotone);
      CHECK(testing_support::exhaustive_min_cover(e.ps, BruteKind::kNoncrossingPath) == e.noncrossing);
      CHECK(testing_support::exhaustive_min_cover(e.ps, BruteKind::kPlaneMatching) == e.matching);
    }
  }

  TEST_CASE("heuristics never beat the oracle") {
    int compared = 0;
    for (const CorpusEntry& e : load_corpus()) {
      INFO(e.name);
      for (Algorithm algo : all_algorithms()) {
        if (algo == Algorithm::kConvex && !is_convex_hull_order(e.ps)) continue;
        CoverRequest req;
        req.algorithm = algo;
        Cover cover;
        try {
          cover = run_cover(e.ps, req).cover;
        } catch (const InputError&) {
          continue;  // K6 packing needs n >= 6
        }
        if (!check_coverage(e.ps, cover).pass) continue;  // dense with a small budget
        const int pieces = static_cast<int>(cover.pieces.size());
        // A monotone matching extends to a monotone path through its edges in
        // projection order, so the monotone-path optimum bounds both.
        auto all = [&](auto pred) {
          return std::all_of(cover.pieces.begin(), cover.pieces.end(), [&](const Piece& p) { return pred(e.ps, p); });
        };
        if (all(piece_is_monotone)) {
          CHECK(pieces >= e.monotone);
          ++compared;
        }
        if (all(piece_is_noncrossing_path)) {
          CHECK(pieces >= e.noncrossing);
          ++compared;
        }
        if (all(piece_is_plane_matching)) {
          CHECK(pieces >= e.matching);
          ++compared;
        }
      }
    }
    CHECK(compared > 50);
  }
}
