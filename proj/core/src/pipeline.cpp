#include "geocover/pipeline.hpp"

#include <chrono>

#include "geocover/errors.hpp"
#include "geocover/pointgen.hpp"
#include "geocover/sweep_cover.hpp"
#include "geocover/zigzag_ham.hpp"

namespace geocover {

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kPhase1: return "phase1";
    case Algorithm::kPhase12: return "phase12";
    case Algorithm::kDense: return "dense";
    case Algorithm::kK6: return "k6";
    case Algorithm::kZigzagHam: return "zigzagham";
    case Algorithm::kTwoEdge: return "twoedge";
    case Algorithm::kConvex: return "convex";
  }
  return "unknown";
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all{Algorithm::kPhase1,    Algorithm::kPhase12, Algorithm::kDense,
                                          Algorithm::kK6,        Algorithm::kZigzagHam, Algorithm::kTwoEdge,
                                          Algorithm::kConvex};
  return all;
}

Algorithm algorithm_from_string(const std::string& name) {
  for (Algorithm a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  throw InputError("unknown algorithm: " + name);
}

CoverRun run_cover(const PointSet& ps, const CoverRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  CoverRun run;
  CoverStats& st = run.stats;
  switch (req.algorithm) {
    case Algorithm::kPhase1:
    case Algorithm::kPhase12: {
      SweepConfig cfg;
      cfg.c = req.c;
      cfg.phase = req.algorithm == Algorithm::kPhase1 ? SweepPhase::kPhaseOne : SweepPhase::kPhaseOneTwo;
      SweepResult r = phase1_cover(ps, cfg);
      st.directions = r.directions;
      st.pieces_phase1 = r.phase1_pieces;
      st.pieces_phase2 = r.phase2_pieces;
      st.residual_edges = r.residual.size();
      run.cover = std::move(r.cover);
      if (req.algorithm == Algorithm::kPhase1 && !r.residual.empty()) {
        // Phase I alone leaves edges; report them as single-edge matchings so
        // the cover is complete.
        for (const Edge& e : r.residual) run.cover.pieces.push_back(make_matching_piece(PieceKind::kPlaneMatching, {e}));
        st.pieces_phase2 = r.residual.size();
      }
      break;
    }
    case Algorithm::kDense: {
      st.alpha = req.alpha ? *req.alpha : achieved_alpha(ps);
      DenseStats ds;
      run.cover = dense_cover(ps, st.alpha, req.c, &ds);
      st.directions = ds.directions;
      st.budget = ds.budget;
      st.pieces_phase1 = ds.pieces;
      st.residual_edges = ds.total_edges - ds.covered_edges;
      break;
    }
    case Algorithm::kK6: {
      PackingOptions opts;
      opts.seed = req.seed;
      opts.restarts = req.restarts;
      const PackingPlan plan = pack_k6(ps.size(), req.packing, opts);
      run.cover = packing_cover(ps, plan);
      st.blocks = plan.blocks.size();
      st.leftover_edges = plan.leftover.size();
      st.pieces_phase1 = 5 * plan.blocks.size();
      st.pieces_phase2 = run.cover.pieces.size() - st.pieces_phase1;
      break;
    }
    case Algorithm::kZigzagHam:
      run.cover = zigzag_ham_cover(ps);
      break;
    case Algorithm::kTwoEdge:
      run.cover = two_edge_cover(ps);
      break;
    case Algorithm::kConvex:
      run.cover = convex_matching_decomposition(ps);
      break;
  }
  st.pieces = run.cover.pieces.size();
  st.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace geocover
