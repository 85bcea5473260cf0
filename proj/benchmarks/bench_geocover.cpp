#include <benchmark/benchmark.h>

#include "geocover/bounds_lab.hpp"
#include "geocover/clique_cover.hpp"
#include "geocover/pointgen.hpp"
#include "geocover/rng.hpp"
#include "geocover/sweep_cover.hpp"
#include "geocover/zigzag_ham.hpp"

using namespace geocover;

static void BM_SegmentsCross(benchmark::State& state) {
  Rng rng(1);
  std::vector<Point> pts;
  for (int i = 0; i < 4096; ++i) pts.push_back(Point{rng.uniform(0, kUnitFrame), rng.uniform(0, kUnitFrame), i});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(segments_cross(pts[i], pts[i + 1], pts[i + 2], pts[i + 3]));
    i = (i + 4) % 4092;
  }
}
BENCHMARK(BM_SegmentsCross);

static void BM_Phase1Residual(benchmark::State& state) {
  const PointSet ps = gen_uniform(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(phase1_residual(ps, SweepConfig{}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Phase1Residual)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_Phase1Materialized(benchmark::State& state) {
  const PointSet ps = gen_uniform(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(phase1_cover(ps, SweepConfig{}));
}
BENCHMARK(BM_Phase1Materialized)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

static void BM_DenseCoverage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PointSet ps = gen_dense(n, gen_dense_alpha(n, 1), 1);
  const double alpha = achieved_alpha(ps);
  for (auto _ : state) benchmark::DoNotOptimize(dense_coverage(ps, alpha, 1.0));
  state.SetComplexityN(n);
}
BENCHMARK(BM_DenseCoverage)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

static void BM_ZigzagHamPath(benchmark::State& state) {
  const PointSet ps = gen_uniform(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_ham_path(ps, 0, 1));
}
BENCHMARK(BM_ZigzagHamPath)->RangeMultiplier(4)->Range(16, 1024);

static void BM_CheckCoverage(benchmark::State& state) {
  const PointSet ps = gen_uniform(static_cast<int>(state.range(0)), 1);
  SweepConfig cfg;
  cfg.phase = SweepPhase::kPhaseOneTwo;
  const Cover cover = phase1_cover(ps, cfg).cover;
  for (auto _ : state) benchmark::DoNotOptimize(check_coverage(ps, cover));
}
BENCHMARK(BM_CheckCoverage)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);

static void BM_GreedyPacking(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pack_k6(static_cast<int>(state.range(0)), PackingMode::kGreedy));
}
BENCHMARK(BM_GreedyPacking)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_CertifyTripartite(benchmark::State& state) {
  const PointSet ps = gen_tripartite(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(certify_lower_bound(ps));
}
BENCHMARK(BM_CertifyTripartite)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
