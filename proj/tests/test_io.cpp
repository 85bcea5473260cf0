#include "doctest.h"

#include <cmath>

#include "geocover/errors.hpp"
#include "geocover/experiment.hpp"
#include "geocover/json_io.hpp"
#include "geocover/pointgen.hpp"
#include "json.hpp"

using namespace geocover;

namespace {

void check_cover_round_trip(const PointSet& ps, Algorithm algo) {
  CoverRequest req;
  req.algorithm = algo;
  CoverRun run = run_cover(ps, req);
  run.stats.wall_time_ms.reset();
  const std::string text = to_json(run.cover, &run.stats, to_string(algo));
  const Cover back = cover_from_json(text);
  CHECK(back == run.cover);
  CHECK(to_json(back, &run.stats, to_string(algo)) == text);
  CHECK(text.back() == '\n');
  CHECK(text.find('\n') == text.size() - 1);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("point sets round-trip byte for byte") {
    for (const PointSet& ps : {gen_uniform(20, 3), gen_tripartite(3, 2), gen_convex(7, 1), gen_dense(16, 2.5, 4)}) {
      const std::string text = to_json(ps);
      const PointSet back = pointset_from_json(text);
      CHECK(back == ps);
      CHECK(to_json(back) == text);
    }
    const auto doc = nlohmann::json::parse(to_json(gen_tripartite(1, 5)));
    CHECK(doc.at("n") == 3);
    CHECK(doc.at("groups") == nlohmann::json::array({"A", "B", "C"}));
    CHECK(doc.at("provenance").at("generator") == "tripartite");
  }

  TEST_CASE("malformed point sets are rejected") {
    CHECK_THROWS_AS(pointset_from_json("{"), InputError);
    CHECK_THROWS_AS(pointset_from_json("[]"), InputError);
    CHECK_THROWS_AS(pointset_from_json(R"({"n":1,"points":[[0.5,1]]})"), InputError);
    CHECK_THROWS_AS(pointset_from_json(R"({"n":2,"points":[[0,1]]})"), InputError);
    CHECK_THROWS_AS(pointset_from_json(R"({"n":1,"points":[[0,1,2]]})"), InputError);
    CHECK_THROWS_AS(pointset_from_json(R"({"n":1,"points":[[0,1]],"groups":["D"]})"), InputError);
    CHECK_THROWS_AS(pointset_from_json(R"({"n":1,"points":[[4294967296,1]]})"), InputError);
    CHECK(pointset_from_json(R"({"n":2,"points":[[0,1],[5,7]]})").size() == 2);
  }

  TEST_CASE("covers round-trip for every algorithm") {
    const PointSet ps = gen_uniform(12, 7);
    check_cover_round_trip(ps, Algorithm::kPhase1);
    check_cover_round_trip(ps, Algorithm::kPhase12);
    check_cover_round_trip(ps, Algorithm::kK6);
    check_cover_round_trip(ps, Algorithm::kZigzagHam);
    check_cover_round_trip(ps, Algorithm::kTwoEdge);
    check_cover_round_trip(gen_convex(9, 1), Algorithm::kConvex);
    check_cover_round_trip(gen_dense(64, gen_dense_alpha(64, 1), 1), Algorithm::kDense);

    CHECK_THROWS_AS(cover_from_json(R"({"pointset_hash":"x","pieces":[{"kind":"spiral","vertices":[0,1]}]})"),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(R"({"pointset_hash":"x","pieces":[{"kind":"plane_matching","vertices":[0,1]}]})"),
                    InputError);
    CHECK_THROWS_AS(cover_from_json(R"({"pieces":3})"), InputError);
  }

  TEST_CASE("verification reports") {
    const PointSet ps = gen_uniform(6, 1);
    Cover c = two_edge_cover(ps);
    c.pieces.pop_back();
    const auto doc = nlohmann::json::parse(to_json(check_coverage(ps, c)));
    CHECK(doc.at("pass") == false);
    CHECK(doc.at("n") == 6);
    CHECK(doc.at("total_edges") == 15);
    CHECK(doc.at("covered_edges").get<int>() < 15);
    CHECK(!doc.at("uncovered").empty());
  }

  TEST_CASE("certificates and oracle results round-trip") {
    const PointSet ps = gen_tripartite(3, 1);
    const LowerBoundCertificate cert = certify_lower_bound(ps);
    const std::string text = to_json(cert);
    const LowerBoundCertificate back = certificate_from_json(text);
    CHECK(back.max_e0 == cert.max_e0);
    CHECK(back.histogram == cert.histogram);
    CHECK(back.witness == cert.witness);
    CHECK(to_json(back) == text);
    const ConditionReport cond = classify_path_conditions(ps, cert.witness);
    const auto doc = nlohmann::json::parse(to_json(cert, &cond));
    CHECK(doc.contains("conditions"));

    const OracleResult r = min_cover(gen_uniform(5, 2), PieceKind::kNoncrossingPath);
    const std::string rt = to_json(r);
    CHECK(to_json(oracle_result_from_json(rt)) == rt);
    CHECK(oracle_result_from_json(rt).optimum == r.optimum);
  }

  TEST_CASE("CSV round trip and schema checks") {
    ExperimentPlan plan;
    plan.algorithm = "phase12";
    plan.ns = {16, 32};
    plan.seeds = 2;
    const auto records = run_experiment(plan);
    REQUIRE(records.size() == 4);
    for (const auto& r : records) {
      CHECK(r.verified == "pass");
      CHECK_FALSE(r.wall_ms.has_value());
    }
    const std::string csv = to_csv(records);
    CHECK(csv.rfind("# geocover-experiment-csv v1\n", 0) == 0);
    CHECK(records_from_csv(csv) == records);
    CHECK(to_csv(records_from_csv(csv)) == csv);

    std::string other = csv;
    other.replace(other.find("v1"), 2, "v9");
    CHECK_THROWS_AS(records_from_csv(other), InputError);
    CHECK_THROWS_AS(record_from_csv_row("uniform,,phase1"), InputError);

    ExperimentRecord odd = records.front();
    odd.generator_params = "alpha=1.5;n=3";
    odd.c = 0.1;
    odd.wall_ms = 1.25;
    CHECK(record_from_csv_row(to_csv_row(odd)) == odd);
  }

  TEST_CASE("experiments do not depend on the worker count") {
    ExperimentPlan plan;
    plan.algorithm = "phase1";
    plan.ns = {64, 16, 32};
    plan.seeds = 3;
    plan.workers = 1;
    const auto one = run_experiment(plan);
    plan.workers = 3;
    const auto three = run_experiment(plan);
    CHECK(one == three);
    CHECK(to_csv(one) == to_csv(three));
    REQUIRE(one.size() == 9);
    CHECK(one.front().n == 16);
    CHECK(one.back().n == 64);
    CHECK(one.back().seed == 3);

    plan.algorithm = "certify";
    plan.ns = {2, 3};
    plan.seeds = 1;
    const auto cert = run_experiment(plan);
    CHECK(cert[0].generator == "tripartite");
    CHECK(cert[1].max_e0 == 5);
  }

  TEST_CASE("power-law fits") {
    std::vector<std::pair<int, double>> exact;
    for (int n = 16; n <= 1024; n *= 2) exact.emplace_back(n, 3.0 * std::pow(n, 1.5));
    const ScalingFit f = fit_scaling(exact, "pieces");
    CHECK(f.exponent == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(f.prefactor == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(f.std_error < 1e-9);
    CHECK(f.points == 5);
    CHECK(f.n_min == 64);
    CHECK(f.n_max == 1024);

    // Repeated n are averaged before fitting; four values keep all four.
    std::vector<std::pair<int, double>> four{{8, 4}, {8, 6}, {16, 20}, {32, 80}, {64, 320}};
    const ScalingFit g = fit_scaling(four);
    CHECK(g.points == 4);
    CHECK(g.exponent > 1.8);

    const std::vector<std::pair<int, double>> three{{8, 1}, {16, 2}, {32, 4}};
    CHECK_THROWS_AS(fit_scaling(three), InputError);
  }

  TEST_CASE("n ranges") {
    CHECK(parse_n_range("64..1024") == std::vector<int>{64, 128, 256, 512, 1024});
    CHECK(parse_n_range("64..100") == std::vector<int>{64});
    CHECK(parse_n_range("3,5,9") == std::vector<int>{3, 5, 9});
    CHECK_THROWS_AS(parse_n_range("10..5"), InputError);
    CHECK_THROWS_AS(parse_n_range("x"), InputError);
    CHECK_THROWS_AS(parse_n_range("4,,5"), InputError);
  }
}
