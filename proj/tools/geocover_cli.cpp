// geocover: generate point sets, build and verify covers, certify lower
// bounds, run exact oracles and scaling experiments, render SVG.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "geocover/bounds_lab.hpp"
#include "geocover/errors.hpp"
#include "geocover/experiment.hpp"
#include "geocover/json_io.hpp"
#include "geocover/oracle.hpp"
#include "geocover/pipeline.hpp"
#include "geocover/pointgen.hpp"
#include "geocover/svg.hpp"

namespace gc = geocover;

namespace {

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kBadInput = 3,
  kSizeGuard = 4,
  kInfeasible = 5,
  kConstructionFailed = 6,
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    gc::write_text_file(out, text);
  }
}

gc::PointSet load_points(const std::string& path) { return gc::pointset_from_json(gc::read_text_file(path)); }

struct GenArgs {
  std::string generator = "uniform";
  int n = 0;
  int k = 0;
  std::optional<double> alpha;
  double lambda = 100.0;
  std::string shape = "arc";
  std::uint64_t seed = 1;
  std::string out;
};

gc::PointSet generate(const GenArgs& a) {
  const auto need_n = [&] {
    if (a.n < 1) throw gc::InputError(a.generator + " needs --n >= 1");
  };
  if (a.generator == "uniform") {
    need_n();
    return gc::gen_uniform(a.n, a.seed);
  }
  if (a.generator == "dense") {
    need_n();
    return gc::gen_dense(a.n, a.alpha ? *a.alpha : gc::gen_dense_alpha(a.n, a.seed), a.seed);
  }
  if (a.generator == "convex") {
    need_n();
    return gc::gen_convex(a.n, a.seed);
  }
  if (a.k < 1) throw gc::InputError(a.generator + " needs --k >= 1");
  gc::ClusterOptions opts;
  opts.lambda = a.lambda;
  opts.shape = a.shape == "grid" ? gc::ClusterShape::kGrid : gc::ClusterShape::kArc;
  if (a.generator == "tripartite") return gc::gen_tripartite(a.k, a.seed, opts);
  return gc::gen_bipartite(a.k, a.seed, opts);
}

struct CoverArgs {
  std::string points;
  std::string algo = "phase12";
  double c = 1.0;
  std::optional<double> alpha;
  std::string mode = "greedy";
  std::uint64_t seed = 1;
  int restarts = 4;
  bool timing = false;
  std::string format = "json";
  std::string out;
};

int cmd_cover(const CoverArgs& a) {
  const gc::PointSet ps = load_points(a.points);
  gc::CoverRequest req;
  req.algorithm = gc::algorithm_from_string(a.algo);
  req.c = a.c;
  req.alpha = a.alpha;
  req.packing = a.mode == "exact" ? gc::PackingMode::kExact : gc::PackingMode::kGreedy;
  req.seed = a.seed;
  req.restarts = a.restarts;
  gc::CoverRun run = gc::run_cover(ps, req);
  if (!a.timing) run.stats.wall_time_ms.reset();
  const gc::VerificationReport report = gc::check_coverage(ps, run.cover);
  if (a.format == "svg") {
    gc::SvgOptions opts;
    opts.title = a.algo + ": " + std::to_string(run.cover.pieces.size()) + " pieces";
    emit(a.out, gc::render_svg(ps, run.cover.pieces, opts));
  } else {
    emit(a.out, gc::to_json(run.cover, &run.stats, a.algo));
  }
  if (!report.pass) {
    std::cerr << "cover failed verification: " << report.failed_pieces() << " bad pieces, " << report.uncovered.size()
              << " uncovered edges\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_verify(const std::string& points, const std::string& cover_path, const std::string& out) {
  const gc::PointSet ps = load_points(points);
  const gc::Cover cover = gc::cover_from_json(gc::read_text_file(cover_path));
  if (!cover.pointset_hash.empty() && cover.pointset_hash != gc::pointset_hash(ps)) {
    std::cerr << "warning: cover was built for point set " << cover.pointset_hash << ", verifying against "
              << gc::pointset_hash(ps) << "\n";
  }
  const gc::VerificationReport report = gc::check_coverage(ps, cover);
  emit(out, gc::to_json(report));
  if (report.pass) return kOk;
  for (const auto& v : report.pieces) {
    if (!v.pass) {
      std::cerr << "piece " << v.index << " failed: " << v.failure << "\n";
      break;
    }
  }
  if (!report.uncovered.empty()) {
    std::cerr << "uncovered edge (" << report.uncovered.front().u << "," << report.uncovered.front().v << ")";
    if (report.uncovered.size() > 1) std::cerr << " and " << report.uncovered.size() - 1 << " more";
    std::cerr << "\n";
  }
  return kVerifyFailed;
}

int cmd_bounds(const std::string& points, const GenArgs& gen, const std::string& format, const std::string& out) {
  const gc::PointSet ps = points.empty() ? generate(gen) : load_points(points);
  const gc::LowerBoundCertificate cert = gc::certify_lower_bound(ps);
  std::optional<gc::ConditionReport> cond;
  if (cert.witness.vertices.size() >= 2) cond = gc::classify_path_conditions(ps, cert.witness);
  if (format == "svg") {
    gc::SvgOptions opts;
    opts.arrow = cert.witness_direction;
    opts.title = "max E0 edges on a monotone path: " + std::to_string(cert.max_e0) + (cond ? ", walk " + cond->walk : "");
    emit(out, gc::render_svg(ps, {gc::make_path_piece(gc::PieceKind::kMonotonePath, cert.witness.vertices)}, opts));
  } else {
    emit(out, gc::to_json(cert, cond ? &*cond : nullptr));
  }
  const bool witness_ok = cert.witness.vertices.size() < 2 || gc::is_monotone_path(ps, cert.witness).has_value();
  return witness_ok ? kOk : kVerifyFailed;
}

int cmd_oracle(const std::string& points, const std::string& kind, const std::string& out) {
  const gc::PointSet ps = load_points(points);
  const gc::OracleResult r = gc::min_cover(ps, gc::piece_kind_from_string(kind));
  emit(out, gc::to_json(r));
  return gc::check_coverage(ps, r.cover).pass ? kOk : kVerifyFailed;
}

struct ExperimentArgs {
  gc::ExperimentPlan plan;
  std::string ns;
  std::string metric;
  std::string format = "csv";
  std::string out;
};

int cmd_experiment(ExperimentArgs a) {
  a.plan.ns = gc::parse_n_range(a.ns);
  a.plan.workers = gc::workers_from_env();
  const auto records = gc::run_experiment(a.plan);
  const std::string metric = a.metric.empty() ? gc::scaling_metric(a.plan.algorithm) : a.metric;
  std::optional<gc::ScalingFit> fit;
  try {
    fit = gc::fit_records(records, metric);
  } catch (const gc::InputError& e) {
    std::cerr << "no scaling fit: " << e.what() << "\n";
  }
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = gc::kCsvSchemaVersion;
    j["algorithm"] = a.plan.algorithm;
    j["records"] = records.size();
    if (fit) {
      j["fit"] = {{"metric", fit->metric},   {"exponent", fit->exponent}, {"std_error", fit->std_error},
                  {"prefactor", fit->prefactor}, {"n_min", fit->n_min},   {"n_max", fit->n_max},
                  {"points", fit->points}};
    }
    emit(a.out, j.dump() + "\n");
  } else {
    emit(a.out, gc::to_csv(records));
  }
  if (fit) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "fit %s: exponent %.4f +- %.4f over n in [%d, %d] (%d values)\n", fit->metric.c_str(),
                  fit->exponent, fit->std_error, fit->n_min, fit->n_max, fit->points);
    std::cerr << buf;
  }
  for (const auto& r : records) {
    if (r.verified == "fail") {
      std::cerr << "cell n=" << r.n << " seed=" << r.seed << " failed verification\n";
      return kVerifyFailed;
    }
  }
  return kOk;
}

int cmd_render(const std::string& points, const std::string& cover_path, const std::string& cert_path,
               const std::string& title, const std::string& out) {
  const gc::PointSet ps = load_points(points);
  gc::SvgOptions opts;
  opts.title = title;
  std::vector<gc::Piece> pieces;
  if (!cover_path.empty()) pieces = gc::cover_from_json(gc::read_text_file(cover_path)).pieces;
  if (!cert_path.empty()) {
    const gc::LowerBoundCertificate cert = gc::certificate_from_json(gc::read_text_file(cert_path));
    pieces.push_back(gc::make_path_piece(gc::PieceKind::kMonotonePath, cert.witness.vertices));
    opts.arrow = cert.witness_direction;
  }
  for (const gc::Piece& p : pieces) {
    for (const gc::Edge& e : p.edges()) {
      if (e.v >= ps.size()) throw gc::InputError("piece refers to point " + std::to_string(e.v) + " outside the set");
    }
  }
  emit(out, gc::render_svg(ps, pieces, opts));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geocover: covers of complete geometric graphs by monotone paths, noncrossing paths and plane matchings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "geocover 0.1.0");

  const std::vector<std::string> algos{"phase1", "phase12", "dense", "k6", "zigzagham", "twoedge", "convex"};

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a point set as JSON");
  g->add_option("--generator", gen.generator)->check(CLI::IsMember({"uniform", "dense", "convex", "tripartite", "bipartite"}));
  g->add_option("--n", gen.n, "Number of points");
  g->add_option("--k", gen.k, "Group size for clustered instances");
  g->add_option("--alpha", gen.alpha, "Density parameter; defaults to the grid's own ratio");
  g->add_option("--lambda", gen.lambda, "Cluster separation factor");
  g->add_option("--shape", gen.shape)->check(CLI::IsMember({"arc", "grid"}));
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "Output file (default stdout)");

  CoverArgs cov;
  auto* c = app.add_subcommand("cover", "Build a cover, verify it, and print it with stats");
  c->add_option("--points", cov.points)->required();
  c->add_option("--algo", cov.algo)->check(CLI::IsMember(algos));
  c->add_option("--c", cov.c, "Fan constant");
  c->add_option("--alpha", cov.alpha, "Density parameter for the dense algorithm");
  c->add_option("--mode", cov.mode, "K6 packing mode")->check(CLI::IsMember({"exact", "greedy"}));
  c->add_option("--seed", cov.seed);
  c->add_option("--restarts", cov.restarts);
  c->add_flag("--timing", cov.timing, "Include wall time in the stats");
  c->add_option("--format", cov.format)->check(CLI::IsMember({"json", "svg"}));
  c->add_option("--out", cov.out);

  std::string v_points, v_cover, v_out;
  auto* v = app.add_subcommand("verify", "Verify a cover; exit 0 iff every piece and edge checks out");
  v->add_option("--points", v_points)->required();
  v->add_option("--cover", v_cover)->required();
  v->add_option("--out", v_out);

  std::string b_points, b_format = "json", b_out;
  GenArgs b_gen;
  b_gen.generator = "tripartite";
  auto* b = app.add_subcommand("bounds", "Certify the max number of inter-group edges on one monotone path");
  b->add_option("--points", b_points, "Labelled point set; otherwise one is generated");
  b->add_option("--generator", b_gen.generator)->check(CLI::IsMember({"tripartite", "bipartite"}));
  b->add_option("--k", b_gen.k);
  b->add_option("--lambda", b_gen.lambda);
  b->add_option("--shape", b_gen.shape)->check(CLI::IsMember({"arc", "grid"}));
  b->add_option("--seed", b_gen.seed);
  b->add_option("--format", b_format)->check(CLI::IsMember({"json", "svg"}));
  b->add_option("--out", b_out);

  std::string o_points, o_kind = "monotone_path", o_out;
  auto* o = app.add_subcommand("oracle", "Exact minimum cover of a tiny instance");
  o->add_option("--points", o_points)->required();
  o->add_option("--kind", o_kind)->check(CLI::IsMember({"monotone_path", "noncrossing_path", "plane_matching"}));
  o->add_option("--out", o_out);

  ExperimentArgs ex;
  auto* e = app.add_subcommand("experiment", "Run (n, seed) cells in parallel and fit a scaling exponent");
  std::vector<std::string> ex_algos = algos;
  ex_algos.push_back("certify");
  e->add_option("--algo", ex.plan.algorithm)->check(CLI::IsMember(ex_algos));
  e->add_option("--generator", ex.plan.generator)->check(CLI::IsMember({"uniform", "dense", "convex", "tripartite", "bipartite"}));
  e->add_option("--ns", ex.ns, "a..b doubles from a to b; or a comma list")->required();
  e->add_option("--seeds", ex.plan.seeds, "Seeds per n");
  e->add_option("--seed", ex.plan.base_seed, "First seed");
  e->add_option("--c", ex.plan.c);
  e->add_option("--t-factor", ex.plan.t_factor, "Safety factor recorded with each row");
  e->add_option("--lambda", ex.plan.lambda);
  e->add_option("--metric", ex.metric)->check(CLI::IsMember({"residual", "pieces", "max_e0", "wall_ms"}));
  e->add_flag("--timing", ex.plan.timing, "Record wall time per cell");
  e->add_option("--format", ex.format)->check(CLI::IsMember({"csv", "json"}));
  e->add_option("--out", ex.out);

  std::string r_points, r_cover, r_cert, r_title, r_out;
  auto* r = app.add_subcommand("render", "Render points and pieces to SVG");
  r->add_option("--points", r_points)->required();
  r->add_option("--cover", r_cover);
  r->add_option("--certificate", r_cert);
  r->add_option("--title", r_title);
  r->add_option("--out", r_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) {
      emit(gen.out, gc::to_json(generate(gen)));
      return kOk;
    }
    if (*c) return cmd_cover(cov);
    if (*v) return cmd_verify(v_points, v_cover, v_out);
    if (*b) return cmd_bounds(b_points, b_gen, b_format, b_out);
    if (*o) return cmd_oracle(o_points, o_kind, o_out);
    if (*e) return cmd_experiment(ex);
    if (*r) return cmd_render(r_points, r_cover, r_cert, r_title, r_out);
  } catch (const gc::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    switch (err.kind()) {
      case gc::ErrorKind::kInput: return kBadInput;
      case gc::ErrorKind::kSizeGuard: return kSizeGuard;
      case gc::ErrorKind::kInfeasible: return kInfeasible;
      case gc::ErrorKind::kNotFound: return kConstructionFailed;
    }
  }
  return kUsage;
}
