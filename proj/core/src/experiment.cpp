#include "geocover/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "geocover/bounds_lab.hpp"
#include "geocover/errors.hpp"
#include "geocover/pointgen.hpp"
#include "geocover/sweep_cover.hpp"

namespace geocover {

namespace {

constexpr const char* kColumns[] = {
    "generator", "generator_params", "algorithm", "c", "t_factor", "n", "seed",
    "monotone_paths", "monotone_matchings", "noncrossing_paths", "plane_matchings", "zigzag_paths",
    "pieces", "residual", "directions", "max_e0", "verified", "wall_ms",
};
constexpr std::size_t kColumnCount = std::size(kColumns);

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void check_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") != std::string::npos) throw InputError("CSV field may not contain commas, quotes or newlines: " + s);
}

template <typename T>
T parse_number(const std::string& s, const char* column) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError(std::string("bad value '") + s + "' in column " + column);
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string schema_line() { return "# geocover-experiment-csv v" + std::to_string(kCsvSchemaVersion); }

std::string default_generator(const std::string& algorithm) {
  if (algorithm == "dense") return "dense";
  if (algorithm == "convex") return "convex";
  if (algorithm == "certify") return "tripartite";
  return "uniform";
}

struct Generated {
  PointSet ps;
  std::string params;
};

Generated generate(const ExperimentPlan& plan, const std::string& generator, int n, std::uint64_t seed) {
  if (generator == "uniform") return {gen_uniform(n, seed), "n=" + std::to_string(n)};
  if (generator == "convex") return {gen_convex(n, seed), "n=" + std::to_string(n)};
  if (generator == "dense") {
    const double alpha = gen_dense_alpha(n, seed);
    return {gen_dense(n, alpha, seed), "n=" + std::to_string(n) + ";alpha=" + fmt(alpha)};
  }
  ClusterOptions opts;
  opts.lambda = plan.lambda;
  const std::string params = "k=" + std::to_string(n) + ";lambda=" + fmt(plan.lambda);
  if (generator == "tripartite") return {gen_tripartite(n, seed, opts), params};
  if (generator == "bipartite") return {gen_bipartite(n, seed, opts), params};
  throw InputError("unknown generator: " + generator);
}

void count_kinds(const Cover& cover, ExperimentRecord& r) {
  for (const Piece& p : cover.pieces) {
    switch (p.kind) {
      case PieceKind::kMonotonePath: ++r.monotone_paths; break;
      case PieceKind::kMonotoneMatching: ++r.monotone_matchings; break;
      case PieceKind::kNoncrossingPath: ++r.noncrossing_paths; break;
      case PieceKind::kPlaneMatching: ++r.plane_matchings; break;
      case PieceKind::kZigzagPath: ++r.zigzag_paths; break;
    }
  }
  r.pieces = cover.pieces.size();
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kColumnCount; ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  return out;
}

std::string to_csv_row(const ExperimentRecord& r) {
  check_cell(r.generator);
  check_cell(r.generator_params);
  check_cell(r.algorithm);
  check_cell(r.verified);
  std::ostringstream os;
  os << r.generator << ',' << r.generator_params << ',' << r.algorithm << ',' << fmt(r.c) << ',' << fmt(r.t_factor) << ','
     << r.n << ',' << r.seed << ',' << r.monotone_paths << ',' << r.monotone_matchings << ',' << r.noncrossing_paths << ','
     << r.plane_matchings << ',' << r.zigzag_paths << ',' << r.pieces << ',' << r.residual << ',' << r.directions << ','
     << r.max_e0 << ',' << r.verified << ',' << (r.wall_ms ? fmt(*r.wall_ms) : std::string());
  return os.str();
}

ExperimentRecord record_from_csv_row(const std::string& row) {
  const auto f = split(row, ',');
  if (f.size() != kColumnCount) {
    throw InputError("CSV row has " + std::to_string(f.size()) + " fields, expected " + std::to_string(kColumnCount));
  }
  ExperimentRecord r;
  r.generator = f[0];
  r.generator_params = f[1];
  r.algorithm = f[2];
  r.c = parse_number<double>(f[3], kColumns[3]);
  r.t_factor = parse_number<double>(f[4], kColumns[4]);
  r.n = parse_number<int>(f[5], kColumns[5]);
  r.seed = parse_number<std::uint64_t>(f[6], kColumns[6]);
  r.monotone_paths = parse_number<std::size_t>(f[7], kColumns[7]);
  r.monotone_matchings = parse_number<std::size_t>(f[8], kColumns[8]);
  r.noncrossing_paths = parse_number<std::size_t>(f[9], kColumns[9]);
  r.plane_matchings = parse_number<std::size_t>(f[10], kColumns[10]);
  r.zigzag_paths = parse_number<std::size_t>(f[11], kColumns[11]);
  r.pieces = parse_number<std::size_t>(f[12], kColumns[12]);
  r.residual = parse_number<std::size_t>(f[13], kColumns[13]);
  r.directions = parse_number<int>(f[14], kColumns[14]);
  r.max_e0 = parse_number<int>(f[15], kColumns[15]);
  r.verified = f[16];
  if (!f[17].empty()) r.wall_ms = parse_number<double>(f[17], kColumns[17]);
  return r;
}

std::string to_csv(std::span<const ExperimentRecord> records) {
  std::string out = schema_line() + "\n" + csv_header() + "\n";
  for (const auto& r : records) out += to_csv_row(r) + "\n";
  return out;
}

std::vector<ExperimentRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != schema_line()) throw InputError("CSV does not start with '" + schema_line() + "'");
  if (!std::getline(in, line) || line != csv_header()) throw InputError("CSV header does not match the schema");
  std::vector<ExperimentRecord> out;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(record_from_csv_row(line));
  }
  return out;
}

ScalingFit fit_scaling(std::span<const std::pair<int, double>> samples, const std::string& metric) {
  std::map<int, std::pair<double, int>> sums;
  for (const auto& [n, v] : samples) {
    auto& s = sums[n];
    s.first += v;
    ++s.second;
  }
  std::vector<std::pair<double, double>> pts;
  std::vector<int> ns;
  for (const auto& [n, s] : sums) {
    const double mean = s.first / s.second;
    if (n <= 0 || !(mean > 0)) throw InputError("scaling fit needs positive n and positive means");
    pts.emplace_back(std::log(static_cast<double>(n)), std::log(mean));
    ns.push_back(n);
  }
  if (pts.size() < 4) throw InputError("scaling fit needs at least 4 distinct n values, got " + std::to_string(pts.size()));
  const std::size_t skip = pts.size() >= 6 ? 2 : 0;
  pts.erase(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(skip));
  ns.erase(ns.begin(), ns.begin() + static_cast<std::ptrdiff_t>(skip));

  const double m = static_cast<double>(pts.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  ScalingFit fit;
  fit.metric = metric;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  double ssr = 0;
  for (const auto& [x, y] : pts) {
    const double e = y - (intercept + fit.exponent * x);
    ssr += e * e;
  }
  fit.std_error = std::sqrt(ssr / (m - 2) / sxx);
  fit.prefactor = std::exp(intercept);
  fit.n_min = ns.front();
  fit.n_max = ns.back();
  fit.points = static_cast<int>(pts.size());
  return fit;
}

std::vector<int> parse_n_range(const std::string& spec) {
  std::vector<int> out;
  auto number = [&](const std::string& s) {
    const int v = parse_number<int>(s, "n");
    if (v < 1) throw InputError("n values must be positive: " + s);
    return v;
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const int lo = number(spec.substr(0, dots));
    const int hi = number(spec.substr(dots + 2));
    if (lo > hi) throw InputError("empty n range: " + spec);
    for (long long v = lo; v <= hi; v *= 2) out.push_back(static_cast<int>(v));
    return out;
  }
  for (const auto& part : split(spec, ',')) out.push_back(number(part));
  return out;
}

int workers_from_env() {
  if (const char* env = std::getenv("GEOCOVER_WORKERS")) {
    const std::string s(env);
    const int w = parse_number<int>(s, "GEOCOVER_WORKERS");
    if (w < 1) throw InputError("GEOCOVER_WORKERS must be positive");
    return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string scaling_metric(const std::string& algorithm) {
  if (algorithm == "phase1") return "residual";
  if (algorithm == "certify") return "max_e0";
  return "pieces";
}

ScalingFit fit_records(std::span<const ExperimentRecord> records, const std::string& metric) {
  std::vector<std::pair<int, double>> samples;
  for (const auto& r : records) {
    double v = 0;
    if (metric == "residual") {
      v = static_cast<double>(r.residual);
    } else if (metric == "pieces") {
      v = static_cast<double>(r.pieces);
    } else if (metric == "max_e0") {
      v = r.max_e0;
    } else if (metric == "wall_ms") {
      if (!r.wall_ms) throw InputError("records carry no wall time; rerun with timing enabled");
      v = *r.wall_ms;
    } else {
      throw InputError("unknown metric: " + metric);
    }
    samples.emplace_back(r.n, v);
  }
  return fit_scaling(samples, metric);
}

ExperimentRecord run_experiment_cell(const ExperimentPlan& plan, int n, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const std::string generator = plan.generator.empty() ? default_generator(plan.algorithm) : plan.generator;
  Generated g = generate(plan, generator, n, seed);
  const PointSet& ps = g.ps;

  ExperimentRecord r;
  r.generator = generator;
  r.generator_params = g.params;
  r.algorithm = plan.algorithm;
  r.c = plan.c;
  r.t_factor = plan.t_factor;
  r.n = ps.size();
  r.seed = seed;
  r.verified = "skipped";

  auto verify = [&](const Cover& cover) { r.verified = check_coverage(ps, cover).pass ? "pass" : "fail"; };

  if (plan.algorithm == "certify") {
    const LowerBoundCertificate cert = certify_lower_bound(ps);
    r.max_e0 = cert.max_e0;
    r.residual = cert.e0_edges;
    r.pieces = cert.bound;
    r.directions = static_cast<int>(cert.cells);
    const bool ok = cert.witness.vertices.size() < 2 || is_monotone_path(ps, cert.witness).has_value();
    r.verified = ok ? "pass" : "fail";
  } else {
    CoverRequest req;
    req.algorithm = algorithm_from_string(plan.algorithm);
    req.c = plan.c;
    req.seed = seed;
    const bool small = ps.size() <= kExperimentVerifyLimit;
    if ((req.algorithm == Algorithm::kPhase1 || req.algorithm == Algorithm::kPhase12) && !small) {
      SweepConfig cfg;
      cfg.c = plan.c;
      const std::vector<Edge> residual = phase1_residual(ps, cfg);
      r.directions = fan_size(ps.size(), FanMode::kHalf, plan.c);
      r.monotone_matchings = 2 * static_cast<std::size_t>(r.directions);
      r.residual = residual.size();
      if (req.algorithm == Algorithm::kPhase12) {
        r.plane_matchings = phase2_cover(ps, residual).pieces.size();
      } else {
        r.plane_matchings = residual.size();
      }
      r.pieces = r.monotone_matchings + r.plane_matchings;
    } else if (req.algorithm == Algorithm::kDense && !small) {
      const DenseStats ds = dense_coverage(ps, achieved_alpha(ps), plan.c);
      r.directions = ds.directions;
      r.monotone_paths = ds.pieces;
      r.pieces = ds.pieces;
      r.residual = ds.total_edges - ds.covered_edges;
      r.verified = r.residual == 0 ? "coverage" : "fail";
    } else {
      const CoverRun run = run_cover(ps, req);
      count_kinds(run.cover, r);
      r.directions = run.stats.directions;
      r.residual = run.stats.residual_edges;
      verify(run.cover);
      if (req.algorithm == Algorithm::kPhase1 || req.algorithm == Algorithm::kPhase12) {
        // Cross-check the materialized residual against the kinetic replay.
        SweepConfig cfg;
        cfg.c = plan.c;
        if (phase1_residual(ps, cfg).size() != r.residual) r.verified = "fail";
      }
    }
  }
  if (plan.timing) r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentPlan& plan) {
  if (plan.ns.empty()) throw InputError("experiment needs at least one n");
  if (plan.seeds < 1) throw InputError("experiment needs at least one seed");
  struct Cell {
    int n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  std::vector<int> ns = plan.ns;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (int n : ns) {
    for (int s = 0; s < plan.seeds; ++s) cells.push_back({n, plan.base_seed + static_cast<std::uint64_t>(s)});
  }
  std::vector<ExperimentRecord> out(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        out[i] = run_experiment_cell(plan, cells[i].n, cells[i].seed);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = cells.size();
      }
    }
  };
  const int workers = std::max(1, std::min(plan.workers, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace geocover
