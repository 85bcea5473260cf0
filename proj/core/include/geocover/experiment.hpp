#pragma once

// Scaling experiments: a grid of (n, seed) cells run in parallel, one CSV
// record per cell, and log-log least-squares fits of the measured counts.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geocover/pipeline.hpp"

namespace geocover {

/// Bumped whenever a CSV column is added, removed or reinterpreted.
inline constexpr int kCsvSchemaVersion = 1;

/// Covers up to this size are materialized and verified inside experiments;
/// above it the sweep algorithms report counts only.
inline constexpr int kExperimentVerifyLimit = 512;

struct ExperimentRecord {
  std::string generator;
  std::string generator_params;  // "key=value;key=value"
  std::string algorithm;         // an Algorithm name or "certify"
  double c = 1.0;
  double t_factor = 2.0;
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t monotone_paths = 0;
  std::size_t monotone_matchings = 0;
  std::size_t noncrossing_paths = 0;
  std::size_t plane_matchings = 0;
  std::size_t zigzag_paths = 0;
  std::size_t pieces = 0;
  std::size_t residual = 0;
  int directions = 0;
  int max_e0 = -1;  // certify runs only
  std::string verified;  // pass, fail, coverage or skipped
  std::optional<double> wall_ms;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

std::string csv_header();
std::string to_csv_row(const ExperimentRecord& r);
/// Inverse of to_csv_row; throws InputError on a malformed row.
ExperimentRecord record_from_csv_row(const std::string& row);
/// Schema line, header, one row per record.
std::string to_csv(std::span<const ExperimentRecord> records);
/// Accepts exactly what to_csv writes; rejects other schema versions.
std::vector<ExperimentRecord> records_from_csv(const std::string& text);

struct ScalingFit {
  std::string metric;
  double exponent = 0.0;
  double std_error = 0.0;
  double prefactor = 0.0;  // metric ~ prefactor * n^exponent
  int n_min = 0;
  int n_max = 0;
  int points = 0;  // distinct n values used
};

/// Least squares on (log n, log mean value). Needs at least 4 distinct n with
/// positive means; the two smallest are dropped when at least 4 remain.
/// Throws InputError otherwise.
ScalingFit fit_scaling(std::span<const std::pair<int, double>> samples, const std::string& metric = "");

/// Parses "a..b" (doubling from a up to b) or a comma-separated list.
std::vector<int> parse_n_range(const std::string& spec);

struct ExperimentPlan {
  std::string algorithm = "phase1";  // Algorithm name or "certify"
  std::string generator;             // empty picks the algorithm's default
  std::vector<int> ns;               // group size k for clustered generators
  int seeds = 1;
  std::uint64_t base_seed = 1;
  double c = 1.0;
  double t_factor = 2.0;
  double lambda = 100.0;
  bool timing = false;
  int workers = 1;
};

/// Worker count from GEOCOVER_WORKERS, else the hardware concurrency (>= 1).
int workers_from_env();

/// Runs every (n, seed) cell and returns the records sorted by (n, seed),
/// independent of the worker count.
std::vector<ExperimentRecord> run_experiment(const ExperimentPlan& plan);

/// Runs one cell.
ExperimentRecord run_experiment_cell(const ExperimentPlan& plan, int n, std::uint64_t seed);

/// Fit of the metric that matters for the algorithm: residual for phase1,
/// max_e0 for certify, total pieces otherwise.
std::string scaling_metric(const std::string& algorithm);
ScalingFit fit_records(std::span<const ExperimentRecord> records, const std::string& metric);

}  // namespace geocover
