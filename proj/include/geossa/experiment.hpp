#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geossa/benchmarks.hpp"
#include "geossa/engineering.hpp"
#include "geossa/ssa.hpp"
#include "geossa/stats.hpp"
#include "geossa/uav.hpp"

namespace geossa {

/// Configuration problems with line context; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TelemetryLevel { None, Curve, CurveAndDiversity, Full };

/// One entry of the problem grid: a benchmark id, a terrain-backed UAV
/// objective, or an engineering design problem.
struct ProblemRef {
  enum class Kind { Benchmark, Uav, Engineering };
  Kind kind = Kind::Benchmark;
  BenchmarkId benchmark = BenchmarkId::F1;
  EngineeringId engineering = EngineeringId::CB;
  std::string terrain_path;
  std::string label;

  static ProblemRef parse(const std::string& token);  // throws ConfigError
};

struct ExperimentConfig {
  std::vector<std::string> algorithms;  // preset names: SSA, GeoSSA, GeoSSA1..3
  std::vector<ProblemRef> problems;
  std::size_t n = 30;
  std::size_t iterations = 500;
  std::size_t repetitions = 30;
  double pd_fraction = 0.3;
  double sd_fraction = 0.2;
  double safety_threshold = 0.7;
  double epsilon = 1e-50;
  std::uint64_t base_seed = 42;
  std::string output_dir = "results";
  TelemetryLevel telemetry = TelemetryLevel::None;
  int workers = 0;  // 0 = all hardware threads
  std::string reference;  // defaults to the first algorithm
  std::size_t uav_interior = 8;
  EngineeringOptions engineering;

  SsaParams ssa_params() const;
  void validate() const;  // throws ConfigError
};

/// Parse the key = value config format ('#' comments, blank lines allowed).
/// Unknown keys, unknown presets, malformed numbers and non-positive counts
/// raise ConfigError with the offending line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

/// Outcome of a single run; runs.csv rows carry exactly these fields except
/// wall_time_sec, which goes to metadata.json so the CSVs stay byte-stable
/// across reruns.
struct RunRecord {
  std::string algorithm;
  std::string problem;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  double best_fitness = 0.0;
  std::vector<double> best_position;
  std::size_t evaluations = 0;
  double wall_time_sec = 0.0;
};

struct GridOutcome {
  RunMatrix matrix;
  std::vector<RunRecord> records;
  std::vector<std::string> failures;  // one message per failed run
  std::size_t skipped = 0;            // completed records found by --resume
};

/// Stream id for one run: fnv1a64("run|<algorithm>|<problem>|<repetition>").
std::uint64_t derive_stream_id(const std::string& algorithm, const std::string& problem,
                               std::size_t repetition);

/// Build the ObjectiveProblem a grid cell optimizes.
ObjectiveProblem instantiate_problem(const ProblemRef& ref, const ExperimentConfig& cfg);

/// Execute the full algorithm x problem x repetition grid with run-level
/// parallelism (workers <= 1 forces the serial path; outputs are identical
/// either way). Writes runs.csv, metadata.json and per-run telemetry under
/// cfg.output_dir, then the report CSVs when every run succeeded.
GridOutcome run_grid(const ExperimentConfig& cfg, bool resume = false);

/// Write summary_ave_std.csv, wilcoxon.csv, friedman.csv and wtl_oe.csv.
/// Refuses (throws std::runtime_error listing missing cells) when the matrix
/// has unfilled entries.
void emit_reports(const RunMatrix& matrix, const std::string& reference_label,
                  const std::string& output_dir);

/// Rebuild a RunMatrix from a previously written runs.csv.
RunMatrix load_run_matrix(const std::string& runs_csv_path);

/// Pinned CSV schemas.
inline constexpr std::string_view kRunsHeader =
    "algorithm,problem,repetition,seed,stream_id,best_fitness,evaluations,best_position";
inline constexpr std::string_view kConvergenceHeader =
    "t,best_fitness,diversity,exploration_pct";
inline constexpr std::string_view kSummaryHeader = "algorithm,problem,ave,std";
inline constexpr std::string_view kWilcoxonHeader =
    "algorithm,problem,p_value,w_plus,n_effective,zeros_dropped,exact,degenerate";
inline constexpr std::string_view kWtlHeader = "algorithm,wins,ties,losses,oe_pct";
inline constexpr int kSchemaVersion = 1;

}  // namespace geossa
