#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geossa/objective.hpp"
#include "geossa/population.hpp"
#include "geossa/rng.hpp"

namespace geossa {

/// Hyperparameters of the sparrow search loop.
struct SsaParams {
  std::size_t n = 30;            ///< population size
  std::size_t iterations = 500;  ///< generation budget T
  double pd_fraction = 0.3;      ///< producer share of the flock
  double sd_fraction = 0.2;      ///< danger-aware share of the flock
  double safety_threshold = 0.7; ///< ST, alarm cutoff in [0.5, 1]
  double epsilon = 1e-50;        ///< division guard
  std::uint64_t seed = 0;        ///< recorded into RunResult

  void validate() const;  // throws std::invalid_argument

  /// round(pd_fraction * n), at least 1.
  std::size_t producer_count() const;
  /// ceil(sd_fraction * n), capped at n.
  std::size_t danger_count() const;
};

enum class InitScheme { PseudoRandom, GoodNodes };
enum class ProducerRule { Original, SineCosine };
enum class EdgeRule { Original, TriangularWalk };

/// Ablation switchboard. GeoSSA enables all three strategies; each named
/// variant reverts exactly one of them to the original rule.
struct StrategyToggles {
  InitScheme init = InitScheme::GoodNodes;
  ProducerRule producer = ProducerRule::SineCosine;
  EdgeRule edge = EdgeRule::TriangularWalk;
  /// Redraw the triangular-walk disturbance per coordinate instead of once
  /// per individual (off by default: one triangle per sparrow).
  bool triangular_per_coordinate = false;

  static StrategyToggles ssa();
  static StrategyToggles geossa();
  static StrategyToggles geossa1();  ///< good-nodes init replaced by pseudo-random
  static StrategyToggles geossa2();  ///< sine-cosine producer replaced by original
  static StrategyToggles geossa3();  ///< triangular-walk edge replaced by original

  /// Lookup by preset name (SSA, GeoSSA, GeoSSA1..GeoSSA3); nullopt otherwise.
  static std::optional<StrategyToggles> by_name(std::string_view name);
  std::string name() const;
};

/// Per-iteration trace of one run.
struct IterationTelemetry {
  std::size_t t = 0;
  double best_fitness = 0.0;
  double diversity = 0.0;
  double exploration_pct = 0.0;
  double exploitation_pct = 0.0;
  /// Positions of the whole flock after this iteration; captured only when
  /// the run is asked for search history.
  std::vector<std::vector<double>> snapshot;
};

struct RunResult {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  std::vector<IterationTelemetry> curve;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  /// Number of times the edge update's division guard fired (|f_i| < epsilon).
  std::size_t guard_events = 0;
};

// --- position update rules -------------------------------------------------
//
// All rules return an unclamped candidate; the run loop projects it into the
// search space and accepts it only if it improves the member's fitness.
// Draw order is part of the contract (replays must be bit-identical) and is
// documented per rule.

/// Original producer rule. Draws: R2; then alpha in (0,1] if R2 < ST, else one
/// normal Q applied to every coordinate. rank is the 1-based position in the
/// fitness ranking.
std::vector<double> producer_update_original(const Individual& x, std::size_t rank,
                                             const SsaParams& params, RandomSource& rng);

/// Sigmoid inertia weight: 1 / (1 + exp(-25 (t/T - 0.5))). Strictly
/// increasing in t; throws if T == 0.
double inertia_weight(std::size_t t, std::size_t max_iterations);

/// Sine-cosine producer rule. Draws, in order: R2 (uniform [0,1)),
/// r1 (uniform [0,2)), r2 (uniform [0,2pi)), r3 (uniform [0,2)) - one set per
/// individual, applied elementwise. Sine branch when R2 < ST.
std::vector<double> producer_update_sine_cosine(const Individual& x,
                                                std::span<const double> best,
                                                std::size_t t, std::size_t max_iterations,
                                                const SsaParams& params, RandomSource& rng);

/// Scrounger rule. Starving branch (rank > n/2) draws one normal Q; follower
/// branch draws a length-dim Rademacher row A and moves by the mean signed
/// deviation (A^+ = A^T / dim).
std::vector<double> scrounger_update(const Individual& x, std::size_t rank,
                                     std::span<const double> producer_best,
                                     std::span<const double> worst, std::size_t n,
                                     RandomSource& rng);

/// Original edge rule. f_i > f_g draws one normal beta; f_i == f_g draws one
/// K uniform in [-1,1]. When |f_i| < epsilon the denominator is replaced by
/// +-epsilon and *guarded is set.
std::vector<double> edge_update_original(const Individual& x, std::span<const double> best,
                                         std::span<const double> worst, double f_i,
                                         double f_g, double f_w, const SsaParams& params,
                                         RandomSource& rng, bool* guarded = nullptr);

/// Decaying walk amplitude: rg = 0.1 (1 - t/T), r = rg * u. One uniform draw.
double walk_scale(std::size_t t, std::size_t max_iterations, RandomSource& rng);

struct TriangularStep {
  std::vector<double> displacement;  ///< L = best - x
  std::vector<double> alpha;         ///< law-of-cosines disturbance, >= 0
};

/// Triangular-walk disturbance: LP = L u1, alpha = L^2 + LP^2
/// - 2 L LP cos(2 pi u2). u1 and u2 are drawn once and shared across
/// coordinates unless per_coordinate is set (then one pair per coordinate).
TriangularStep triangular_step(std::span<const double> best, std::span<const double> x,
                               RandomSource& rng, bool per_coordinate = false);

/// Triangular-walk edge rule: producer_best (.) L + r * alpha, elementwise.
/// Draws, in order: the walk_scale uniform, then the triangular_step pair(s).
std::vector<double> edge_update_triangular(const Individual& x,
                                           std::span<const double> producer_best,
                                           std::size_t t, std::size_t max_iterations,
                                           RandomSource& rng, bool per_coordinate = false);

/// Full optimizer loop; the run owns the stream. Initialization per toggles,
/// then T iterations of rank -> producers -> scroungers -> danger-aware
/// updates, each candidate clamped and greedily accepted.
/// Telemetry is captured after every iteration; snapshots only when
/// capture_snapshots is set.
RunResult run_optimizer(const ObjectiveProblem& problem, const SsaParams& params,
                        const StrategyToggles& toggles, RngStream& stream,
                        bool capture_snapshots = false);

}  // namespace geossa
