#include "geossa/ssa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "geossa/good_nodes.hpp"

namespace geossa {

void SsaParams::validate() const {
  if (n < 2) throw std::invalid_argument("SsaParams: population size must be >= 2");
  if (!(pd_fraction > 0.0 && pd_fraction < 1.0))
    throw std::invalid_argument("SsaParams: pd_fraction must lie in (0, 1)");
  if (!(sd_fraction > 0.0 && sd_fraction < 1.0))
    throw std::invalid_argument("SsaParams: sd_fraction must lie in (0, 1)");
  if (!(safety_threshold >= 0.5 && safety_threshold <= 1.0))
    throw std::invalid_argument("SsaParams: safety threshold must lie in [0.5, 1]");
  if (!(epsilon > 0.0)) throw std::invalid_argument("SsaParams: epsilon must be positive");
}

std::size_t SsaParams::producer_count() const {
  const auto pd = static_cast<std::size_t>(
      std::llround(pd_fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(pd, 1, n);
}

std::size_t SsaParams::danger_count() const {
  const auto sd = static_cast<std::size_t>(
      std::ceil(sd_fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(sd, 1, n);
}

StrategyToggles StrategyToggles::ssa() {
  return {InitScheme::PseudoRandom, ProducerRule::Original, EdgeRule::Original};
}
StrategyToggles StrategyToggles::geossa() {
  return {InitScheme::GoodNodes, ProducerRule::SineCosine, EdgeRule::TriangularWalk};
}
StrategyToggles StrategyToggles::geossa1() {
  return {InitScheme::PseudoRandom, ProducerRule::SineCosine, EdgeRule::TriangularWalk};
}
StrategyToggles StrategyToggles::geossa2() {
  return {InitScheme::GoodNodes, ProducerRule::Original, EdgeRule::TriangularWalk};
}
StrategyToggles StrategyToggles::geossa3() {
  return {InitScheme::GoodNodes, ProducerRule::SineCosine, EdgeRule::Original};
}

std::optional<StrategyToggles> StrategyToggles::by_name(std::string_view name) {
  if (name == "SSA") return ssa();
  if (name == "GeoSSA") return geossa();
  if (name == "GeoSSA1") return geossa1();
  if (name == "GeoSSA2") return geossa2();
  if (name == "GeoSSA3") return geossa3();
  return std::nullopt;
}

std::string StrategyToggles::name() const {
  const bool good_nodes = init == InitScheme::GoodNodes;
  const bool sine_cosine = producer == ProducerRule::SineCosine;
  const bool triangular = edge == EdgeRule::TriangularWalk;
  if (good_nodes && sine_cosine && triangular) return "GeoSSA";
  if (!good_nodes && sine_cosine && triangular) return "GeoSSA1";
  if (good_nodes && !sine_cosine && triangular) return "GeoSSA2";
  if (good_nodes && sine_cosine && !triangular) return "GeoSSA3";
  if (!good_nodes && !sine_cosine && !triangular) return "SSA";
  return "custom";
}

std::vector<double> producer_update_original(const Individual& x, std::size_t rank,
                                             const SsaParams& params, RandomSource& rng) {
  if (rank == 0) throw std::invalid_argument("producer rank is 1-based");
  std::vector<double> out(x.position.size());
  const double r2 = rng.uniform01();
  if (r2 < params.safety_threshold) {
    // alpha in (0, 1]; rank-weighted exponential contraction.
    const double alpha = 1.0 - rng.uniform01();
    const double factor = std::exp(-static_cast<double>(rank) * alpha /
                                   static_cast<double>(params.iterations));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = x.position[j] * factor;
  } else {
    const double q = rng.standard_normal();
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = x.position[j] + q;
  }
  return out;
}

double inertia_weight(std::size_t t, std::size_t max_iterations) {
  if (max_iterations == 0) throw std::invalid_argument("inertia_weight: T must be >= 1");
  const double ratio = static_cast<double>(t) / static_cast<double>(max_iterations);
  return 1.0 / (1.0 + std::exp(-25.0 * (ratio - 0.5)));
}

std::vector<double> producer_update_sine_cosine(const Individual& x,
                                                std::span<const double> best,
                                                std::size_t t, std::size_t max_iterations,
                                                const SsaParams& params, RandomSource& rng) {
  const double omega = inertia_weight(t, max_iterations);
  // One alarm draw per sparrow selects the branch; the wave amplitude, angle
  // and attraction coefficient are redrawn per coordinate, following the
  // sine-cosine convention the ranges come from.
  const double r2_alarm = rng.uniform01();
  const bool sine_branch = r2_alarm < params.safety_threshold;

  std::vector<double> out(x.position.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double r1 = rng.uniform_in(0.0, 2.0);
    const double r2 = rng.uniform_in(0.0, 2.0 * std::numbers::pi);
    const double r3 = rng.uniform_in(0.0, 2.0);
    const double wave = sine_branch ? std::sin(r2) : std::cos(r2);
    out[j] = omega * x.position[j] + r1 * wave * std::abs(r3 * best[j] - x.position[j]);
  }
  return out;
}

std::vector<double> scrounger_update(const Individual& x, std::size_t rank,
                                     std::span<const double> producer_best,
                                     std::span<const double> worst, std::size_t n,
                                     RandomSource& rng) {
  if (rank == 0) throw std::invalid_argument("scrounger rank is 1-based");
  const std::size_t dim = x.position.size();
  std::vector<double> out(dim);
  if (2 * rank > n) {
    // Starving scrounger: relocate near the origin, scaled by distance from
    // the worst member.
    const double q = rng.standard_normal();
    const double inv_rank_sq = 1.0 / (static_cast<double>(rank) * static_cast<double>(rank));
    for (std::size_t j = 0; j < dim; ++j)
      out[j] = q * std::exp((worst[j] - x.position[j]) * inv_rank_sq);
  } else {
    // Follow the producer best; A^+ L collapses to the mean signed deviation
    // broadcast over coordinates.
    const auto signs = rademacher_vector(rng, dim);
    double step = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
      step += signs[j] * std::abs(x.position[j] - producer_best[j]);
    step /= static_cast<double>(dim);
    for (std::size_t j = 0; j < dim; ++j) out[j] = producer_best[j] + step;
  }
  return out;
}

std::vector<double> edge_update_original(const Individual& x, std::span<const double> best,
                                         std::span<const double> worst, double f_i,
                                         double f_g, double f_w, const SsaParams& params,
                                         RandomSource& rng, bool* guarded) {
  const std::size_t dim = x.position.size();
  std::vector<double> out(dim);
  if (guarded) *guarded = false;
  if (f_i > f_g) {
    const double beta = rng.standard_normal();
    for (std::size_t j = 0; j < dim; ++j)
      out[j] = best[j] + beta * std::abs(x.position[j] - best[j]);
  } else {
    const double k = rng.uniform_in(-1.0, 1.0);
    double denom = f_i;
    if (std::abs(denom) < params.epsilon) {
      denom = denom < 0.0 ? -params.epsilon : params.epsilon;
      if (guarded) *guarded = true;
    }
    const double ratio = (f_i - f_w) / denom;
    for (std::size_t j = 0; j < dim; ++j)
      out[j] = x.position[j] +
               k * (std::abs(x.position[j] - worst[j]) * ratio + params.epsilon);
  }
  return out;
}

double walk_scale(std::size_t t, std::size_t max_iterations, RandomSource& rng) {
  const double ratio = max_iterations == 0
                           ? 0.0
                           : static_cast<double>(t) / static_cast<double>(max_iterations);
  const double rg = 0.1 - 0.1 * ratio;
  return rg * rng.uniform01();
}

TriangularStep triangular_step(std::span<const double> best, std::span<const double> x,
                               RandomSource& rng, bool per_coordinate) {
  if (best.size() != x.size())
    throw std::invalid_argument("triangular_step: vector length mismatch");
  const std::size_t dim = x.size();
  TriangularStep step;
  step.displacement.resize(dim);
  step.alpha.resize(dim);

  double u1 = 0.0, u2 = 0.0;
  if (!per_coordinate) {
    u1 = rng.uniform01();
    u2 = rng.uniform01();
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (per_coordinate) {
      u1 = rng.uniform01();
      u2 = rng.uniform01();
    }
    const double side = best[j] - x[j];
    const double lp = side * u1;
    step.displacement[j] = side;
    step.alpha[j] = side * side + lp * lp -
                    2.0 * side * lp * std::cos(2.0 * std::numbers::pi * u2);
  }
  return step;
}

std::vector<double> edge_update_triangular(const Individual& x,
                                           std::span<const double> producer_best,
                                           std::size_t t, std::size_t max_iterations,
                                           RandomSource& rng, bool per_coordinate) {
  const double r = walk_scale(t, max_iterations, rng);
  const auto step = triangular_step(producer_best, x.position, rng, per_coordinate);
  std::vector<double> out(x.position.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = producer_best[j] * step.displacement[j] + r * step.alpha[j];
  return out;
}

namespace {

// Partial Fisher-Yates over member indices: first `count` entries after the
// shuffle, drawn without replacement.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count,
                                                    RandomSource& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t k = 0; k < count; ++k) {
    const auto span = static_cast<double>(n - k);
    auto offset = static_cast<std::size_t>(rng.uniform01() * span);
    if (offset >= n - k) offset = n - k - 1;
    std::swap(idx[k], idx[k + offset]);
  }
  idx.resize(count);
  return idx;
}

}  // namespace

RunResult run_optimizer(const ObjectiveProblem& problem, const SsaParams& params,
                        const StrategyToggles& toggles, RngStream& stream,
                        bool capture_snapshots) {
  params.validate();
  const SearchSpace& space = problem.space;
  const std::size_t n = params.n;
  const std::size_t max_iter = params.iterations;

  Population pop = toggles.init == InitScheme::GoodNodes
                       ? init_good_nodes(space, n)
                       : init_pseudo_random(space, n, stream);

  RunResult result;
  result.seed = stream.seed();
  result.stream_id = stream.stream_id();

  auto evaluate = [&](std::span<const double> x) {
    ++result.evaluations;
    return problem.evaluate(x, &stream);
  };

  for (auto& member : pop.members) {
    member.fitness = evaluate(member.position);
    member.evaluated = true;
  }
  pop.rank_by_fitness();

  std::size_t best_index = pop.ranking.front();
  double best_fitness = pop.members[best_index].fitness;
  std::vector<double> best_position = pop.members[best_index].position;

  auto greedy_accept = [&](std::size_t member, std::vector<double> candidate) {
    clamp_in_place(candidate, space);
    const double f = evaluate(candidate);
    if (f < pop.members[member].fitness) {
      pop.members[member].fitness = f;
      pop.members[member].position = std::move(candidate);
      if (f < best_fitness) {
        best_fitness = f;
        best_index = member;
        best_position = pop.members[member].position;
      }
    }
  };

  double diversity_max = 0.0;
  result.curve.reserve(max_iter);

  for (std::size_t t = 1; t <= max_iter; ++t) {
    pop.rank_by_fitness();
    const std::size_t worst_index = pop.ranking.back();
    const std::vector<double> worst_position = pop.members[worst_index].position;
    const double worst_fitness = pop.members[worst_index].fitness;

    const std::size_t pd = params.producer_count();
    for (std::size_t k = 0; k < pd; ++k) {
      const std::size_t m = pop.ranking[k];
      auto candidate =
          toggles.producer == ProducerRule::SineCosine
              ? producer_update_sine_cosine(pop.members[m], best_position, t, max_iter,
                                            params, stream)
              : producer_update_original(pop.members[m], k + 1, params, stream);
      greedy_accept(m, std::move(candidate));
    }

    for (std::size_t k = pd; k < n; ++k) {
      const std::size_t m = pop.ranking[k];
      auto candidate = scrounger_update(pop.members[m], k + 1, best_position,
                                        worst_position, n, stream);
      greedy_accept(m, std::move(candidate));
    }

    const auto danger = sample_without_replacement(n, params.danger_count(), stream);
    for (const std::size_t m : danger) {
      std::vector<double> candidate;
      if (toggles.edge == EdgeRule::TriangularWalk) {
        candidate = edge_update_triangular(pop.members[m], best_position, t, max_iter,
                                           stream, toggles.triangular_per_coordinate);
      } else {
        bool guarded = false;
        candidate = edge_update_original(pop.members[m], best_position, worst_position,
                                         pop.members[m].fitness, best_fitness,
                                         worst_fitness, params, stream, &guarded);
        if (guarded) ++result.guard_events;
      }
      greedy_accept(m, std::move(candidate));
    }

    IterationTelemetry telemetry;
    telemetry.t = t;
    telemetry.best_fitness = best_fitness;
    telemetry.diversity = population_diversity(pop);
    diversity_max = std::max(diversity_max, telemetry.diversity);
    const auto split = explore_exploit_split(telemetry.diversity, diversity_max);
    telemetry.exploration_pct = split.exploration_pct;
    telemetry.exploitation_pct = split.exploitation_pct;
    if (capture_snapshots) {
      telemetry.snapshot.reserve(n);
      for (const auto& member : pop.members) telemetry.snapshot.push_back(member.position);
    }
    result.curve.push_back(std::move(telemetry));
  }

  result.best_position = std::move(best_position);
  result.best_fitness = best_fitness;
  return result;
}

}  // namespace geossa
