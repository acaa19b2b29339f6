#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace geossa {

/// One candidate solution with its cached objective value.
struct Individual {
  std::vector<double> position;
  double fitness = std::numeric_limits<double>::quiet_NaN();
  bool evaluated = false;
};

/// The sparrow flock. `ranking` is the index permutation produced by
/// rank_by_fitness(): fitness is nondecreasing along it, ties broken by
/// member index so replays are deterministic.
struct Population {
  std::vector<Individual> members;
  std::vector<std::size_t> ranking;

  std::size_t size() const { return members.size(); }

  /// Stable sort of member indices by fitness. All members must be evaluated.
  void rank_by_fitness();
};

/// Mean absolute deviation from the per-dimension median, averaged over
/// dimensions. Zero iff all members coincide; permutation invariant.
double population_diversity(const Population& pop);

/// (exploration %, exploitation %) from the current diversity and the running
/// maximum. Sums to 100; a collapsed population reports (0, 100).
struct ExplorationSplit {
  double exploration_pct;
  double exploitation_pct;
};
ExplorationSplit explore_exploit_split(double diversity, double diversity_max);

}  // namespace geossa
