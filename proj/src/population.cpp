#include "geossa/population.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace geossa {

void Population::rank_by_fitness() {
  ranking.resize(members.size());
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  for (const auto& m : members)
    if (!m.evaluated) throw std::logic_error("rank_by_fitness: unevaluated member");
  std::stable_sort(ranking.begin(), ranking.end(), [&](std::size_t a, std::size_t b) {
    return members[a].fitness < members[b].fitness;
  });
}

double population_diversity(const Population& pop) {
  const std::size_t n = pop.size();
  if (n == 0) throw std::invalid_argument("population_diversity: empty population");
  const std::size_t dim = pop.members.front().position.size();

  std::vector<double> column(n);
  double total = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = pop.members[i].position[j];
    std::sort(column.begin(), column.end());
    const double median = (n % 2 == 1)
                              ? column[n / 2]
                              : 0.5 * (column[n / 2 - 1] + column[n / 2]);
    double mad = 0.0;
    for (double v : column) mad += std::abs(median - v);
    total += mad / static_cast<double>(n);
  }
  return total / static_cast<double>(dim);
}

ExplorationSplit explore_exploit_split(double diversity, double diversity_max) {
  double xpl = 0.0;
  if (diversity_max > 0.0) xpl = 100.0 * diversity / diversity_max;
  return {xpl, 100.0 - xpl};
}

}  // namespace geossa
