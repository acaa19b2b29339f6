#include "geossa/good_nodes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geossa {

namespace {

bool is_prime(std::size_t m) {
  if (m < 2) return false;
  for (std::size_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

double frac(double x) { return x - std::floor(x); }

void require_population_size(std::size_t n) {
  if (n < 2) throw std::invalid_argument("population size must be >= 2");
}

}  // namespace

std::vector<double> good_nodes_generating_vector(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("good_nodes_generating_vector: dim must be >= 1");
  std::size_t p = 2 * dim + 3;
  while (!is_prime(p)) ++p;
  std::vector<double> r(dim);
  for (std::size_t j = 1; j <= dim; ++j)
    r[j - 1] = frac(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(p)));
  return r;
}

std::vector<std::vector<double>> good_nodes_unit(std::size_t count, std::size_t dim,
                                                 std::span<const double> generating_vector) {
  if (count == 0 || dim == 0)
    throw std::invalid_argument("good_nodes_unit: count and dim must be >= 1");
  std::vector<double> r;
  if (generating_vector.empty()) {
    r = good_nodes_generating_vector(dim);
  } else {
    if (generating_vector.size() != dim)
      throw std::invalid_argument("good_nodes_unit: generating vector length mismatch");
    r.assign(generating_vector.begin(), generating_vector.end());
  }

  std::vector<std::vector<double>> points(count, std::vector<double>(dim));
  for (std::size_t k = 1; k <= count; ++k)
    for (std::size_t j = 0; j < dim; ++j)
      points[k - 1][j] = frac(static_cast<double>(k) * r[j]);
  return points;
}

Population init_good_nodes(const SearchSpace& space, std::size_t n) {
  require_population_size(n);
  const auto unit = good_nodes_unit(n, space.dim());
  Population pop;
  pop.members.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& pos = pop.members[i].position;
    pos.resize(space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j)
      pos[j] = space.lower[j] + unit[i][j] * (space.upper[j] - space.lower[j]);
  }
  return pop;
}

Population init_pseudo_random(const SearchSpace& space, std::size_t n, RandomSource& rng) {
  require_population_size(n);
  Population pop;
  pop.members.resize(n);
  for (auto& member : pop.members) {
    member.position.resize(space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j)
      member.position[j] =
          space.lower[j] + (space.upper[j] - space.lower[j]) * rng.uniform01();
  }
  return pop;
}

}  // namespace geossa
