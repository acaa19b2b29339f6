#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geossa/population.hpp"
#include "geossa/rng.hpp"
#include "geossa/search_space.hpp"

namespace geossa {

/// Generating vector r_j = frac(2 cos(2 pi j / p)) for j = 1..dim, with p the
/// smallest prime >= 2 dim + 3 (the cyclotomic construction). frac(x) means
/// x - floor(x), always in [0, 1).
std::vector<double> good_nodes_generating_vector(std::size_t dim);

/// The low-discrepancy point set: point k (1-based) has coordinate j equal to
/// frac(k * r_j). Pass a custom generating vector to override the default
/// cyclotomic one; it must have length dim.
std::vector<std::vector<double>> good_nodes_unit(
    std::size_t count, std::size_t dim,
    std::span<const double> generating_vector = {});

/// Population spread over the box by affinely mapping the unit good-nodes set.
/// Deterministic in (n, space); consumes no randomness. Members unevaluated.
Population init_good_nodes(const SearchSpace& space, std::size_t n);

/// Standard uniform initialization: lb + (ub - lb) * u per coordinate.
Population init_pseudo_random(const SearchSpace& space, std::size_t n, RandomSource& rng);

}  // namespace geossa
