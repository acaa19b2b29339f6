#pragma once

#include <functional>
#include <span>
#include <string>

#include "geossa/rng.hpp"
#include "geossa/search_space.hpp"

namespace geossa {

/// Uniform contract for everything the optimizer can minimize: benchmark
/// functions, the UAV path objective, and the engineering design problems.
/// Evaluations must be reentrant; `noise` is only consumed by objectives with
/// a stochastic term (F7) and may be null for noise-free evaluation.
struct ObjectiveProblem {
  std::string name;
  SearchSpace space;
  std::function<double(std::span<const double>, RandomSource*)> eval;

  std::size_t dim() const { return space.dim(); }

  double evaluate(std::span<const double> x, RandomSource* noise = nullptr) const {
    return eval(x, noise);
  }
};

}  // namespace geossa
