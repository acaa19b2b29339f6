#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace geossa {

/// Axis-aligned box the optimizer searches in. lower[j] < upper[j] for all j.
struct SearchSpace {
  std::vector<double> lower;
  std::vector<double> upper;

  SearchSpace() = default;
  SearchSpace(std::vector<double> lo, std::vector<double> hi);

  /// Same scalar bounds in every dimension.
  static SearchSpace cube(std::size_t dim, double lo, double hi);

  std::size_t dim() const { return lower.size(); }
  bool contains(std::span<const double> x) const;
};

/// Each coordinate projected into [lower[j], upper[j]].
std::vector<double> clamp_to_bounds(std::span<const double> x, const SearchSpace& space);

void clamp_in_place(std::vector<double>& x, const SearchSpace& space);

}  // namespace geossa
