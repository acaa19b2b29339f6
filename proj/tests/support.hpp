#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace geossa::testing {

/// Brute-force star-discrepancy estimate on a corner grid: the maximum over
/// anchored boxes [0, a) x [0, b) with a, b in {1/res, ..., res/res} of
/// |empirical fraction - volume|. Independent of any library code path.
inline double star_discrepancy_grid(const std::vector<std::vector<double>>& points,
                                    std::size_t resolution) {
  const double n = static_cast<double>(points.size());
  double worst = 0.0;
  for (std::size_t ia = 1; ia <= resolution; ++ia) {
    const double a = static_cast<double>(ia) / static_cast<double>(resolution);
    for (std::size_t ib = 1; ib <= resolution; ++ib) {
      const double b = static_cast<double>(ib) / static_cast<double>(resolution);
      std::size_t inside = 0;
      for (const auto& p : points)
        if (p[0] < a && p[1] < b) ++inside;
      worst = std::max(worst, std::abs(static_cast<double>(inside) / n - a * b));
    }
  }
  return worst;
}

inline double relative_error(double actual, double expected) {
  const double scale = std::max(1.0, std::abs(expected));
  return std::abs(actual - expected) / scale;
}

}  // namespace geossa::testing
