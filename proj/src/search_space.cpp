#include "geossa/search_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace geossa {

SearchSpace::SearchSpace(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.empty() || lower.size() != upper.size())
    throw std::invalid_argument("SearchSpace: bound vectors must be nonempty and equal length");
  for (std::size_t j = 0; j < lower.size(); ++j)
    if (!(lower[j] < upper[j]))
      throw std::invalid_argument("SearchSpace: lower bound must be strictly below upper bound");
}

SearchSpace SearchSpace::cube(std::size_t dim, double lo, double hi) {
  return SearchSpace(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] < lower[j] || x[j] > upper[j]) return false;
  return true;
}

std::vector<double> clamp_to_bounds(std::span<const double> x, const SearchSpace& space) {
  std::vector<double> out(x.begin(), x.end());
  clamp_in_place(out, space);
  return out;
}

void clamp_in_place(std::vector<double>& x, const SearchSpace& space) {
  // min/max chain maps NaN coordinates to the lower bound, deterministically.
  for (std::size_t j = 0; j < x.size(); ++j)
    x[j] = std::min(space.upper[j], std::max(space.lower[j], x[j]));
}

}  // namespace geossa
