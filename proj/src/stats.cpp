#include "geossa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace geossa {

MeanStd ave_std(std::span<const double> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("ave_std: need at least two samples");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : samples) {
    const double d = v - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / (n - 1.0))};
}

namespace {

// Tie-averaged ranks of |values|, ascending.
std::vector<double> average_ranks(const std::vector<double>& magnitudes) {
  const std::size_t n = magnitudes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return magnitudes[a] < magnitudes[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && magnitudes[order[j + 1]] == magnitudes[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

// Exact two-sided p for the signed-rank statistic: distribution of W+ over
// all 2^n sign assignments via subset-sum counting on doubled ranks
// (tie-averaged ranks are half-integers, so doubling makes them integral).
double exact_two_sided_p(const std::vector<double>& ranks, double w_plus) {
  const std::size_t n = ranks.size();
  std::vector<std::size_t> doubled(n);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    doubled[i] = static_cast<std::size_t>(std::llround(2.0 * ranks[i]));
    total += doubled[i];
  }
  std::vector<std::uint64_t> count(total + 1, 0);
  count[0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = total; s >= doubled[i]; --s)
      count[s] += count[s - doubled[i]];

  const double center = static_cast<double>(total) / 2.0;
  const double observed = std::abs(2.0 * w_plus - center);
  std::uint64_t favorable = 0;
  for (std::size_t s = 0; s <= total; ++s) {
    if (std::abs(static_cast<double>(s) - center) >= observed - 1e-9)
      favorable += count[s];
  }
  return static_cast<double>(favorable) / std::ldexp(1.0, static_cast<int>(n));
}

double normal_two_sided_p(const std::vector<double>& ranks,
                          const std::vector<double>& magnitudes, double w_plus) {
  const double n = static_cast<double>(ranks.size());
  const double mean = n * (n + 1.0) / 4.0;
  double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  // Tie correction: subtract sum(t^3 - t) / 48 over tie groups.
  std::vector<double> sorted(magnitudes);
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    variance -= (t * t * t - t) / 48.0;
    i = j + 1;
  }
  if (variance <= 0.0) return 1.0;
  const double z = (w_plus - mean) / std::sqrt(variance);
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("wilcoxon_signed_rank: samples must be paired");
  WilcoxonResult result;
  std::vector<double> diffs;
  diffs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d == 0.0)
      ++result.zeros_dropped;
    else
      diffs.push_back(d);
  }
  result.n_effective = diffs.size();
  if (diffs.empty()) {
    result.degenerate = true;
    return result;
  }
  // Fewer than 5 effective pairs cannot reach p < 0.0625; the exact
  // distribution is still well-defined, so the test runs and simply never
  // rejects.

  std::vector<double> magnitudes(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) magnitudes[i] = std::abs(diffs[i]);
  const auto ranks = average_ranks(magnitudes);
  for (std::size_t i = 0; i < diffs.size(); ++i)
    if (diffs[i] > 0.0) result.w_plus += ranks[i];

  if (diffs.size() <= 25) {
    result.exact = true;
    result.p_two_sided = exact_two_sided_p(ranks, result.w_plus);
  } else {
    result.p_two_sided = normal_two_sided_p(ranks, magnitudes, result.w_plus);
  }
  return result;
}

double& RunMatrix::at(std::size_t a, std::size_t p, std::size_t r) {
  return values[(a * problems.size() + p) * repetitions + r];
}

double RunMatrix::at(std::size_t a, std::size_t p, std::size_t r) const {
  return values[(a * problems.size() + p) * repetitions + r];
}

std::span<const double> RunMatrix::samples(std::size_t a, std::size_t p) const {
  return {values.data() + (a * problems.size() + p) * repetitions, repetitions};
}

FriedmanResult friedman_ranks(const RunMatrix& matrix) {
  const std::size_t na = matrix.algorithms.size();
  const std::size_t np = matrix.problems.size();
  if (na < 2 || matrix.repetitions < 2)
    throw std::invalid_argument("friedman_ranks: need >= 2 algorithms and >= 2 repetitions");
  if (matrix.values.size() != na * np * matrix.repetitions)
    throw std::invalid_argument("friedman_ranks: matrix shape mismatch");

  FriedmanResult result;
  result.per_problem_ranks.assign(np, std::vector<double>(na, 0.0));
  result.afv.assign(na, 0.0);

  std::vector<double> column(na);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t r = 0; r < matrix.repetitions; ++r) {
      for (std::size_t a = 0; a < na; ++a) column[a] = matrix.at(a, p, r);
      const auto ranks = average_ranks(column);
      for (std::size_t a = 0; a < na; ++a) result.per_problem_ranks[p][a] += ranks[a];
    }
    for (std::size_t a = 0; a < na; ++a) {
      result.per_problem_ranks[p][a] /= static_cast<double>(matrix.repetitions);
      result.afv[a] += result.per_problem_ranks[p][a];
    }
  }
  for (auto& v : result.afv) v /= static_cast<double>(np);
  return result;
}

std::vector<WinTieLoss> win_tie_loss(const RunMatrix& matrix, std::size_t reference_index,
                                     double alpha) {
  const std::size_t na = matrix.algorithms.size();
  if (reference_index >= na)
    throw std::invalid_argument("win_tie_loss: reference index out of range");
  std::vector<WinTieLoss> out(na);
  for (std::size_t a = 0; a < na; ++a) {
    if (a == reference_index) continue;
    for (std::size_t p = 0; p < matrix.problems.size(); ++p) {
      const auto mine = matrix.samples(a, p);
      const auto ref = matrix.samples(reference_index, p);
      const auto test = wilcoxon_signed_rank(mine, ref);
      if (test.degenerate || test.p_two_sided >= alpha) {
        ++out[a].ties;
        continue;
      }
      const double mean_mine = ave_std(mine).mean;
      const double mean_ref = ave_std(ref).mean;
      if (mean_mine < mean_ref)
        ++out[a].wins;
      else
        ++out[a].losses;
    }
  }
  return out;
}

double overall_effectiveness(const WinTieLoss& wtl, std::size_t total) {
  if (wtl.wins + wtl.ties + wtl.losses != total)
    throw std::invalid_argument("overall_effectiveness: counts do not sum to total");
  if (total == 0) throw std::invalid_argument("overall_effectiveness: total must be > 0");
  return 100.0 * static_cast<double>(total - wtl.losses) / static_cast<double>(total);
}

}  // namespace geossa
