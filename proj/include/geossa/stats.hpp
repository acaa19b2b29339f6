#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace geossa {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  ///< sample standard deviation (n - 1 divisor)
};

/// Mean and sample standard deviation. Throws on fewer than two samples.
MeanStd ave_std(std::span<const double> samples);

/// Two-sided paired Wilcoxon signed-rank test.
///
/// Zero differences are dropped before ranking (their count is reported).
/// With effective n <= 25 the p-value is exact, computed by counting sign
/// assignments through a rank-sum distribution table; beyond that a normal
/// approximation with tie correction is used. When every difference is zero
/// the test is degenerate and p is meaningless (treated as a tie downstream).
/// Fewer than 5 effective pairs can never reach p < 0.05, so such tests run
/// but cannot reject.
struct WilcoxonResult {
  double w_plus = 0.0;          ///< rank sum of positive differences
  double p_two_sided = 1.0;
  std::size_t n_effective = 0;  ///< pairs remaining after dropping zeros
  std::size_t zeros_dropped = 0;
  bool exact = false;
  bool degenerate = false;
};

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

/// Final best-fitness tensor [algorithm][problem][repetition].
struct RunMatrix {
  std::vector<std::string> algorithms;
  std::vector<std::string> problems;
  std::size_t repetitions = 0;
  std::vector<double> values;  // dense, algorithm-major

  void resize() { values.assign(algorithms.size() * problems.size() * repetitions, 0.0); }
  double& at(std::size_t a, std::size_t p, std::size_t r);
  double at(std::size_t a, std::size_t p, std::size_t r) const;
  std::span<const double> samples(std::size_t a, std::size_t p) const;
};

/// Friedman ranking for minimization: within every repetition the algorithms
/// are ranked (ties averaged), per-problem ranks are means over repetitions,
/// and AFV is the mean rank over problems.
struct FriedmanResult {
  std::vector<std::vector<double>> per_problem_ranks;  // [problem][algorithm]
  std::vector<double> afv;                             // [algorithm]
};

FriedmanResult friedman_ranks(const RunMatrix& matrix);

/// Win/tie/loss of each algorithm against the reference, per problem:
/// tie when the Wilcoxon test is degenerate or p >= alpha, otherwise decided
/// by comparing means (lower wins). The reference's own slot stays zero.
struct WinTieLoss {
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;
};

std::vector<WinTieLoss> win_tie_loss(const RunMatrix& matrix, std::size_t reference_index,
                                     double alpha);

/// OE = (N - losses) / N * 100. Throws unless wins + ties + losses == total.
double overall_effectiveness(const WinTieLoss& wtl, std::size_t total);

}  // namespace geossa
