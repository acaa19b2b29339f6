#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "geossa/objective.hpp"

namespace geossa {

enum class BenchmarkId {
  F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12,
  F13, F14, F15, F16, F17, F18, F19, F20, F21, F22, F23,
};

inline constexpr std::size_t kBenchmarkCount = 23;

enum class BenchmarkCategory { Unimodal, Multimodal, Composition };

/// Static metadata for one of the 23 standard test functions. Bounds are the
/// scalar box limits of the classical suite, expanded per dimension by
/// benchmark_space().
struct BenchmarkSpec {
  BenchmarkId id;
  std::string_view name;
  std::size_t dim;
  double lower;
  double upper;
  double best_value;
  BenchmarkCategory category;
};

const BenchmarkSpec& benchmark_spec(BenchmarkId id);
std::span<const BenchmarkSpec> all_benchmark_specs();
SearchSpace benchmark_space(BenchmarkId id);

/// Function label "F1".."F23" -> id.
std::optional<BenchmarkId> benchmark_from_name(std::string_view name);

/// Evaluate the function at x. Out-of-bounds probes are allowed (penalty
/// methods may ask) and return the true formula value; if `out_of_bounds` is
/// non-null it is set accordingly. F7's additive noise term draws from
/// `noise` when provided and is omitted when it is null (noise-free mode).
/// Throws std::invalid_argument on dimension mismatch.
double benchmark_evaluate(BenchmarkId id, std::span<const double> x,
                          RandomSource* noise = nullptr,
                          bool* out_of_bounds = nullptr);

ObjectiveProblem make_benchmark_problem(BenchmarkId id);

/// Fixed coefficient tables for F14, F15 and F19-F23. The classical published
/// constants, embedded once here and mirrored in data/benchmark_constants.csv
/// for cross-language comparison.
struct CoefficientTables {
  std::array<std::array<double, 25>, 2> foxholes_a;
  std::array<double, 11> kowalik_a;
  std::array<double, 11> kowalik_b;
  std::array<std::array<double, 3>, 4> hartman3_a;
  std::array<double, 4> hartman3_c;
  std::array<std::array<double, 3>, 4> hartman3_p;
  std::array<std::array<double, 6>, 4> hartman6_a;
  std::array<double, 4> hartman6_c;
  std::array<std::array<double, 6>, 4> hartman6_p;
  std::array<std::array<double, 4>, 10> shekel_a;
  std::array<double, 10> shekel_c;
};

const CoefficientTables& benchmark_coefficients();

/// One row per constant: table,row,col,value (17 significant digits).
void write_benchmark_constants_csv(std::ostream& out);

/// FNV-1a hash of the canonical CSV serialization; pinned by tests so any
/// accidental edit of the tables is caught.
std::uint64_t benchmark_constants_checksum();

}  // namespace geossa
