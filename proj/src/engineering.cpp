#include "geossa/engineering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace geossa {

namespace {

void require_dim(std::span<const double> x, std::size_t dim, std::string_view name) {
  if (x.size() != dim)
    throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(dim) +
                                " variables, got " + std::to_string(x.size()));
}

// Replaces a denominator inside the guard band by +-epsilon.
double guard(double denom, double epsilon, bool* fired) {
  if (std::abs(denom) < epsilon) {
    if (fired) *fired = true;
    return denom < 0.0 ? -epsilon : epsilon;
  }
  return denom;
}

ConstraintReport assemble(double raw, std::vector<double> g_values,
                          std::vector<double> h_residuals, const EngineeringOptions& opts,
                          bool guarded) {
  ConstraintReport report;
  report.raw_objective = raw;
  report.guarded = guarded;
  report.inequality_violations.reserve(g_values.size());
  double penalty = 0.0;
  bool feasible = true;
  for (double g : g_values) {
    const double v = std::max(0.0, g);
    report.inequality_violations.push_back(v);
    penalty += opts.penalty_coeff * v * v;
    if (v > opts.tol_g) feasible = false;
  }
  report.equality_residuals.reserve(h_residuals.size());
  for (double h : h_residuals) {
    const double r = std::abs(h);
    report.equality_residuals.push_back(r);
    penalty += opts.equality_coeff * r * r;
    if (r > opts.tol_h) feasible = false;
  }
  report.penalized_objective = raw + penalty;
  report.feasible = feasible;
  return report;
}

}  // namespace

std::optional<EngineeringId> engineering_from_name(std::string_view name) {
  if (name == "CB") return EngineeringId::CB;
  if (name == "PL") return EngineeringId::PL;
  if (name == "RN") return EngineeringId::RN;
  if (name == "IRS") return EngineeringId::IRS;
  return std::nullopt;
}

std::string_view engineering_name(EngineeringId id) {
  switch (id) {
    case EngineeringId::CB: return "CB";
    case EngineeringId::PL: return "PL";
    case EngineeringId::RN: return "RN";
    case EngineeringId::IRS: return "IRS";
  }
  throw std::invalid_argument("engineering_name: unknown id");
}

ConstraintReport cb_evaluate(std::span<const double> x, const EngineeringOptions& opts) {
  require_dim(x, 4, "cb_evaluate");
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  bool guarded = false;

  const double root = std::sqrt(std::abs(x3 * x3 - x2 * x2));
  const double denom = guard(x1 + root, opts.guard_epsilon, &guarded);
  const double raw = 5.885 * x4 * (x1 + x3) / denom;

  const double span8 = 8.94 * (x1 + root);
  std::vector<double> g{
      -x4 * x2 * (0.4 * x1 + x3 / 6.0) + span8,
      -x4 * x2 * x2 * (0.2 * x1 + x3 / 12.0) + 2.2 * std::pow(span8, 4.0 / 3.0),
      -x4 + 0.0156 * x1 + 0.15,
      -x4 + 0.0156 * x3 + 0.15,
      -x4 + 1.05,
      -x3 + x2,
  };
  return assemble(raw, std::move(g), {}, opts, guarded);
}

ConstraintReport pl_evaluate(std::span<const double> x, const EngineeringOptions& opts) {
  require_dim(x, 4, "pl_evaluate");
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  const double theta = opts.theta;
  bool guarded = false;

  constexpr double Q = 10000.0;
  constexpr double P = 1500.0;
  constexpr double lever = 240.0;
  constexpr double moment_max = 1.8e6;

  const double force = 0.25 * std::numbers::pi * P * x3 * x3;
  const double l1 = std::sqrt((x4 - x2) * (x4 - x2) + x1 * x1);
  const double l2 = std::sqrt(std::pow(x4 * std::sin(theta) + x1, 2) +
                              std::pow(x2 - x4 * std::cos(theta), 2));
  const double r_num =
      std::abs(-x4 * (x4 * std::sin(theta) + x1) + x1 * (x2 - x4 * std::cos(theta)));
  const double r = r_num / guard(l1, opts.guard_epsilon, &guarded);

  const double raw = 0.25 * std::numbers::pi * x3 * x3 * (l2 - l1);
  std::vector<double> g{
      Q * lever * std::cos(theta) - r * force,
      Q * (lever - x4) - moment_max,
      1.2 * (l2 - l1) - l1,
      x3 / 2.0 - x2,
  };
  return assemble(raw, std::move(g), {}, opts, guarded);
}

ConstraintReport rn_evaluate(std::span<const double> x, const EngineeringOptions& opts) {
  require_dim(x, 6, "rn_evaluate");
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5];
  for (double v : x)
    if (v < 0.0) throw std::domain_error("rn_evaluate: variables must be nonnegative");

  constexpr double k1 = 0.09755988;
  constexpr double k2 = 0.99 * k1;
  constexpr double k3 = 0.0391908;
  constexpr double k4 = 0.9 * k3;

  std::vector<double> g{std::sqrt(x5) + std::sqrt(x6) - 4.0};
  std::vector<double> h{
      x1 + k1 * x2 * x5 - 1.0,
      x2 - x1 + k2 * x2 * x6,
      x3 + x1 + k3 * x3 * x5 - 1.0,
      x4 - x3 + x2 - x1 + k4 * x4 * x6,
  };
  return assemble(x4, std::move(g), std::move(h), opts, false);
}

ConstraintReport irs_evaluate(std::span<const double> x, const EngineeringOptions& opts) {
  require_dim(x, 14, "irs_evaluate");
  for (double v : x)
    if (v <= 0.0) throw std::domain_error("irs_evaluate: variables must be positive");
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5],
               x7 = x[6], x8 = x[7], x9 = x[8], x10 = x[9], x11 = x[10], x12 = x[11],
               x13 = x[12], x14 = x[13];

  const double raw =
      63098.88 * x2 * x4 * x12 + 5441.5 * x2 * x2 * x12 +
      115055.5 * std::pow(x2, 1.664) * x6 + 6172.27 * x2 * x2 * x6 +
      63098.88 * x1 * x3 * x11 + 5441.5 * x1 * x1 * x11 +
      115055.5 * std::pow(x1, 1.664) * x5 + 6172.27 * x1 * x1 * x5 +
      140.53 * x1 * x11 + 281.29 * x3 * x11 + 70.26 * x1 * x1 +
      281.29 * x1 * x3 + 281.29 * x3 * x3 +
      14437.0 * std::pow(x8, 1.8812) * std::pow(x12, 0.3424) * x10 * x1 * x1 * x7 /
          (x14 * x9) +
      20470.2 * std::pow(x7, 2.893) * std::pow(x11, 0.316) * x12;

  std::vector<double> g{
      1.524 / x7 - 1.0,
      1.524 / x8 - 1.0,
      0.07789 * x1 - 2.0 * x9 / x7 - 1.0,
      7.05305 * x1 * x1 * x10 / (x9 * x8 * x2 * x14) - 1.0,
      0.0833 * x14 / x13 - 1.0,
      47.136 * std::pow(x2, 0.333) * x12 / x10 - 1.333 * x8 * std::pow(x13, 2.1195) +
          62.08 * std::pow(x13, 2.1195) * std::pow(x8, 0.2) / (x12 * x10) - 1.0,
      0.04771 * x10 * std::pow(x8, 1.8812) * std::pow(x12, 0.3424) - 1.0,
      0.0488 * x9 * std::pow(x7, 1.893) * std::pow(x11, 0.316) - 1.0,
      0.0099 * x1 / x3 - 1.0,
      0.0193 * x2 / x4 - 1.0,
      0.0298 * x1 / x5 - 1.0,
      0.056 * x2 / x6 - 1.0,
      2.0 / x9 - 1.0,
      2.0 / x10 - 1.0,
      x12 / x11 - 1.0,
  };
  return assemble(raw, std::move(g), {}, opts, false);
}

ConstraintReport engineering_evaluate(EngineeringId id, std::span<const double> x,
                                      const EngineeringOptions& opts) {
  switch (id) {
    case EngineeringId::CB: return cb_evaluate(x, opts);
    case EngineeringId::PL: return pl_evaluate(x, opts);
    case EngineeringId::RN: return rn_evaluate(x, opts);
    case EngineeringId::IRS: return irs_evaluate(x, opts);
  }
  throw std::invalid_argument("engineering_evaluate: unknown id");
}

std::size_t engineering_dim(EngineeringId id) {
  switch (id) {
    case EngineeringId::CB: return 4;
    case EngineeringId::PL: return 4;
    case EngineeringId::RN: return 6;
    case EngineeringId::IRS: return 14;
  }
  throw std::invalid_argument("engineering_dim: unknown id");
}

SearchSpace engineering_space(EngineeringId id) {
  switch (id) {
    case EngineeringId::CB:
      return SearchSpace({1.0, 1.0, 1.0, 1.0}, {100.0, 100.0, 100.0, 5.0});
    case EngineeringId::PL:
      return SearchSpace({0.05, 0.05, 0.05, 0.05}, {500.0, 500.0, 120.0, 500.0});
    case EngineeringId::RN:
      return SearchSpace({1e-5, 1e-5, 1e-5, 1e-5, 1e-5, 1e-5},
                         {1.0, 1.0, 1.0, 1.0, 16.0, 16.0});
    case EngineeringId::IRS:
      return SearchSpace(std::vector<double>(14, 0.001), std::vector<double>(14, 5.0));
  }
  throw std::invalid_argument("engineering_space: unknown id");
}

ObjectiveProblem make_engineering_problem(EngineeringId id, const EngineeringOptions& opts) {
  ObjectiveProblem problem;
  problem.name = std::string(engineering_name(id));
  problem.space = engineering_space(id);
  problem.eval = [id, opts](std::span<const double> x, RandomSource*) {
    return engineering_evaluate(id, x, opts).penalized_objective;
  };
  return problem;
}

}  // namespace geossa
