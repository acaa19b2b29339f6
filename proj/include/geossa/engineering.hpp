#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geossa/objective.hpp"

namespace geossa {

enum class EngineeringId { CB, PL, RN, IRS };

std::optional<EngineeringId> engineering_from_name(std::string_view name);
std::string_view engineering_name(EngineeringId id);

/// Knobs of the penalty-method wrapping. penalty_coeff multiplies squared
/// inequality violations (and RN's printed inequality); equality_coeff
/// multiplies RN's squared equality residuals. theta is the piston-lever
/// geometry angle the problem statement leaves unassigned.
struct EngineeringOptions {
  double penalty_coeff = 1e3;
  double equality_coeff = 1e3;
  double theta = 0.7853981633974483;  // pi/4
  double tol_g = 1e-6;
  double tol_h = 1e-4;
  double guard_epsilon = 1e-12;
};

/// Everything one evaluation reveals: the raw objective, per-constraint
/// violations, the penalized value the optimizer sees, and feasibility at the
/// configured tolerances. `guarded` flags evaluations where a printed
/// denominator sat inside the epsilon guard.
struct ConstraintReport {
  double raw_objective = 0.0;
  std::vector<double> inequality_violations;  // max(0, g_i)
  std::vector<double> equality_residuals;     // |h_i| (RN only)
  double penalized_objective = 0.0;
  bool feasible = false;
  bool guarded = false;
};

ConstraintReport cb_evaluate(std::span<const double> x, const EngineeringOptions& opts = {});
ConstraintReport pl_evaluate(std::span<const double> x, const EngineeringOptions& opts = {});
ConstraintReport rn_evaluate(std::span<const double> x, const EngineeringOptions& opts = {});
ConstraintReport irs_evaluate(std::span<const double> x, const EngineeringOptions& opts = {});

ConstraintReport engineering_evaluate(EngineeringId id, std::span<const double> x,
                                      const EngineeringOptions& opts = {});

std::size_t engineering_dim(EngineeringId id);
SearchSpace engineering_space(EngineeringId id);

/// Packaged problem whose evaluate returns the penalized objective.
ObjectiveProblem make_engineering_problem(EngineeringId id,
                                          const EngineeringOptions& opts = {});

}  // namespace geossa
