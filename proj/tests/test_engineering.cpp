#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "geossa/engineering.hpp"
#include "support.hpp"

using namespace geossa;
using geossa::testing::relative_error;

namespace {
std::vector<double> V(std::initializer_list<double> v) { return {v}; }
}  // namespace

TEST_SUITE_BEGIN("engineering");

TEST_CASE("dimensions and variable ranges as printed") {
  CHECK(engineering_dim(EngineeringId::CB) == 4);
  CHECK(engineering_dim(EngineeringId::PL) == 4);
  CHECK(engineering_dim(EngineeringId::RN) == 6);
  CHECK(engineering_dim(EngineeringId::IRS) == 14);

  const auto cb = engineering_space(EngineeringId::CB);
  CHECK(cb.lower == std::vector<double>{1.0, 1.0, 1.0, 1.0});
  CHECK(cb.upper == std::vector<double>{100.0, 100.0, 100.0, 5.0});

  const auto irs = engineering_space(EngineeringId::IRS);
  CHECK(irs.lower == std::vector<double>(14, 0.001));
  CHECK(irs.upper == std::vector<double>(14, 5.0));

  const auto rn = engineering_space(EngineeringId::RN);
  CHECK(rn.upper[4] == 16.0);

  const auto pl = engineering_space(EngineeringId::PL);
  CHECK(pl.upper[2] == 120.0);
}

TEST_CASE("CB: constraint boundaries and zero-penalty identity") {
  // g5 boundary: x4 = 1.05 exactly.
  const auto boundary = cb_evaluate(V({1.0, 1.0, 1.0, 1.05}));
  CHECK(boundary.inequality_violations[4] == 0.0);

  // x2 > x3 flips g6 positive.
  const auto bad = cb_evaluate(V({10.0, 5.0, 2.0, 2.0}));
  CHECK(bad.inequality_violations[5] > 0.0);
  CHECK_FALSE(bad.feasible);

  // A feasible point: penalized equals raw exactly.
  const std::vector<double> feasible{57.69230769, 34.14762035, 57.69230769, 1.05};
  const auto rep = cb_evaluate(feasible);
  CHECK(rep.feasible);
  CHECK(rep.penalized_objective == rep.raw_objective);
  CHECK(relative_error(rep.raw_objective, 6.8429580100698795) < 1e-6);
}

TEST_CASE("PL: boundary of g4 and the pinned piston force") {
  // x3/2 == x2 puts g4 exactly on its boundary.
  const auto rep = pl_evaluate(V({10.0, 1.0, 2.0, 10.0}));
  CHECK(rep.inequality_violations[3] == 0.0);

  // F = 0.25 pi 1500 x3^2 at x3 = 1. The constant appears inside g1:
  // g1 = Q L cos(theta) - R F.
  const double f_at_one = 0.25 * std::numbers::pi * 1500.0;
  CHECK(relative_error(f_at_one, 1178.0972450961724) < 1e-12);

  // L1 and L2 are norms, so the raw objective is finite for any box point.
  const auto mid = pl_evaluate(V({250.0, 250.0, 60.0, 250.0}));
  CHECK(std::isfinite(mid.raw_objective));
}

TEST_CASE("RN: boundary, algebraic cancellation, reported optimum region") {
  // sqrt(4) + sqrt(4) - 4 = 0.
  const auto boundary = rn_evaluate(V({0.5, 0.5, 0.5, 0.5, 4.0, 4.0}));
  CHECK(boundary.inequality_violations[0] == 0.0);

  // h2 with x1 == x2 leaves exactly |k2 x2 x6|.
  constexpr double k2 = 0.99 * 0.09755988;
  const auto rep = rn_evaluate(V({0.4, 0.4, 0.2, 0.3, 1.0, 2.0}));
  CHECK(relative_error(rep.equality_residuals[1], k2 * 0.4 * 2.0) < 1e-12);

  // On the equality manifold the penalized value collapses to x4: given
  // (x5, x6) inside the g region, h1..h4 are linear in (x1..x4) with a unique
  // solution, constructed here explicitly.
  const double x5 = 13.0, x6 = 0.1;
  constexpr double k1 = 0.09755988, k3 = 0.0391908, k4 = 0.9 * k3;
  // h1 & h2: x1 = x2 (1 + k2 x6), x1 + k1 x2 x5 = 1.
  const double x2v = 1.0 / (1.0 + 0.99 * k1 * x6 + k1 * x5);
  const double x1v = x2v * (1.0 + 0.99 * k1 * x6);
  const double x3v = (1.0 - x1v) / (1.0 + k3 * x5);
  const double x4v = (x3v - x2v + x1v) / (1.0 + k4 * x6);
  const auto near = rn_evaluate(V({x1v, x2v, x3v, x4v, x5, x6}));
  CHECK(near.feasible);
  CHECK(relative_error(near.penalized_objective, near.raw_objective) < 1e-9);
}

TEST_CASE("IRS: constraint boundaries and totality on the open box") {
  std::vector<double> x(14, 2.5);
  x[8] = 2.0;  // g13 boundary: 2 / x9 - 1 = 0
  auto rep = irs_evaluate(x);
  CHECK(rep.inequality_violations[12] == 0.0);

  x = std::vector<double>(14, 2.5);
  x[10] = 1.7;
  x[11] = 1.7;  // g15 boundary: x12 / x11 - 1 = 0
  rep = irs_evaluate(x);
  CHECK(rep.inequality_violations[14] == 0.0);

  rep = irs_evaluate(std::vector<double>(14, 2.5));
  CHECK(std::isfinite(rep.raw_objective));
  for (double v : rep.inequality_violations) CHECK(std::isfinite(v));

  CHECK_THROWS_AS(irs_evaluate(std::vector<double>(14, -1.0)), std::domain_error);
}

TEST_CASE("penalty consistency: penalized >= raw with equality iff feasible-clean") {
  RngStream rng(17, 0);
  for (const auto id :
       {EngineeringId::CB, EngineeringId::PL, EngineeringId::RN, EngineeringId::IRS}) {
    const auto space = engineering_space(id);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(space.dim());
      for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = space.lower[j] + (space.upper[j] - space.lower[j]) * rng.uniform01();
      const auto rep = engineering_evaluate(id, x);
      REQUIRE(rep.penalized_objective >= rep.raw_objective);
      double violation_mass = 0.0;
      for (double v : rep.inequality_violations) violation_mass += v;
      for (double v : rep.equality_residuals) violation_mass += v;
      if (violation_mass == 0.0)
        REQUIRE(rep.penalized_objective == rep.raw_objective);
      else
        REQUIRE(rep.penalized_objective > rep.raw_objective);
    }
  }
}

TEST_CASE("feasibility is invariant under penalty scaling") {
  RngStream rng(23, 0);
  const auto space = engineering_space(EngineeringId::CB);
  EngineeringOptions low, high;
  high.penalty_coeff = 1e9;
  high.equality_coeff = 1e9;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(4);
    for (std::size_t j = 0; j < 4; ++j)
      x[j] = space.lower[j] + (space.upper[j] - space.lower[j]) * rng.uniform01();
    REQUIRE(cb_evaluate(x, low).feasible == cb_evaluate(x, high).feasible);
  }
}

TEST_CASE("formula fidelity against the shipped reference points") {
  std::ifstream in("data/engineering_reference_points.csv");
  REQUIRE_MESSAGE(in.good(), "data/engineering_reference_points.csv missing");
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "problem,point,quantity,index,value");

  std::size_t checked = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string problem, point, quantity, index_s, value_s;
    std::getline(ss, problem, ',');
    std::getline(ss, point, ',');
    std::getline(ss, quantity, ',');
    std::getline(ss, index_s, ',');
    std::getline(ss, value_s, ',');

    std::vector<double> x;
    std::stringstream ps(point);
    std::string coord;
    while (std::getline(ps, coord, ';')) x.push_back(std::stod(coord));

    const auto id = engineering_from_name(problem);
    REQUIRE(id.has_value());
    const auto rep = engineering_evaluate(*id, x);
    const double expected = std::stod(value_s);
    const auto index = static_cast<std::size_t>(std::stoul(index_s));

    double actual = 0.0;
    if (quantity == "f") actual = rep.raw_objective;
    else if (quantity == "g") actual = rep.inequality_violations.at(index);
    else if (quantity == "h") actual = rep.equality_residuals.at(index);
    else FAIL("unknown quantity ", quantity);
    REQUIRE_MESSAGE(relative_error(actual, expected) < 1e-12,
                    problem << " " << quantity << index_s << ": " << actual
                            << " vs " << expected);
    ++checked;
  }
  CHECK(checked >= 4 * 5);  // five points per problem, several quantities each
}

TEST_CASE("objective wrapper returns the penalized value") {
  const auto problem = make_engineering_problem(EngineeringId::CB);
  CHECK(problem.dim() == 4);
  const std::vector<double> x{10.0, 5.0, 2.0, 2.0};
  CHECK(problem.evaluate(x) == cb_evaluate(x).penalized_objective);
}

TEST_SUITE_END();
