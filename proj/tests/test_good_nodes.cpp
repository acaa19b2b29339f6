#include <cmath>

#include "doctest.h"
#include "geossa/good_nodes.hpp"
#include "support.hpp"

using namespace geossa;
using geossa::testing::star_discrepancy_grid;

TEST_SUITE_BEGIN("good_nodes");

TEST_CASE("fractional-part identity with a custom generating vector") {
  const double r = 0.5;
  const auto pts = good_nodes_unit(2, 1, std::span<const double>(&r, 1));
  CHECK(pts[1][0] == 0.0);  // frac(2 * 0.5)
  CHECK(pts[0][0] == 0.5);
}

TEST_CASE("cyclotomic generating vector for dim 2 uses p = 7") {
  const auto r = good_nodes_generating_vector(2);
  // frac(2 cos(2 pi / 7)) and frac(2 cos(4 pi / 7)), evaluated independently.
  CHECK(r[0] == doctest::Approx(0.2469796037174672).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.5549581320873713).epsilon(1e-12));

  const auto pts = good_nodes_unit(3, 2);
  CHECK(pts[0][0] == doctest::Approx(0.2469796037174672).epsilon(1e-12));
  CHECK(pts[0][1] == doctest::Approx(0.5549581320873713).epsilon(1e-12));
}

TEST_CASE("all points live in the half-open unit cube") {
  const auto pts = good_nodes_unit(150, 5);
  for (const auto& p : pts)
    for (double c : p) {
      REQUIRE(c >= 0.0);
      REQUIRE(c < 1.0);
    }
}

TEST_CASE("init maps the unit set affinely and consumes no randomness") {
  const auto space = SearchSpace::cube(2, 0.0, 1.0);
  const auto pop = init_good_nodes(space, 12);
  const auto unit = good_nodes_unit(12, 2);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      REQUIRE(pop.members[i].position[j] == unit[i][j]);

  const auto wide = SearchSpace::cube(30, -100.0, 100.0);
  const auto big = init_good_nodes(wide, 30);
  for (const auto& m : big.members)
    REQUIRE(wide.contains(m.position));

  const auto again = init_good_nodes(wide, 30);
  for (std::size_t i = 0; i < 30; ++i)
    REQUIRE(big.members[i].position == again.members[i].position);

  CHECK_THROWS_AS(init_good_nodes(space, 1), std::invalid_argument);
}

TEST_CASE("pseudo-random init respects bounds and replays under one seed") {
  const auto space = SearchSpace::cube(2, 0.0, 1.0);
  RngStream rng(42, 0);
  const auto pop = init_pseudo_random(space, 3, rng);
  REQUIRE(pop.size() == 3);
  for (const auto& m : pop.members) REQUIRE(space.contains(m.position));

  RngStream r1(42, 5), r2(42, 5);
  const auto a = init_pseudo_random(space, 8, r1);
  const auto b = init_pseudo_random(space, 8, r2);
  for (std::size_t i = 0; i < 8; ++i)
    REQUIRE(a.members[i].position == b.members[i].position);

  CHECK_THROWS_AS(init_pseudo_random(space, 1, rng), std::invalid_argument);
}

TEST_CASE("150-point 2-D set beats the average pseudo-random discrepancy") {
  const auto good = good_nodes_unit(150, 2);
  const double good_disc = star_discrepancy_grid(good, 64);

  RngStream rng(42, 0);
  double total = 0.0;
  const int sets = 100;
  for (int s = 0; s < sets; ++s) {
    std::vector<std::vector<double>> pts(150, std::vector<double>(2));
    for (auto& p : pts) {
      p[0] = rng.uniform01();
      p[1] = rng.uniform01();
    }
    total += star_discrepancy_grid(pts, 64);
  }
  const double random_mean = total / sets;
  CHECK(good_disc < random_mean);
}

TEST_SUITE_END();
