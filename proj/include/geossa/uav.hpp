#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "geossa/objective.hpp"

namespace geossa {

using Point3 = std::array<double, 3>;

/// Static obstacle: a sphere around `center`, or a vertical cylinder whose
/// axis runs from center.z - height/2 to center.z + height/2. `clearance`
/// inflates the radius when measuring violations.
struct Obstacle {
  enum class Kind { Sphere, Cylinder };
  Kind kind = Kind::Sphere;
  Point3 center{};
  double radius = 0.0;
  double height = 0.0;
  double clearance = 0.0;

  /// Distance from p to the obstacle's center point (sphere) or axis segment
  /// (cylinder). A sample violates the obstacle when this falls below
  /// radius + clearance.
  double center_distance(const Point3& p) const;
};

/// Flight scene: bounding box, fixed endpoints, obstacle list. Loaded from a
/// small line-oriented text file (see data/terrain_default.txt).
struct Terrain {
  SearchSpace bounds;  // 3-dimensional
  Point3 start{};
  Point3 goal{};
  std::vector<Obstacle> obstacles;

  static Terrain load_file(const std::string& path);
  static Terrain parse(std::istream& in);

  /// Throws unless start and goal are inside the bounds and clear of every
  /// inflated obstacle.
  void validate() const;
};

/// Discretized route; first and last waypoints are the fixed endpoints.
struct Path {
  std::vector<Point3> waypoints;
};

/// Decision vector -> path: x holds `interior` waypoints as flat (x,y,z)
/// triples, clamped into the terrain bounds. `clamped`, when non-null,
/// reports whether any coordinate needed projection.
Path decode_path(std::span<const double> x, const Terrain& terrain, std::size_t interior,
                 bool* clamped = nullptr);

/// Sum of Euclidean segment lengths.
double path_length(const Path& p);

/// Population standard deviation of waypoint altitudes.
double height_cost(const Path& p);

/// Cumulative turning angle (radians) between consecutive segments.
/// Zero-length segments are skipped; the arccos argument is clamped to [-1,1].
double smoothness_cost(const Path& p);

/// Squared hinge penalty over sampled segment points against every inflated
/// obstacle: coeff * sum max(0, (radius+clearance) - dist)^2. Samples are the
/// fractions k/samples_per_segment, k = 1..samples_per_segment, of each
/// segment. Zero iff every sample clears every obstacle.
double obstacle_penalty(const Path& p, const Terrain& terrain,
                        std::size_t samples_per_segment = 10, double coeff = 1e3);

struct CostWeights {
  double length = 0.5;
  double height = 0.3;
  double smoothness = 0.2;
  void validate() const;  // nonnegative, sums to 1
};

/// Weighted composite objective plus the obstacle penalty.
double total_cost(std::span<const double> x, const Terrain& terrain,
                  const CostWeights& weights, std::size_t interior);

/// Package the scene as an optimizable problem of dimension 3 * interior.
ObjectiveProblem make_uav_problem(const Terrain& terrain, CostWeights weights = {},
                                  std::size_t interior = 8);

}  // namespace geossa
