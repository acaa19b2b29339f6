#include "geossa/uav.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace geossa {

namespace {

double dist3(const Point3& a, const Point3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Point3 lerp(const Point3& a, const Point3& b, double s) {
  return {a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]), a[2] + s * (b[2] - a[2])};
}

}  // namespace

double Obstacle::center_distance(const Point3& p) const {
  if (kind == Kind::Sphere) return dist3(p, center);
  // Point-to-segment distance against the vertical axis.
  const double half = height / 2.0;
  const double z_lo = center[2] - half, z_hi = center[2] + half;
  const double z = std::clamp(p[2], z_lo, z_hi);
  return dist3(p, {center[0], center[1], z});
}

Terrain Terrain::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("terrain: cannot open " + path);
  return parse(in);
}

Terrain Terrain::parse(std::istream& in) {
  Terrain terrain;
  std::array<double, 3> lo{}, hi{};
  bool have_bounds = false, have_start = false, have_goal = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    auto fail = [&](const std::string& what) {
      throw std::runtime_error("terrain: line " + std::to_string(line_no) + ": " + what);
    };

    if (key == "bounds") {
      if (!(ls >> lo[0] >> hi[0] >> lo[1] >> hi[1] >> lo[2] >> hi[2]))
        fail("expected 6 numbers after 'bounds'");
      have_bounds = true;
    } else if (key == "start" || key == "goal") {
      Point3 p;
      if (!(ls >> p[0] >> p[1] >> p[2])) fail("expected 3 numbers after '" + key + "'");
      (key == "start" ? terrain.start : terrain.goal) = p;
      (key == "start" ? have_start : have_goal) = true;
    } else if (key == "sphere" || key == "cylinder") {
      Obstacle o;
      o.kind = key == "sphere" ? Obstacle::Kind::Sphere : Obstacle::Kind::Cylinder;
      if (!(ls >> o.center[0] >> o.center[1] >> o.center[2] >> o.radius))
        fail("expected center and radius after '" + key + "'");
      if (o.kind == Obstacle::Kind::Cylinder && !(ls >> o.height))
        fail("cylinder needs a height");
      if (!(ls >> o.clearance)) fail("missing clearance");
      if (!(o.radius > 0.0)) fail("radius must be positive");
      if (o.clearance < 0.0) fail("clearance must be nonnegative");
      terrain.obstacles.push_back(o);
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  if (!have_bounds || !have_start || !have_goal)
    throw std::runtime_error("terrain: bounds, start and goal records are required");
  terrain.bounds = SearchSpace({lo[0], lo[1], lo[2]}, {hi[0], hi[1], hi[2]});
  terrain.validate();
  return terrain;
}

void Terrain::validate() const {
  for (const Point3* p : {&start, &goal}) {
    if (!bounds.contains(std::span<const double>(p->data(), 3)))
      throw std::runtime_error("terrain: endpoint outside bounds");
    for (const auto& o : obstacles)
      if (o.center_distance(*p) < o.radius + o.clearance)
        throw std::runtime_error("terrain: endpoint inside an inflated obstacle");
  }
}

Path decode_path(std::span<const double> x, const Terrain& terrain, std::size_t interior,
                 bool* clamped) {
  if (x.size() != 3 * interior)
    throw std::invalid_argument("decode_path: expected " + std::to_string(3 * interior) +
                                " coordinates, got " + std::to_string(x.size()));
  if (clamped) *clamped = false;
  Path p;
  p.waypoints.reserve(interior + 2);
  p.waypoints.push_back(terrain.start);
  for (std::size_t k = 0; k < interior; ++k) {
    Point3 w;
    for (std::size_t c = 0; c < 3; ++c) {
      const double raw = x[3 * k + c];
      w[c] = std::min(terrain.bounds.upper[c], std::max(terrain.bounds.lower[c], raw));
      if (clamped && w[c] != raw) *clamped = true;
    }
    p.waypoints.push_back(w);
  }
  p.waypoints.push_back(terrain.goal);
  return p;
}

double path_length(const Path& p) {
  double total = 0.0;
  for (std::size_t m = 0; m + 1 < p.waypoints.size(); ++m)
    total += dist3(p.waypoints[m], p.waypoints[m + 1]);
  return total;
}

double height_cost(const Path& p) {
  const std::size_t g = p.waypoints.size();
  if (g == 0) throw std::invalid_argument("height_cost: empty path");
  double mean = 0.0;
  for (const auto& w : p.waypoints) mean += w[2];
  mean /= static_cast<double>(g);
  double var = 0.0;
  for (const auto& w : p.waypoints) {
    const double d = w[2] - mean;
    var += d * d;
  }
  return std::sqrt(var / static_cast<double>(g));
}

double smoothness_cost(const Path& p) {
  const std::size_t g = p.waypoints.size();
  if (g < 3) return 0.0;
  double total = 0.0;
  for (std::size_t m = 0; m + 2 < g; ++m) {
    const auto& a = p.waypoints[m];
    const auto& b = p.waypoints[m + 1];
    const auto& c = p.waypoints[m + 2];
    const Point3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const Point3 v{c[0] - b[0], c[1] - b[1], c[2] - b[2]};
    const double nu = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    const double nv = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (nu == 0.0 || nv == 0.0) continue;  // duplicated waypoint, no turn defined
    const double dot = (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) / (nu * nv);
    total += std::acos(std::clamp(dot, -1.0, 1.0));
  }
  return total;
}

double obstacle_penalty(const Path& p, const Terrain& terrain,
                        std::size_t samples_per_segment, double coeff) {
  if (samples_per_segment == 0)
    throw std::invalid_argument("obstacle_penalty: need at least one sample per segment");
  double total = 0.0;
  for (std::size_t m = 0; m + 1 < p.waypoints.size(); ++m) {
    for (std::size_t k = 1; k <= samples_per_segment; ++k) {
      const double s = static_cast<double>(k) / static_cast<double>(samples_per_segment);
      const Point3 sample = lerp(p.waypoints[m], p.waypoints[m + 1], s);
      for (const auto& o : terrain.obstacles) {
        const double gap = (o.radius + o.clearance) - o.center_distance(sample);
        if (gap > 0.0) total += gap * gap;
      }
    }
  }
  return coeff * total;
}

void CostWeights::validate() const {
  if (length < 0.0 || height < 0.0 || smoothness < 0.0)
    throw std::invalid_argument("CostWeights: weights must be nonnegative");
  if (std::abs(length + height + smoothness - 1.0) > 1e-12)
    throw std::invalid_argument("CostWeights: weights must sum to 1");
}

double total_cost(std::span<const double> x, const Terrain& terrain,
                  const CostWeights& weights, std::size_t interior) {
  weights.validate();
  const Path p = decode_path(x, terrain, interior);
  return weights.length * path_length(p) + weights.height * height_cost(p) +
         weights.smoothness * smoothness_cost(p) + obstacle_penalty(p, terrain);
}

ObjectiveProblem make_uav_problem(const Terrain& terrain, CostWeights weights,
                                  std::size_t interior) {
  weights.validate();
  if (interior == 0) throw std::invalid_argument("make_uav_problem: interior must be >= 1");
  std::vector<double> lo, hi;
  lo.reserve(3 * interior);
  hi.reserve(3 * interior);
  for (std::size_t k = 0; k < interior; ++k)
    for (std::size_t c = 0; c < 3; ++c) {
      lo.push_back(terrain.bounds.lower[c]);
      hi.push_back(terrain.bounds.upper[c]);
    }
  ObjectiveProblem problem;
  problem.name = "uav";
  problem.space = SearchSpace(std::move(lo), std::move(hi));
  problem.eval = [terrain, weights, interior](std::span<const double> x, RandomSource*) {
    return total_cost(x, terrain, weights, interior);
  };
  return problem;
}

}  // namespace geossa
