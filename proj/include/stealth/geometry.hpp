#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stealth {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Rotates `p` counter-clockwise by `angle` radians about the origin.
Point rotate(Point p, double angle);

// Coincidence threshold, relative to the diameter of the point set involved.
inline constexpr double kDegeneracyRelTol = 1e-9;

struct Scenario {
  std::vector<Point> targets;
  std::vector<Point> sensors;
  double sigma = 1.0;

  // Largest pairwise distance over all targets and sensors.
  double diameter() const;
  double degeneracy_tolerance() const { return kDegeneracyRelTol * diameter(); }

  // Checks n >= 2, m >= 2, finite coordinates, sigma > 0 and that no sensor
  // sits on a target. Throws InvalidParameters or DegenerateGeometry.
  void validate() const;
};

// Values indexed by an unordered pair {i, j} (i != j) of `count` items and a
// third index in [0, depth). Used for theta[i<j][k] and beta[k<l][i].
class PairTensor {
 public:
  PairTensor() = default;
  PairTensor(std::size_t count, std::size_t depth);

  double& operator()(std::size_t i, std::size_t j, std::size_t k);
  double operator()(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t count() const { return count_; }
  std::size_t depth() const { return depth_; }
  std::size_t pairs() const { return count_ * (count_ - 1) / 2; }

 private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t count_ = 0;
  std::size_t depth_ = 0;
  std::vector<double> values_;
};

// Unsigned angle a-apex-b in [0, pi]. A negative `tolerance` selects the
// default 1e-9 times the diameter of the three points. Throws
// DegenerateGeometry when apex is within tolerance of a or b.
double subtended_angle(Point apex, Point a, Point b, double tolerance = -1.0);

struct ScenarioAngles {
  PairTensor theta;  // (sensor i, sensor j, target k)
  PairTensor beta;   // (target k, target l, sensor i)
};

ScenarioAngles angles_from_scenario(const Scenario& s);

// Heading-angle parameterization of m sensors relative to two targets.
// alpha[i] = {heading from t1, heading from t2}; positive means the sensor is
// right of the center-line walking t1 -> t2 (half-plane y < 0 in the
// canonical frame t1 = (0, 0), t2 = (d, 0)).
struct HeadingConfig {
  std::vector<std::array<double, 2>> alpha;
  double gamma = 1.0;

  std::size_t size() const { return alpha.size(); }
  double max_heading() const { return std::asin(gamma); }
  // Largest violation of the stealth, same-sign and magnitude constraints
  // (0 when feasible).
  double constraint_violation() const;
  // Throws InvalidParameters when gamma is outside (0, 1] or a constraint is
  // violated by more than `tolerance`.
  void validate(double tolerance = 1e-9) const;
};

struct HeadingAngles {
  PairTensor theta;          // (sensor i, sensor j, target k), k in {0, 1}
  std::vector<double> beta;  // per sensor
};

// theta_{ij,k} = |alpha_ik - alpha_jk|, beta_i = pi - |alpha_i1 + alpha_i2|.
HeadingAngles headings_to_pair_angles(const HeadingConfig& cfg);

// Realizes a heading configuration in the canonical frame with target
// separation d and sigma = 1. Throws DegenerateGeometry for rows whose rays
// are parallel or point to opposite sides, or whose sensor lands on a target.
Scenario positions_from_headings(const HeadingConfig& cfg, double d);

// Replaces exact-zero headings of a boundary row (x, 0) by (x - s*eps, s*eps)
// with s = sign(x), keeping alpha_1 + alpha_2 fixed. This realizes the
// sensors-at-targets limit of degenerate configurations as a nearby
// non-degenerate placement.
HeadingConfig nudge_degenerate_rows(const HeadingConfig& cfg, double eps);

// m sensors and n targets drawn uniformly from [-1, 1]^2, redrawn until every
// sensor is at least `min_separation` from every target and from every other
// sensor.
Scenario random_scenario(std::uint64_t seed, std::size_t m, std::size_t n, double sigma = 1.0,
                         double min_separation = 1e-3);
// As above with m and n themselves drawn uniformly from [2, max_size].
Scenario random_scenario(std::uint64_t seed, std::size_t max_size);

}  // namespace stealth
