#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <vector>

#include "stealth/geometry.hpp"

namespace stealth {

// Angles of the two-sensor / two-target problem: theta_k is the angle between
// the sensors seen from target k, beta_i the angle between the targets seen
// from sensor i.
struct QuadAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;

  double sum() const { return theta1 + theta2 + beta1 + beta2; }
};

// Requires exactly two sensors and two targets.
QuadAngles quad_angles(const Scenario& s);

inline constexpr double kCaseTolerance = 1e-7;

// Membership of a QuadAngles tuple in the seven constraint sets C1..C7 that
// together make up the geometrically feasible set.
struct CaseLabel {
  std::bitset<7> members;            // bit c-1 set <=> C_c holds
  std::array<double, 7> equality{};  // signed residual of the linear equation
  std::array<double, 7> slack{};     // rhs - lhs of the side inequality (C1: +inf)

  bool feasible() const { return members.any(); }
  bool has(int c) const { return members.test(static_cast<std::size_t>(c - 1)); }
  std::vector<int> labels() const;
};

// Equalities must hold within `tol`. Side inequalities must hold with margin
// `tol`: a tuple sitting exactly on an inequality boundary is a collinear
// limit of that case and is not reported for it.
CaseLabel classify_case(const QuadAngles& q, double tol = kCaseTolerance);

struct Lemma1Result {
  bool satisfied = false;
  double slack = 0.0;  // 2 pi - sum of the four angles
};

Lemma1Result lemma1_check(const QuadAngles& q, double tol = 1e-9);

// Sensors diametrically opposed on a circle of diameter `diameter` through
// t1 and t2, whose center lies left of t1 -> t2. `phase` rotates the sensor
// diameter away from the perpendicular bisector (0 = symmetric placement).
// Throws InfeasibleParameters when diameter < d / gamma and
// DegenerateGeometry when a sensor lands on a target.
Scenario theorem1_config(Point t1, Point t2, double gamma, double diameter, double phase = 0.0);

struct Theorem1Diagnostics {
  bool concyclic = false;
  bool diametral = false;
  bool diameter_ok = false;
  double concyclicity_residual = 0.0;  // normalized 4x4 in-circle determinant
  double circumdiameter = 0.0;
  double sensor_separation = 0.0;
  double required_diameter = 0.0;  // d / gamma
  // Redundant angle diagnostics, not part of the verdict.
  double theta1 = 0.0;
  double theta2 = 0.0;
  double sin_beta1 = 0.0;
  double sin_beta2 = 0.0;
  bool right_angles = false;
  bool equal_sin_beta = false;

  bool ok() const { return concyclic && diametral && diameter_ok; }
};

Theorem1Diagnostics verify_theorem1(const Scenario& s, double gamma);

// Parallelogram optimum with both sensors between the targets. s1 lies on the
// boundary arc left of t1 -> t2; `arc_fraction` in (0, 1) selects where on
// that arc (0.5 gives the rhombus). s2 is the point reflection of s1 through
// the midpoint of t1 t2. Throws InfeasibleParameters unless gamma in (0, 1).
Scenario theorem2_config(Point t1, Point t2, double gamma, double arc_fraction = 0.5);

enum class Oracle2x2Mode { kUnconstrained, kBothBetween };

struct Oracle2x2Result {
  double best = 0.0;  // max over the grid of min(I_1, I_2)
  Point s1;
  Point s2;
  std::size_t feasible_points = 0;
};

// Brute-force search over pairs of grid points (resolution x resolution,
// resolution >= 50) for the best stealth-feasible sensor pair. In
// kBothBetween mode only points seeing the targets at an angle >= pi/2 are
// admitted. Grid points within the degeneracy tolerance of a target are
// excluded.
Oracle2x2Result oracle_2x2(Point t1, Point t2, double gamma, Oracle2x2Mode mode, std::size_t resolution);

}  // namespace stealth
