#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stealth/geometry.hpp"

namespace stealth {

// Analytic bounds on the optimal eta^2 for m sensors localizing two targets
// under leakage level gamma. All functions throw InvalidParameters for
// m < 2 or gamma outside (0, 1].

// Per-target pair sums sum_{i<j} sin^2(alpha_ik - alpha_jk), k = 0, 1.
std::array<double, 2> pair_sums(const HeadingConfig& cfg);

// Sensors pushed against the targets along the boundary arcs, two per arc
// alternately, plus one mid-arc sensor when m is odd.
HeadingConfig degenerate_config(std::size_t m, double gamma);
double degenerate_lower_bound(std::size_t m, double gamma);

// Sensors spread along the boundary arcs with equal heading spacing
// delta = 2 asin(gamma) / m.
HeadingConfig uniform_config(std::size_t m, double gamma);
double uniform_lower_bound(std::size_t m, double gamma);
// sum_{k=1}^{m-1} (m - k) sin^2(k delta).
double uniform_pair_sum(std::size_t m, double delta);

// Bound for p sensors on one side and m - p on the other:
// (C(p,2) + C(m-p,2)) gamma^2 + p (m - p) c(gamma).
double constraint_bound_for_split(std::size_t m, std::size_t p, double gamma);
// Closed form obtained at the balanced split p = m / 2.
double constraint_upper_bound(std::size_t m, double gamma);
// max over integer p in [0, m] of constraint_bound_for_split.
double constraint_bound_integer_max(std::size_t m, double gamma);

// Concave non-decreasing majorant of sin^2 on [0, pi]. Throws DomainError
// outside that interval.
double g_envelope(double theta);
inline constexpr double kEnvelopeSlope = 0.724611;
inline constexpr double kEnvelopeBreak = 1.16556;

double jensen_upper_bound(std::size_t m, double gamma);

struct BoundsReport {
  std::size_t m = 0;
  double gamma = 0.0;
  double lb_degenerate = 0.0;
  double lb_uniform = 0.0;
  double ub_constraint = 0.0;
  double ub_jensen = 0.0;
  double best_lb = 0.0;
  double best_ub = 0.0;

  // eta^2 / m^2, the scaling used when comparing different m.
  BoundsReport normalized() const;
};

BoundsReport best_bounds(std::size_t m, double gamma);

// `steps` evenly spaced values from lo to hi inclusive; a single step yields
// just hi.
std::vector<double> gamma_grid(double lo, double hi, std::size_t steps);

// best_bounds for every (m, gamma) pair, m-major.
std::vector<BoundsReport> bounds_sweep(std::span<const std::size_t> sensor_counts, std::span<const double> gammas);

// Limits of eta^2 / m^2 as m -> infinity for each of the four bounds.
struct AsymptoticBounds {
  double lb_degenerate = 0.0;
  double lb_uniform = 0.0;  // 1/4 - sin^2(2a) / (16 a^2), a = asin(gamma)
  double ub_constraint = 0.0;
  double ub_jensen = 0.0;
};

AsymptoticBounds asymptotic_bounds(double gamma);

}  // namespace stealth
