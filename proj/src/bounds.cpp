#include "stealth/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "stealth/errors.hpp"

namespace stealth {

namespace {

constexpr double kPi = std::numbers::pi;

void require(std::size_t m, double gamma) {
  if (m < 2) throw InvalidParameters("need at least 2 sensors");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidParameters("gamma must lie in (0, 1]");
}

double choose2(std::size_t k) { return 0.5 * static_cast<double>(k) * (static_cast<double>(k) - 1.0); }

double square(double v) { return v * v; }

// Upper bound on sin^2 of the heading difference of two sensors on opposite
// sides of the center-line.
double cross_side_cap(double gamma) {
  return gamma <= 1.0 / std::numbers::sqrt2 ? 4.0 * gamma * gamma * (1.0 - gamma * gamma) : 1.0;
}

}  // namespace

std::array<double, 2> pair_sums(const HeadingConfig& cfg) {
  std::array<double, 2> sums{0.0, 0.0};
  for (std::size_t i = 0; i < cfg.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.size(); ++j)
      for (std::size_t k = 0; k < 2; ++k) sums[k] += square(std::sin(cfg.alpha[i][k] - cfg.alpha[j][k]));
  return sums;
}

HeadingConfig degenerate_config(std::size_t m, double gamma) {
  require(m, gamma);
  const double a = std::asin(gamma);
  const std::array<std::array<double, 2>, 4> cycle{{{-a, 0.0}, {0.0, -a}, {a, 0.0}, {0.0, a}}};
  HeadingConfig cfg;
  cfg.gamma = gamma;
  const std::size_t paired = m - (m % 2);
  std::size_t left = 0;
  for (std::size_t i = 0; i < paired; ++i) {
    cfg.alpha.push_back(cycle[i % 4]);
    if (i % 4 < 2) ++left;
  }
  if (m % 2 == 1) {
    // Mid-arc sensor on the arc holding fewer sensors; ties go left.
    const bool right = paired - left < left;
    const double half = right ? 0.5 * a : -0.5 * a;
    cfg.alpha.push_back({half, half});
  }
  return cfg;
}

double degenerate_lower_bound(std::size_t m, double gamma) {
  require(m, gamma);
  const double g2 = gamma * gamma;
  const double md = static_cast<double>(m);
  const double even = 0.25 * md * md * g2 * (2.0 - g2);
  const double odd = 0.25 * (md - 1.0) * (2.0 - 2.0 * std::pow(1.0 - g2, 1.5) + (md - 1.0) * g2 * (2.0 - g2));
  switch (m % 4) {
    case 0:
      return even;
    case 1:
      return odd;
    case 2:
      return even - g2 + g2 * g2;
    default:
      return odd - g2 + g2 * g2 + g2 * std::sqrt(1.0 - g2);
  }
}

HeadingConfig uniform_config(std::size_t m, double gamma) {
  require(m, gamma);
  const double a = std::asin(gamma);
  const double delta = 2.0 * a / static_cast<double>(m);
  HeadingConfig cfg;
  cfg.gamma = gamma;
  for (std::size_t i = 0; i < m; ++i) {
    // Centered progression; the middle entry of odd m is exactly zero.
    const double first = 0.5 * (2.0 * static_cast<double>(i) - static_cast<double>(m - 1)) * delta;
    const double second = first <= 0.0 ? -a - first : a - first;
    cfg.alpha.push_back({first, second});
  }
  return cfg;
}

double uniform_pair_sum(std::size_t m, double delta) {
  double sum = 0.0;
  for (std::size_t k = 1; k < m; ++k) sum += static_cast<double>(m - k) * square(std::sin(static_cast<double>(k) * delta));
  return sum;
}

double uniform_lower_bound(std::size_t m, double gamma) {
  require(m, gamma);
  const double delta = 2.0 * std::asin(gamma) / static_cast<double>(m);
  // The closed form is 0/0 as delta -> 0.
  if (delta < 1e-6) return uniform_pair_sum(m, delta);
  const double md = static_cast<double>(m);
  return (md * md - 1.0 + std::cos(2.0 * md * delta) - md * md * std::cos(2.0 * delta)) /
         (8.0 * square(std::sin(delta)));
}

// The printed per-split bound multiplies the cross-side cap by m (m - p),
// but there are only p (m - p) cross-side pairs, and only that count
// reproduces the balanced-split closed form below.
double constraint_bound_for_split(std::size_t m, std::size_t p, double gamma) {
  require(m, gamma);
  if (p > m) throw InvalidParameters("split exceeds sensor count");
  const double same = choose2(p) + choose2(m - p);
  const double cross_pairs = static_cast<double>(p) * static_cast<double>(m - p);
  return same * gamma * gamma + cross_pairs * cross_side_cap(gamma);
}

double constraint_upper_bound(std::size_t m, double gamma) {
  require(m, gamma);
  const double md = static_cast<double>(m);
  const double g2 = gamma * gamma;
  if (gamma <= 1.0 / std::numbers::sqrt2) return 0.25 * md * g2 * (md * (5.0 - 4.0 * g2) - 2.0);
  return 0.25 * md * (md - 2.0 * g2 + md * g2);
}

double constraint_bound_integer_max(std::size_t m, double gamma) {
  double best = 0.0;
  for (std::size_t p = 0; p <= m; ++p) best = std::max(best, constraint_bound_for_split(m, p, gamma));
  return best;
}

double g_envelope(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("g_envelope argument outside [0, pi]");
  if (theta <= kEnvelopeBreak) return kEnvelopeSlope * theta;
  if (theta < kPi / 2) return square(std::sin(theta));
  return 1.0;
}

double jensen_upper_bound(std::size_t m, double gamma) {
  require(m, gamma);
  const double md = static_cast<double>(m);
  const double coefficient = m % 2 == 0 ? 3.0 * md / (4.0 * (md - 1.0)) : 3.0 * (md + 1.0) / (4.0 * md);
  const double argument = coefficient * std::asin(gamma);
  // coefficient <= 3/2 and asin(gamma) <= pi/2 keep the argument below pi.
  assert(argument <= kPi);
  return choose2(m) * g_envelope(std::min(argument, kPi));
}

BoundsReport BoundsReport::normalized() const {
  const double scale = 1.0 / (static_cast<double>(m) * static_cast<double>(m));
  BoundsReport out = *this;
  out.lb_degenerate *= scale;
  out.lb_uniform *= scale;
  out.ub_constraint *= scale;
  out.ub_jensen *= scale;
  out.best_lb *= scale;
  out.best_ub *= scale;
  return out;
}

BoundsReport best_bounds(std::size_t m, double gamma) {
  BoundsReport r;
  r.m = m;
  r.gamma = gamma;
  r.lb_degenerate = degenerate_lower_bound(m, gamma);
  r.lb_uniform = uniform_lower_bound(m, gamma);
  r.ub_constraint = constraint_upper_bound(m, gamma);
  r.ub_jensen = jensen_upper_bound(m, gamma);
  r.best_lb = std::max(r.lb_degenerate, r.lb_uniform);
  r.best_ub = std::min(r.ub_constraint, r.ub_jensen);
  return r;
}

std::vector<double> gamma_grid(double lo, double hi, std::size_t steps) {
  if (steps == 0) throw InvalidParameters("need at least one gamma step");
  if (!(lo > 0.0 && hi <= 1.0 && lo <= hi)) throw InvalidParameters("gamma range must satisfy 0 < min <= max <= 1");
  if (steps == 1) return {hi};
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  out.back() = hi;
  return out;
}

std::vector<BoundsReport> bounds_sweep(std::span<const std::size_t> sensor_counts, std::span<const double> gammas) {
  std::vector<BoundsReport> rows;
  rows.reserve(sensor_counts.size() * gammas.size());
  for (std::size_t m : sensor_counts)
    for (double g : gammas) rows.push_back(best_bounds(m, g));
  return rows;
}

AsymptoticBounds asymptotic_bounds(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidParameters("gamma must lie in (0, 1]");
  const double a = std::asin(gamma);
  const double g2 = gamma * gamma;
  AsymptoticBounds out;
  out.lb_degenerate = 0.25 * g2 * (2.0 - g2);
  out.lb_uniform = 0.25 - square(std::sin(2.0 * a)) / (16.0 * a * a);
  out.ub_constraint = gamma <= 1.0 / std::numbers::sqrt2 ? 0.25 * g2 * (5.0 - 4.0 * g2) : 0.25 * (1.0 + g2);
  out.ub_jensen = 0.5 * g_envelope(0.75 * a);
  return out;
}

}  // namespace stealth
