#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stealth/geometry.hpp"

namespace stealth {

// D-optimality of every target (as localized by the sensors) and of every
// sensor (as localized by the targets).
struct FimReport {
  std::vector<double> target_info;  // I_k = sigma^-4 * sum_{i<j} sin^2 theta_{ij,k}
  std::vector<double> sensor_info;  // J_i = sigma^-4 * sum_{k<l} sin^2 beta_{kl,i}
  double objective = 0.0;           // min_k I_k
  double leakage = 0.0;             // max_i J_i
};

FimReport det_fim(const Scenario& s);

// Determinant of the 2x2 range-only FIM sigma^-2 * sum_i u_i u_i^T for one
// target, built directly from the unit vectors u_i (target -> sensor i).
double empirical_fim_det(const Scenario& s, std::size_t target_index);

// Largest relative disagreement, over all targets, between the pair-sum
// D-optimality of det_fim and the assembled-FIM determinant.
double fim_identity_error(const Scenario& s);

struct Rect {
  double xmin = -1.0;
  double xmax = 1.0;
  double ymin = -1.0;
  double ymax = 1.0;
};

// Boolean raster of the stealth constraint sum_{k<l} sin^2 beta_kl(p) <= gamma^2
// for a single candidate sensor position p. Row 0 is the top (ymax) row;
// each cell is classified by its center.
struct RegionRaster {
  Rect bounds;
  std::size_t resolution = 0;
  double gamma = 1.0;
  std::vector<std::uint8_t> mask;  // 1 = feasible, row-major
  std::vector<double> field;       // constraint value sum sin^2, NaN at targets

  bool feasible(std::size_t row, std::size_t col) const { return mask[row * resolution + col] != 0; }
  double value(std::size_t row, std::size_t col) const { return field[row * resolution + col]; }
  Point cell_center(std::size_t row, std::size_t col) const;
  std::size_t feasible_count() const;
};

// Square window centered on the target centroid, reaching seven times the
// largest centroid-to-target distance in each direction. The constraint
// field decays like 1/r^2, so the far feasible region shows up for small
// gamma too.
Rect default_region_bounds(std::span<const Point> targets);

RegionRaster stealth_region_raster(std::span<const Point> targets, double gamma, const Rect& bounds,
                                   std::size_t resolution);

// Number of 4-connected components of feasible cells.
std::size_t count_components(const RegionRaster& raster);

// True iff the angle s1-p-s2 lies in [asin(eta), pi - asin(eta)], i.e. a
// target at p gives the sensor pair an objective of at least eta^2.
bool eta_region_test(Point p, Point s1, Point s2, double eta);

}  // namespace stealth
