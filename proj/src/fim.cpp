#include "stealth/fim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stealth/errors.hpp"
#include "stealth/parallel.hpp"

namespace stealth {

namespace {

double square(double v) { return v * v; }

}  // namespace

FimReport det_fim(const Scenario& s) {
  const ScenarioAngles angles = angles_from_scenario(s);
  const std::size_t m = s.sensors.size();
  const std::size_t n = s.targets.size();
  const double scale = 1.0 / square(square(s.sigma));

  FimReport r;
  r.target_info.assign(n, 0.0);
  r.sensor_info.assign(m, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) r.target_info[k] += square(std::sin(angles.theta(i, j, k)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) r.sensor_info[i] += square(std::sin(angles.beta(k, l, i)));
  for (double& v : r.target_info) v *= scale;
  for (double& v : r.sensor_info) v *= scale;
  r.objective = *std::min_element(r.target_info.begin(), r.target_info.end());
  r.leakage = *std::max_element(r.sensor_info.begin(), r.sensor_info.end());
  return r;
}

double empirical_fim_det(const Scenario& s, std::size_t target_index) {
  if (s.sensors.size() < 2) throw InvalidParameters("empirical FIM needs at least 2 sensors");
  if (target_index >= s.targets.size()) throw InvalidParameters("target index out of range");
  if (!(s.sigma > 0.0)) throw InvalidParameters("sigma must be positive");
  const Point t = s.targets[target_index];
  const double tol = s.degeneracy_tolerance();
  double fxx = 0.0, fxy = 0.0, fyy = 0.0;
  for (const Point& sensor : s.sensors) {
    const Point r = sensor - t;
    const double len = norm(r);
    if (len <= tol) throw DegenerateGeometry("sensor coincides with target " + std::to_string(target_index));
    const double ux = r.x / len;
    const double uy = r.y / len;
    fxx += ux * ux;
    fxy += ux * uy;
    fyy += uy * uy;
  }
  const double inv_var = 1.0 / square(s.sigma);
  fxx *= inv_var;
  fxy *= inv_var;
  fyy *= inv_var;
  return fxx * fyy - fxy * fxy;
}

double fim_identity_error(const Scenario& s) {
  const FimReport report = det_fim(s);
  double worst = 0.0;
  for (std::size_t k = 0; k < s.targets.size(); ++k) {
    const double direct = empirical_fim_det(s, k);
    const double scale = std::max({std::abs(direct), std::abs(report.target_info[k]),
                                   std::numeric_limits<double>::min()});
    worst = std::max(worst, std::abs(direct - report.target_info[k]) / scale);
  }
  return worst;
}

Point RegionRaster::cell_center(std::size_t row, std::size_t col) const {
  const double hx = (bounds.xmax - bounds.xmin) / static_cast<double>(resolution);
  const double hy = (bounds.ymax - bounds.ymin) / static_cast<double>(resolution);
  return {bounds.xmin + (static_cast<double>(col) + 0.5) * hx, bounds.ymax - (static_cast<double>(row) + 0.5) * hy};
}

std::size_t RegionRaster::feasible_count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

Rect default_region_bounds(std::span<const Point> targets) {
  if (targets.empty()) throw InvalidParameters("no targets");
  Point c{0.0, 0.0};
  for (const Point& t : targets) c = c + t;
  c = (1.0 / static_cast<double>(targets.size())) * c;
  double reach = 0.0;
  for (const Point& t : targets) reach = std::max(reach, distance(c, t));
  const double h = reach > 0.0 ? 7.0 * reach : 1.0;
  return {c.x - h, c.x + h, c.y - h, c.y + h};
}

RegionRaster stealth_region_raster(std::span<const Point> targets, double gamma, const Rect& bounds,
                                   std::size_t resolution) {
  if (targets.size() < 2) throw InvalidParameters("region raster needs at least 2 targets");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidParameters("gamma must lie in (0, 1]");
  if (resolution < 2) throw InvalidParameters("resolution must be at least 2");
  if (!(bounds.xmax > bounds.xmin && bounds.ymax > bounds.ymin)) throw InvalidParameters("empty raster bounds");

  RegionRaster raster;
  raster.bounds = bounds;
  raster.resolution = resolution;
  raster.gamma = gamma;
  raster.mask.assign(resolution * resolution, 0);
  raster.field.assign(resolution * resolution, std::numeric_limits<double>::quiet_NaN());

  double scale = std::hypot(bounds.xmax - bounds.xmin, bounds.ymax - bounds.ymin);
  for (std::size_t k = 0; k < targets.size(); ++k)
    for (std::size_t l = k + 1; l < targets.size(); ++l) scale = std::max(scale, distance(targets[k], targets[l]));
  const double tol = kDegeneracyRelTol * scale;
  const double level = gamma * gamma;

  parallel_for(resolution, resolution, [&](std::size_t row_begin, std::size_t row_end, std::size_t) {
    std::vector<Point> rays(targets.size());
    for (std::size_t row = row_begin; row < row_end; ++row) {
      for (std::size_t col = 0; col < resolution; ++col) {
        const Point p = raster.cell_center(row, col);
        bool degenerate = false;
        for (std::size_t k = 0; k < targets.size(); ++k) {
          rays[k] = targets[k] - p;
          degenerate = degenerate || norm(rays[k]) <= tol;
        }
        if (degenerate) continue;
        double sum = 0.0;
        for (std::size_t k = 0; k < targets.size(); ++k)
          for (std::size_t l = k + 1; l < targets.size(); ++l) {
            // sin^2 of the angle between the rays, from cross and dot directly.
            const double c = cross(rays[k], rays[l]);
            const double d = dot(rays[k], rays[l]);
            sum += c * c / (c * c + d * d);
          }
        const std::size_t idx = row * resolution + col;
        raster.field[idx] = sum;
        raster.mask[idx] = sum <= level ? 1 : 0;
      }
    }
  });
  return raster;
}

std::size_t count_components(const RegionRaster& raster) {
  const std::size_t n = raster.resolution;
  std::vector<std::uint8_t> seen(raster.mask.size(), 0);
  std::vector<std::size_t> stack;
  std::size_t components = 0;
  for (std::size_t start = 0; start < raster.mask.size(); ++start) {
    if (!raster.mask[start] || seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      const std::size_t row = idx / n;
      const std::size_t col = idx % n;
      auto visit = [&](std::size_t next) {
        if (raster.mask[next] && !seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      };
      if (row > 0) visit(idx - n);
      if (row + 1 < n) visit(idx + n);
      if (col > 0) visit(idx - 1);
      if (col + 1 < n) visit(idx + 1);
    }
  }
  return components;
}

bool eta_region_test(Point p, Point s1, Point s2, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw InvalidParameters("eta must lie in (0, 1]");
  if (s1 == s2) throw InvalidParameters("sensor positions coincide");
  const double angle = subtended_angle(p, s1, s2);
  const double lo = std::asin(eta);
  return angle >= lo && angle <= std::numbers::pi - lo;
}

}  // namespace stealth
