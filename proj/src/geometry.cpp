#include "stealth/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <string>

#include "stealth/errors.hpp"

namespace stealth {

Point rotate(Point p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double Scenario::diameter() const {
  std::vector<Point> all(targets);
  all.insert(all.end(), sensors.begin(), sensors.end());
  double best = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) best = std::max(best, distance(all[i], all[j]));
  return best;
}

void Scenario::validate() const {
  if (targets.size() < 2) throw InvalidParameters("scenario needs at least 2 targets");
  if (sensors.size() < 2) throw InvalidParameters("scenario needs at least 2 sensors");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidParameters("sigma must be positive and finite");
  for (const Point& p : targets)
    if (!is_finite(p)) throw InvalidParameters("non-finite target coordinate");
  for (const Point& p : sensors)
    if (!is_finite(p)) throw InvalidParameters("non-finite sensor coordinate");
  const double tol = degeneracy_tolerance();
  for (std::size_t i = 0; i < sensors.size(); ++i)
    for (std::size_t k = 0; k < targets.size(); ++k)
      if (distance(sensors[i], targets[k]) <= tol)
        throw DegenerateGeometry("sensor " + std::to_string(i) + " coincides with target " + std::to_string(k));
}

PairTensor::PairTensor(std::size_t count, std::size_t depth)
    : count_(count), depth_(depth), values_(count * (count > 0 ? count - 1 : 0) / 2 * depth, 0.0) {}

std::size_t PairTensor::offset(std::size_t i, std::size_t j, std::size_t k) const {
  if (i > j) std::swap(i, j);
  const std::size_t pair = i * (2 * count_ - i - 1) / 2 + (j - i - 1);
  return pair * depth_ + k;
}

double& PairTensor::operator()(std::size_t i, std::size_t j, std::size_t k) { return values_[offset(i, j, k)]; }

double PairTensor::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  return values_[offset(i, j, k)];
}

double subtended_angle(Point apex, Point a, Point b, double tolerance) {
  const Point u = a - apex;
  const Point v = b - apex;
  if (tolerance < 0.0) {
    const double scale = std::max({norm(u), norm(v), distance(a, b)});
    tolerance = kDegeneracyRelTol * scale;
  }
  if (norm(u) <= tolerance || norm(v) <= tolerance)
    throw DegenerateGeometry("apex coincides with a ray endpoint");
  // atan2 form stays accurate near 0 and pi, unlike acos of the cosine.
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

ScenarioAngles angles_from_scenario(const Scenario& s) {
  s.validate();
  const std::size_t m = s.sensors.size();
  const std::size_t n = s.targets.size();
  const double tol = s.degeneracy_tolerance();
  ScenarioAngles out{PairTensor(m, n), PairTensor(n, m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.theta(i, j, k) = subtended_angle(s.targets[k], s.sensors[i], s.sensors[j], tol);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      for (std::size_t i = 0; i < m; ++i)
        out.beta(k, l, i) = subtended_angle(s.sensors[i], s.targets[k], s.targets[l], tol);
  return out;
}

double HeadingConfig::constraint_violation() const {
  const double a = max_heading();
  double worst = 0.0;
  for (const auto& row : alpha) {
    worst = std::max(worst, std::abs(row[0] + row[1]) - a);
    worst = std::max(worst, -row[0] * row[1]);
    worst = std::max(worst, std::abs(row[0]) - a);
    worst = std::max(worst, std::abs(row[1]) - a);
  }
  return worst;
}

void HeadingConfig::validate(double tolerance) const {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidParameters("gamma must lie in (0, 1]");
  for (const auto& row : alpha)
    if (!std::isfinite(row[0]) || !std::isfinite(row[1])) throw InvalidParameters("non-finite heading angle");
  if (constraint_violation() > tolerance) throw InvalidParameters("heading configuration violates its constraints");
}

HeadingAngles headings_to_pair_angles(const HeadingConfig& cfg) {
  const std::size_t m = cfg.size();
  HeadingAngles out{PairTensor(m, 2), std::vector<double>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    out.beta[i] = std::numbers::pi - std::abs(cfg.alpha[i][0] + cfg.alpha[i][1]);
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < 2; ++k) out.theta(i, j, k) = std::abs(cfg.alpha[i][k] - cfg.alpha[j][k]);
  }
  return out;
}

Scenario positions_from_headings(const HeadingConfig& cfg, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw InvalidParameters("target separation must be positive");
  for (std::size_t i = 0; i < cfg.size(); ++i)
    if (cfg.alpha[i][0] * cfg.alpha[i][1] < 0.0)
      throw DegenerateGeometry("row " + std::to_string(i) + ": headings of opposite sign never intersect");
  cfg.validate();

  Scenario s;
  s.targets = {{0.0, 0.0}, {d, 0.0}};
  s.sigma = 1.0;
  const double tol = kDegeneracyRelTol * d;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const double a1 = std::abs(cfg.alpha[i][0]);
    const double a2 = std::abs(cfg.alpha[i][1]);
    const double side = (cfg.alpha[i][0] + cfg.alpha[i][1]) > 0.0 ? -1.0 : 1.0;
    const double apex = std::sin(a1 + a2);
    if (apex <= 0.0) throw DegenerateGeometry("row " + std::to_string(i) + ": rays from the targets are parallel");
    // Law of sines in triangle t1 t2 s: |t1 s| = d sin(a2) / sin(a1 + a2).
    const double r1 = d * std::sin(a2) / apex;
    const Point p{r1 * std::cos(a1), side * r1 * std::sin(a1)};
    if (distance(p, s.targets[0]) <= tol || distance(p, s.targets[1]) <= tol)
      throw DegenerateGeometry("row " + std::to_string(i) + ": sensor coincides with a target");
    s.sensors.push_back(p);
  }
  return s;
}

HeadingConfig nudge_degenerate_rows(const HeadingConfig& cfg, double eps) {
  HeadingConfig out = cfg;
  for (auto& row : out.alpha) {
    for (int k = 0; k < 2; ++k) {
      const double other = row[1 - k];
      if (row[k] == 0.0 && other != 0.0) {
        const double s = other > 0.0 ? 1.0 : -1.0;
        row[k] = s * eps;
        row[1 - k] = other - s * eps;
      }
    }
  }
  return out;
}

Scenario random_scenario(std::uint64_t seed, std::size_t m, std::size_t n, double sigma, double min_separation) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  auto draw = [&] { return Point{coord(rng), coord(rng)}; };
  Scenario s;
  s.sigma = sigma;
  for (std::size_t k = 0; k < n; ++k) s.targets.push_back(draw());
  for (std::size_t i = 0; i < m; ++i) {
    Point p = draw();
    auto too_close = [&](Point q) {
      for (const Point& t : s.targets)
        if (distance(q, t) < min_separation) return true;
      for (const Point& o : s.sensors)
        if (distance(q, o) < min_separation) return true;
      return false;
    };
    while (too_close(p)) p = draw();
    s.sensors.push_back(p);
  }
  return s;
}

Scenario random_scenario(std::uint64_t seed, std::size_t max_size) {
  if (max_size < 2) throw InvalidParameters("random scenarios need room for 2 sensors and 2 targets");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, max_size);
  const std::size_t m = size(rng);
  const std::size_t n = size(rng);
  return random_scenario(rng(), m, n);
}

}  // namespace stealth
