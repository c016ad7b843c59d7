#include "stealth/analytic2x2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stealth/errors.hpp"
#include "stealth/fim.hpp"
#include "stealth/parallel.hpp"

namespace stealth {

namespace {

constexpr double kPi = std::numbers::pi;

void require_2x2(const Scenario& s) {
  if (s.targets.size() != 2 || s.sensors.size() != 2)
    throw InvalidParameters("expected exactly two sensors and two targets");
}

void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidParameters("gamma must lie in (0, 1]");
}

Point unit(Point p) {
  const double len = norm(p);
  return {p.x / len, p.y / len};
}

double det3(double a, double b, double c, double d, double e, double f, double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Circumcircle diameter of a triangle, +inf when collinear.
double circumdiameter(Point a, Point b, Point c) {
  const double twice_area = std::abs(cross(b - a, c - a));
  if (twice_area == 0.0) return std::numeric_limits<double>::infinity();
  return distance(a, b) * distance(b, c) * distance(c, a) / twice_area;
}

}  // namespace

QuadAngles quad_angles(const Scenario& s) {
  require_2x2(s);
  const ScenarioAngles a = angles_from_scenario(s);
  return {a.theta(0, 1, 0), a.theta(0, 1, 1), a.beta(0, 1, 0), a.beta(0, 1, 1)};
}

std::vector<int> CaseLabel::labels() const {
  std::vector<int> out;
  for (int c = 1; c <= 7; ++c)
    if (has(c)) out.push_back(c);
  return out;
}

CaseLabel classify_case(const QuadAngles& q, double tol) {
  const double t1 = q.theta1, t2 = q.theta2, b1 = q.beta1, b2 = q.beta2;
  CaseLabel label;
  label.equality = {
      t1 + t2 + b1 + b2 - 2.0 * kPi,  // C1
      -t1 + t2 + b1 + b2,             // C2
      t1 - t2 + b1 + b2,              // C3
      t1 + t2 - b1 + b2,              // C4
      t1 + t2 + b1 - b2,              // C5
      t1 - t2 + b1 - b2,              // C6
      t1 - t2 - b1 + b2,              // C7
  };
  label.slack = {
      std::numeric_limits<double>::infinity(),
      t1 - t2,       // C2: theta2 <= theta1
      t2 - t1,       // C3: theta1 <= theta2
      b1 - b2,       // C4: beta2 <= beta1
      b2 - b1,       // C5: beta1 <= beta2
      kPi - t1 - b1,  // C6: theta1 + beta1 <= pi
      kPi - t1 - b2,  // C7: theta1 + beta2 <= pi
  };
  for (std::size_t c = 0; c < 7; ++c)
    label.members[c] = std::abs(label.equality[c]) <= tol && label.slack[c] >= tol;
  return label;
}

Lemma1Result lemma1_check(const QuadAngles& q, double tol) {
  const double slack = 2.0 * kPi - q.sum();
  return {slack >= -tol, slack};
}

Scenario theorem1_config(Point t1, Point t2, double gamma, double diameter, double phase) {
  require_gamma(gamma);
  const double d = distance(t1, t2);
  if (!(d > 0.0)) throw DegenerateGeometry("targets coincide");
  if (!std::isfinite(diameter) || !std::isfinite(phase)) throw InvalidParameters("non-finite diameter or phase");
  const double required = d / gamma;
  if (diameter < required * (1.0 - 1e-12))
    throw InfeasibleParameters("circle diameter " + std::to_string(diameter) + " is below d/gamma = " +
                               std::to_string(required));

  const double radius = 0.5 * diameter;
  const Point u = unit(t2 - t1);
  const Point left{-u.y, u.x};
  const double offset = std::sqrt(std::max(0.0, radius * radius - 0.25 * d * d));
  const Point center = 0.5 * (t1 + t2) + offset * left;
  const Point dir = rotate(left, phase);

  Scenario s;
  s.targets = {t1, t2};
  s.sensors = {center + radius * dir, center - radius * dir};
  s.sigma = 1.0;
  const double tol = kDegeneracyRelTol * diameter;
  for (const Point& sensor : s.sensors)
    for (const Point& target : s.targets)
      if (distance(sensor, target) <= tol) throw DegenerateGeometry("phase places a sensor on a target");
  return s;
}

Theorem1Diagnostics verify_theorem1(const Scenario& s, double gamma) {
  require_2x2(s);
  require_gamma(gamma);
  Theorem1Diagnostics diag;
  const Point t1 = s.targets[0], t2 = s.targets[1], s1 = s.sensors[0], s2 = s.sensors[1];
  const double d = distance(t1, t2);
  diag.required_diameter = d / gamma;
  diag.sensor_separation = distance(s1, s2);

  // In-circle determinant on centered, diameter-normalized coordinates.
  const double scale = s.diameter();
  if (!(scale > 0.0)) return diag;
  const Point centroid = 0.25 * (t1 + t2 + s1 + s2);
  std::array<Point, 4> p{t1, t2, s1, s2};
  for (Point& q : p) q = (1.0 / scale) * (q - centroid);
  auto lifted = [](Point q) { return q.x * q.x + q.y * q.y; };
  const Point o = p[3];
  const double lo = lifted(o);
  diag.concyclicity_residual =
      det3(p[0].x - o.x, p[0].y - o.y, lifted(p[0]) - lo, p[1].x - o.x, p[1].y - o.y, lifted(p[1]) - lo,
           p[2].x - o.x, p[2].y - o.y, lifted(p[2]) - lo);
  diag.concyclic = std::abs(diag.concyclicity_residual) <= 1e-9;

  // The circle through the targets and whichever sensor is farther from
  // their line is the better conditioned one.
  const Point far = std::abs(cross(t2 - t1, s1 - t1)) >= std::abs(cross(t2 - t1, s2 - t1)) ? s1 : s2;
  diag.circumdiameter = circumdiameter(t1, t2, far);
  diag.diametral = std::isfinite(diag.circumdiameter) &&
                   std::abs(diag.sensor_separation - diag.circumdiameter) <= 1e-9 * diag.circumdiameter;
  diag.diameter_ok = std::isfinite(diag.circumdiameter) && diag.circumdiameter >= diag.required_diameter * (1.0 - 1e-9);

  try {
    const QuadAngles q = quad_angles(s);
    diag.theta1 = q.theta1;
    diag.theta2 = q.theta2;
    diag.sin_beta1 = std::sin(q.beta1);
    diag.sin_beta2 = std::sin(q.beta2);
    diag.right_angles = std::abs(q.theta1 - kPi / 2) <= 1e-7 && std::abs(q.theta2 - kPi / 2) <= 1e-7;
    diag.equal_sin_beta = std::abs(diag.sin_beta1 - diag.sin_beta2) <= 1e-9;
  } catch (const DegenerateGeometry&) {
    diag.concyclic = diag.diametral = diag.diameter_ok = false;
  }
  return diag;
}

Scenario theorem2_config(Point t1, Point t2, double gamma, double arc_fraction) {
  if (!(gamma > 0.0)) throw InvalidParameters("gamma must be positive");
  if (!(gamma < 1.0)) throw InfeasibleParameters("gamma = 1 merges both boundary circles");
  if (!(arc_fraction > 0.0 && arc_fraction < 1.0)) throw InvalidParameters("arc_fraction must lie in (0, 1)");
  const double d = distance(t1, t2);
  if (!(d > 0.0)) throw DegenerateGeometry("targets coincide");

  const double a = std::asin(gamma);
  const double at_t1 = arc_fraction * a;
  const double at_t2 = a - at_t1;
  // Triangle t1 t2 s1 has angle pi - a at s1; law of sines gives |t1 s1|.
  const double r1 = d * std::sin(at_t2) / std::sin(a);
  const Point s1 = t1 + r1 * rotate(unit(t2 - t1), at_t1);

  Scenario s;
  s.targets = {t1, t2};
  s.sensors = {s1, t1 + t2 - s1};
  s.sigma = 1.0;
  return s;
}

Oracle2x2Result oracle_2x2(Point t1, Point t2, double gamma, Oracle2x2Mode mode, std::size_t resolution) {
  require_gamma(gamma);
  if (resolution < 50) throw InvalidParameters("oracle resolution must be at least 50");
  const double d = distance(t1, t2);
  if (!(d > 0.0)) throw DegenerateGeometry("targets coincide");

  // Work in the canonical frame t1 = (0, 0), t2 = (d, 0); angles are invariant.
  Rect box;
  if (mode == Oracle2x2Mode::kUnconstrained) {
    const double half = 1.25 * d / gamma;
    box = {0.5 * d - half, 0.5 * d + half, -half, half};
  } else {
    const double radius = 0.5 * d / gamma;
    const double half = radius - std::sqrt(std::max(0.0, radius * radius - 0.25 * d * d));
    box = {0.0, d, -half, half};
  }
  const Point c1{0.0, 0.0};
  const Point c2{d, 0.0};
  const double tol = kDegeneracyRelTol * std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const double level = gamma * gamma;

  // Unit vectors from each target to every admissible grid point.
  std::vector<double> ax, ay, bx, by;
  std::vector<Point> where;
  const double step_x = (box.xmax - box.xmin) / static_cast<double>(resolution - 1);
  const double step_y = (box.ymax - box.ymin) / static_cast<double>(resolution - 1);
  for (std::size_t iy = 0; iy < resolution; ++iy) {
    for (std::size_t ix = 0; ix < resolution; ++ix) {
      const Point p{box.xmin + static_cast<double>(ix) * step_x, box.ymin + static_cast<double>(iy) * step_y};
      const Point r1 = p - c1;
      const Point r2 = p - c2;
      if (norm(r1) <= tol || norm(r2) <= tol) continue;
      const double c = cross(r1, r2);
      const double dt = dot(r1, r2);
      if (c * c > level * (c * c + dt * dt)) continue;  // sin^2 beta > gamma^2
      if (mode == Oracle2x2Mode::kBothBetween && dt > 0.0) continue;
      const Point u1 = unit(r1);
      const Point u2 = unit(r2);
      ax.push_back(u1.x);
      ay.push_back(u1.y);
      bx.push_back(u2.x);
      by.push_back(u2.y);
      where.push_back(p);
    }
  }

  Oracle2x2Result result;
  result.feasible_points = where.size();
  if (where.size() < 2) return result;

  struct Best {
    double value = -1.0;
    std::size_t i = 0;
    std::size_t j = 0;
  };
  const std::size_t count = where.size();
  const std::size_t chunks = std::min<std::size_t>(count, 256);
  std::vector<Best> partial(chunks);
  parallel_for(count, chunks, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Best best;
    for (std::size_t i = begin; i < end; ++i) {
      const double pax = ax[i], pay = ay[i], pbx = bx[i], pby = by[i];
      double row_best = -1.0;
      std::size_t row_arg = 0;
      for (std::size_t j = i + 1; j < count; ++j) {
        const double s1 = pax * ay[j] - pay * ax[j];
        const double s2 = pbx * by[j] - pby * bx[j];
        const double v = std::min(s1 * s1, s2 * s2);
        if (v > row_best) {
          row_best = v;
          row_arg = j;
        }
      }
      if (row_best > best.value) best = {row_best, i, row_arg};
    }
    partial[chunk] = best;
  });
  Best best;
  for (const Best& b : partial)
    if (b.value > best.value) best = b;

  // Map the argmax back to the caller's frame.
  const Point u = unit(t2 - t1);
  auto to_world = [&](Point p) { return t1 + p.x * u + p.y * Point{-u.y, u.x}; };
  result.best = best.value;
  result.s1 = to_world(where[best.i]);
  result.s2 = to_world(where[best.j]);
  return result;
}

}  // namespace stealth
