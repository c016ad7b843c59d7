#include "stealth/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "stealth/errors.hpp"

namespace stealth {

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidParameters("points must be [x, y] pairs of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json points_to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const Point& p : pts) arr.push_back(Json::array({p.x, p.y}));
  return arr;
}

constexpr std::array<const char*, 6> kBoundColumns{"lb_degenerate", "lb_uniform", "ub_constraint",
                                                   "ub_jensen",     "best_lb",    "best_ub"};

std::array<double, 6> bound_values(const BoundsReport& r) {
  return {r.lb_degenerate, r.lb_uniform, r.ub_constraint, r.ub_jensen, r.best_lb, r.best_ub};
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Json to_json(const Scenario& s) {
  Json j;
  j["targets"] = points_to_json(s.targets);
  j["sensors"] = points_to_json(s.sensors);
  j["sigma"] = s.sigma;
  return j;
}

Scenario scenario_from_json(const Json& j, bool require_sensors) {
  if (!j.is_object()) throw InvalidParameters("scenario must be a JSON object");
  Scenario s;
  if (!j.contains("targets") || !j["targets"].is_array()) throw InvalidParameters("scenario lacks a 'targets' array");
  for (const Json& p : j["targets"]) s.targets.push_back(point_from_json(p));
  if (j.contains("sensors")) {
    if (!j["sensors"].is_array()) throw InvalidParameters("'sensors' must be an array");
    for (const Json& p : j["sensors"]) s.sensors.push_back(point_from_json(p));
  } else if (require_sensors) {
    throw InvalidParameters("scenario lacks a 'sensors' array");
  }
  if (j.contains("sigma")) {
    if (!j["sigma"].is_number()) throw InvalidParameters("'sigma' must be a number");
    s.sigma = j["sigma"].get<double>();
  }
  return s;
}

Scenario load_scenario(const std::string& path, bool require_sensors) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot open scenario file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameters("malformed JSON in '" + path + "': " + e.what());
  }
  return scenario_from_json(j, require_sensors);
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidParameters("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

Json to_json(const ScenarioAngles& angles) {
  Json theta = Json::array();
  for (std::size_t i = 0; i < angles.theta.count(); ++i)
    for (std::size_t j = i + 1; j < angles.theta.count(); ++j) {
      Json values = Json::array();
      for (std::size_t k = 0; k < angles.theta.depth(); ++k) values.push_back(angles.theta(i, j, k));
      theta.push_back({{"pair", {i, j}}, {"values", values}});
    }
  Json beta = Json::array();
  for (std::size_t k = 0; k < angles.beta.count(); ++k)
    for (std::size_t l = k + 1; l < angles.beta.count(); ++l) {
      Json values = Json::array();
      for (std::size_t i = 0; i < angles.beta.depth(); ++i) values.push_back(angles.beta(k, l, i));
      beta.push_back({{"pair", {k, l}}, {"values", values}});
    }
  return {{"theta", theta}, {"beta", beta}};
}

Json to_json(const FimReport& r) {
  return {{"target_info", r.target_info},
          {"sensor_info", r.sensor_info},
          {"objective", r.objective},
          {"leakage", r.leakage}};
}

Json to_json(const QuadAngles& q) {
  return {{"theta1", q.theta1}, {"theta2", q.theta2}, {"beta1", q.beta1}, {"beta2", q.beta2}};
}

Json to_json(const CaseLabel& label) {
  Json cases = Json::array();
  for (int c = 1; c <= 7; ++c) {
    const double slack = label.slack[static_cast<std::size_t>(c - 1)];
    cases.push_back({{"case", "C" + std::to_string(c)},
                     {"member", label.has(c)},
                     {"equality_residual", label.equality[static_cast<std::size_t>(c - 1)]},
                     {"inequality_slack", std::isfinite(slack) ? Json(slack) : Json(nullptr)}});
  }
  Json labels = Json::array();
  for (int c : label.labels()) labels.push_back("C" + std::to_string(c));
  return {{"labels", labels}, {"feasible", label.feasible()}, {"cases", cases}};
}

Json to_json(const Lemma1Result& r) { return {{"satisfied", r.satisfied}, {"slack", r.slack}}; }

Json to_json(const Theorem1Diagnostics& d) {
  return {{"ok", d.ok()},
          {"concyclic", d.concyclic},
          {"diametral", d.diametral},
          {"diameter_ok", d.diameter_ok},
          {"concyclicity_residual", d.concyclicity_residual},
          {"circumdiameter", d.circumdiameter},
          {"sensor_separation", d.sensor_separation},
          {"required_diameter", d.required_diameter},
          {"theta1", d.theta1},
          {"theta2", d.theta2},
          {"sin_beta1", d.sin_beta1},
          {"sin_beta2", d.sin_beta2},
          {"right_angles", d.right_angles},
          {"equal_sin_beta", d.equal_sin_beta}};
}

Json to_json(const HeadingConfig& cfg) {
  Json rows = Json::array();
  for (const auto& row : cfg.alpha) rows.push_back(Json::array({row[0], row[1]}));
  return {{"gamma", cfg.gamma}, {"alpha", rows}};
}

Json to_json(const BoundsReport& r) {
  const BoundsReport n = r.normalized();
  Json raw, norm;
  const auto rv = bound_values(r);
  const auto nv = bound_values(n);
  for (std::size_t c = 0; c < kBoundColumns.size(); ++c) {
    raw[kBoundColumns[c]] = rv[c];
    norm[kBoundColumns[c]] = nv[c];
  }
  return {{"m", r.m}, {"gamma", r.gamma}, {"raw", raw}, {"normalized", norm}};
}

Json to_json(const SolveResult& r, bool include_trajectories) {
  Json starts = Json::array();
  for (const StartReport& s : r.per_start) {
    Json entry = {{"kind", to_string(s.kind)},
                  {"index", s.index},
                  {"eta2", s.eta2},
                  {"feasibility_residual", s.feasibility_residual},
                  {"iterations", s.iterations}};
    if (include_trajectories) entry["trajectory"] = s.trajectory;
    starts.push_back(entry);
  }
  return {{"m", r.m},
          {"gamma", r.gamma},
          {"eta2", r.eta2},
          {"best_alpha", to_json(r.best_alpha)},
          {"best_lb", r.best_lb},
          {"best_ub", r.best_ub},
          {"per_start", starts}};
}

Json to_json(const Certificate& c) {
  return {{"eta2", c.eta2}, {"best_lb", c.best_lb}, {"best_ub", c.best_ub}, {"gap", c.gap}, {"excess", c.excess}};
}

Json to_json(const HeadingGridResult& r) {
  return {{"eta2", r.eta2}, {"evaluations", r.evaluations}, {"patterns", r.patterns}, {"argmax", to_json(r.argmax)}};
}

Json to_json(const Oracle2x2Result& r) {
  return {{"best", r.best},
          {"s1", Json::array({r.s1.x, r.s1.y})},
          {"s2", Json::array({r.s2.x, r.s2.y})},
          {"feasible_points", r.feasible_points}};
}

void write_top_cells_csv(std::ostream& out, const HeadingGridResult& r) {
  out << "rank,eta2";
  for (std::size_t i = 0; i < r.argmax.size(); ++i) out << ",alpha_" << i + 1 << "_1,alpha_" << i + 1 << "_2";
  out << "\n";
  for (std::size_t rank = 0; rank < r.top.size(); ++rank) {
    const auto& [value, cfg] = r.top[rank];
    out << rank + 1 << ',' << format_double(value);
    for (const auto& row : cfg.alpha) out << ',' << format_double(row[0]) << ',' << format_double(row[1]);
    out << "\n";
  }
}

void write_bounds_csv(std::ostream& out, std::span<const BoundsReport> rows) {
  out << "m,gamma";
  for (const char* c : kBoundColumns) out << ',' << c;
  for (const char* c : kBoundColumns) out << ',' << c << "_norm";
  out << '\n';
  for (const BoundsReport& r : rows) {
    out << r.m << ',' << format_double(r.gamma);
    for (double v : bound_values(r)) out << ',' << format_double(v);
    for (double v : bound_values(r.normalized())) out << ',' << format_double(v);
    out << '\n';
  }
}

std::vector<BoundsReport> read_bounds_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidParameters("empty bounds CSV");
  std::vector<BoundsReport> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 2 + 2 * kBoundColumns.size()) throw InvalidParameters("bounds CSV row has wrong width");
    BoundsReport r;
    r.m = static_cast<std::size_t>(std::stoul(cells[0]));
    r.gamma = std::stod(cells[1]);
    r.lb_degenerate = std::stod(cells[2]);
    r.lb_uniform = std::stod(cells[3]);
    r.ub_constraint = std::stod(cells[4]);
    r.ub_jensen = std::stod(cells[5]);
    r.best_lb = std::stod(cells[6]);
    r.best_ub = std::stod(cells[7]);
    rows.push_back(r);
  }
  return rows;
}

void write_pgm(std::ostream& out, const RegionRaster& raster) {
  out << "P5\n" << raster.resolution << ' ' << raster.resolution << "\n255\n";
  for (std::uint8_t v : raster.mask) out.put(static_cast<char>(v ? 255 : 0));
}

std::vector<Segment> contour_segments(const RegionRaster& raster) {
  const std::size_t n = raster.resolution;
  const double level = raster.gamma * raster.gamma;
  std::vector<Segment> segments;
  auto lerp = [](Point p, Point q, double fp, double fq) {
    const double t = fp / (fp - fq);
    return p + t * (q - p);
  };
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = 0; c + 1 < n; ++c) {
      const std::array<double, 4> f{raster.value(r, c) - level, raster.value(r, c + 1) - level,
                                    raster.value(r + 1, c + 1) - level, raster.value(r + 1, c) - level};
      if (std::any_of(f.begin(), f.end(), [](double v) { return std::isnan(v); })) continue;
      const std::array<Point, 4> p{raster.cell_center(r, c), raster.cell_center(r, c + 1),
                                   raster.cell_center(r + 1, c + 1), raster.cell_center(r + 1, c)};
      // Corners: 0 top-left, 1 top-right, 2 bottom-right, 3 bottom-left.
      const int index = (f[0] <= 0 ? 8 : 0) | (f[1] <= 0 ? 4 : 0) | (f[2] <= 0 ? 2 : 0) | (f[3] <= 0 ? 1 : 0);
      if (index == 0 || index == 15) continue;
      const Point top = lerp(p[0], p[1], f[0], f[1]);
      const Point right = lerp(p[1], p[2], f[1], f[2]);
      const Point bottom = lerp(p[3], p[2], f[3], f[2]);
      const Point left = lerp(p[0], p[3], f[0], f[3]);
      const bool center_inside = (f[0] + f[1] + f[2] + f[3]) <= 0.0;
      switch (index) {
        case 1: case 14: segments.push_back({left, bottom}); break;
        case 2: case 13: segments.push_back({bottom, right}); break;
        case 3: case 12: segments.push_back({left, right}); break;
        case 4: case 11: segments.push_back({top, right}); break;
        case 6: case 9: segments.push_back({top, bottom}); break;
        case 7: case 8: segments.push_back({left, top}); break;
        case 5:
          if (center_inside) {
            segments.push_back({left, top});
            segments.push_back({bottom, right});
          } else {
            segments.push_back({top, right});
            segments.push_back({left, bottom});
          }
          break;
        case 10:
          if (center_inside) {
            segments.push_back({top, right});
            segments.push_back({left, bottom});
          } else {
            segments.push_back({left, top});
            segments.push_back({bottom, right});
          }
          break;
        default: break;
      }
    }
  }
  return segments;
}

void write_region_svg(std::ostream& out, const RegionRaster& raster, std::span<const Point> targets) {
  const Rect& b = raster.bounds;
  const double size = 512.0;
  auto sx = [&](double x) { return (x - b.xmin) / (b.xmax - b.xmin) * size; };
  auto sy = [&](double y) { return (b.ymax - y) / (b.ymax - b.ymin) * size; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" style=\"fill:#ffffff\"/>\n";
  out << "<path style=\"fill:none;stroke:#2a7f3f;stroke-width:1.2\" d=\"";
  for (const Segment& s : contour_segments(raster))
    out << 'M' << fixed(sx(s.a.x)) << ' ' << fixed(sy(s.a.y)) << 'L' << fixed(sx(s.b.x)) << ' ' << fixed(sy(s.b.y));
  out << "\"/>\n";
  for (const Point& t : targets)
    out << "<circle cx=\"" << fixed(sx(t.x)) << "\" cy=\"" << fixed(sy(t.y))
        << "\" r=\"4\" style=\"fill:#c0392b\"/>\n";
  out << "<text x=\"8\" y=\"18\" style=\"font:12px sans-serif\">gamma = " << format_double(raster.gamma)
      << "</text>\n";
  out << "</svg>\n";
}

void write_bounds_svg(std::ostream& out, std::span<const BoundsReport> rows, bool normalized) {
  struct Panel {
    std::string title;
    std::vector<double> gamma;
    std::array<std::vector<double>, 6> series;  // four bounds, best_lb, best_ub
    std::vector<double> asymptote;
  };
  std::vector<Panel> panels;
  for (const BoundsReport& raw : rows) {
    if (panels.empty() || panels.back().title != "m = " + std::to_string(raw.m))
      panels.push_back({"m = " + std::to_string(raw.m), {}, {}, {}});
    const BoundsReport r = normalized ? raw.normalized() : raw;
    Panel& p = panels.back();
    p.gamma.push_back(r.gamma);
    const auto v = bound_values(r);
    for (std::size_t c = 0; c < 6; ++c) p.series[c].push_back(v[c]);
    if (normalized) p.asymptote.push_back(asymptotic_bounds(r.gamma).lb_uniform);
  }
  if (normalized && !panels.empty()) {
    Panel limit{"m → ∞", panels.front().gamma, {}, {}};
    for (double g : limit.gamma) {
      const AsymptoticBounds a = asymptotic_bounds(g);
      const std::array<double, 4> v{a.lb_degenerate, a.lb_uniform, a.ub_constraint, a.ub_jensen};
      for (std::size_t c = 0; c < 4; ++c) limit.series[c].push_back(v[c]);
      limit.series[4].push_back(std::max(a.lb_degenerate, a.lb_uniform));
      limit.series[5].push_back(std::min(a.ub_constraint, a.ub_jensen));
      limit.asymptote.push_back(a.lb_uniform);
    }
    panels.push_back(std::move(limit));
  }

  double ymax = 0.0;
  for (const Panel& p : panels)
    for (std::size_t c = 0; c < 4; ++c)
      for (double v : p.series[c]) ymax = std::max(ymax, v);
  ymax = ymax > 0.0 ? std::ceil(ymax * 20.0) / 20.0 : 1.0;

  const double pw = 300.0, ph = 240.0, ml = 48.0, mt = 28.0, mb = 36.0, mr = 12.0;
  const double width = static_cast<double>(panels.size()) * (pw + ml + mr);
  const double height = mt + ph + mb + 28.0;
  const std::array<const char*, 4> colors{"#1f77b4", "#2ca02c", "#d62728", "#ff7f0e"};
  const std::array<const char*, 4> names{"degenerate LB", "uniform LB", "constraint UB", "Jensen UB"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\" style=\"fill:#ffffff\"/>\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const Panel& p = panels[k];
    const double ox = static_cast<double>(k) * (pw + ml + mr) + ml;
    auto px = [&](double g) { return ox + g * pw; };
    auto py = [&](double v) { return mt + ph - v / ymax * ph; };
    out << "<g>\n";
    out << "<text x=\"" << fixed(ox + pw / 2) << "\" y=\"18\" style=\"font:14px sans-serif;text-anchor:middle\">"
        << p.title << "</text>\n";
    // Gap band between best lower and best upper bound.
    out << "<polygon style=\"fill:#999999;fill-opacity:0.35;stroke:none\" points=\"";
    for (std::size_t i = 0; i < p.gamma.size(); ++i) out << fixed(px(p.gamma[i])) << ',' << fixed(py(p.series[4][i])) << ' ';
    for (std::size_t i = p.gamma.size(); i-- > 0;) out << fixed(px(p.gamma[i])) << ',' << fixed(py(p.series[5][i])) << ' ';
    out << "\"/>\n";
    for (std::size_t c = 0; c < 4; ++c) {
      out << "<polyline style=\"fill:none;stroke:" << colors[c] << ";stroke-width:1.5\" points=\"";
      for (std::size_t i = 0; i < p.gamma.size(); ++i) out << fixed(px(p.gamma[i])) << ',' << fixed(py(p.series[c][i])) << ' ';
      out << "\"/>\n";
    }
    if (!p.asymptote.empty()) {
      out << "<polyline style=\"fill:none;stroke:#000000;stroke-width:1;stroke-dasharray:4 3\" points=\"";
      for (std::size_t i = 0; i < p.gamma.size(); ++i) out << fixed(px(p.gamma[i])) << ',' << fixed(py(p.asymptote[i])) << ' ';
      out << "\"/>\n";
    }
    // Axes and ticks.
    out << "<path style=\"fill:none;stroke:#000000;stroke-width:1\" d=\"M" << fixed(ox) << ' ' << fixed(mt) << 'V'
        << fixed(mt + ph) << 'H' << fixed(ox + pw) << "\"/>\n";
    for (int t = 0; t <= 5; ++t) {
      const double g = 0.2 * t;
      out << "<text x=\"" << fixed(px(g)) << "\" y=\"" << fixed(mt + ph + 16)
          << "\" style=\"font:11px sans-serif;text-anchor:middle\">" << fixed(g).substr(0, 3) << "</text>\n";
      const double v = ymax * t / 5.0;
      out << "<text x=\"" << fixed(ox - 4) << "\" y=\"" << fixed(py(v) + 4)
          << "\" style=\"font:11px sans-serif;text-anchor:end\">" << fixed(v).substr(0, 4) << "</text>\n";
    }
    out << "<text x=\"" << fixed(ox + pw / 2) << "\" y=\"" << fixed(mt + ph + 32)
        << "\" style=\"font:12px sans-serif;text-anchor:middle\">gamma</text>\n";
    out << "</g>\n";
  }
  for (std::size_t c = 0; c < 4; ++c) {
    const double x = ml + 130.0 * static_cast<double>(c);
    out << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(height - 8) << "\" x2=\"" << fixed(x + 20) << "\" y2=\""
        << fixed(height - 8) << "\" style=\"stroke:" << colors[c] << ";stroke-width:2\"/>\n";
    out << "<text x=\"" << fixed(x + 24) << "\" y=\"" << fixed(height - 4) << "\" style=\"font:11px sans-serif\">"
        << names[c] << "</text>\n";
  }
  out << "</svg>\n";
}

void write_diagram_svg(std::ostream& out, const Scenario& s, double gamma, bool common_circle) {
  if (s.targets.size() != 2) throw InvalidParameters("diagram needs exactly two targets");
  const Point t1 = s.targets[0], t2 = s.targets[1];
  const double d = distance(t1, t2);
  const double radius = 0.5 * d / gamma;
  const Point u = (1.0 / d) * (t2 - t1);
  const Point left{-u.y, u.x};
  const double offset = std::sqrt(std::max(0.0, radius * radius - 0.25 * d * d));
  const Point mid = 0.5 * (t1 + t2);
  struct Circle {
    Point c;
    double r;
  };
  std::vector<Circle> circles{{mid + offset * left, radius}, {mid - offset * left, radius}};

  std::vector<Point> extent{t1, t2};
  extent.insert(extent.end(), s.sensors.begin(), s.sensors.end());
  for (const Circle& c : circles) {
    extent.push_back(c.c + Point{c.r, c.r});
    extent.push_back(c.c - Point{c.r, c.r});
  }
  std::optional<Circle> common;
  if (common_circle && s.sensors.size() == 2) {
    const Point a = s.sensors[0], b = s.sensors[1];
    common = Circle{0.5 * (a + b), 0.5 * distance(a, b)};
    extent.push_back(common->c + Point{common->r, common->r});
    extent.push_back(common->c - Point{common->r, common->r});
  }
  double xmin = extent[0].x, xmax = xmin, ymin = extent[0].y, ymax = ymin;
  for (const Point& p : extent) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double span = std::max(xmax - xmin, ymax - ymin) * 1.1;
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  const double size = 480.0;
  const double scale = size / span;
  auto sx = [&](double x) { return (x - cx) * scale + size / 2; };
  auto sy = [&](double y) { return size / 2 - (y - cy) * scale; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" style=\"fill:#ffffff\"/>\n";
  for (const Circle& c : circles)
    out << "<circle cx=\"" << fixed(sx(c.c.x)) << "\" cy=\"" << fixed(sy(c.c.y)) << "\" r=\"" << fixed(c.r * scale)
        << "\" style=\"fill:none;stroke:#2a7f3f;stroke-width:1.5\"/>\n";
  if (common)
    out << "<circle cx=\"" << fixed(sx(common->c.x)) << "\" cy=\"" << fixed(sy(common->c.y)) << "\" r=\""
        << fixed(common->r * scale) << "\" style=\"fill:none;stroke:#555555;stroke-width:1;stroke-dasharray:3 3\"/>\n";
  for (std::size_t k = 0; k < s.targets.size(); ++k)
    out << "<circle cx=\"" << fixed(sx(s.targets[k].x)) << "\" cy=\"" << fixed(sy(s.targets[k].y))
        << "\" r=\"5\" style=\"fill:#c0392b\"/><text x=\"" << fixed(sx(s.targets[k].x) + 7) << "\" y=\""
        << fixed(sy(s.targets[k].y) - 7) << "\" style=\"font:12px sans-serif\">t" << k + 1 << "</text>\n";
  for (std::size_t i = 0; i < s.sensors.size(); ++i)
    out << "<circle cx=\"" << fixed(sx(s.sensors[i].x)) << "\" cy=\"" << fixed(sy(s.sensors[i].y))
        << "\" r=\"5\" style=\"fill:#27ae60\"/><text x=\"" << fixed(sx(s.sensors[i].x) + 7) << "\" y=\""
        << fixed(sy(s.sensors[i].y) - 7) << "\" style=\"font:12px sans-serif\">s" << i + 1 << "</text>\n";
  out << "</svg>\n";
}

}  // namespace stealth
