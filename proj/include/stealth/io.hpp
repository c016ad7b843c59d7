#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "stealth/analytic2x2.hpp"
#include "stealth/bounds.hpp"
#include "stealth/fim.hpp"
#include "stealth/geometry.hpp"
#include "stealth/oracle.hpp"
#include "stealth/solver.hpp"

namespace stealth {

using Json = nlohmann::ordered_json;

// printf("%.17g"): 17 significant digits, round-trips every double.
std::string format_double(double value);

// Scenario files: {"targets": [[x, y], ...], "sensors": [[x, y], ...], "sigma": s}.
// `sensors` may be omitted when require_sensors is false; sigma defaults to 1.
Json to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j, bool require_sensors = true);
Scenario load_scenario(const std::string& path, bool require_sensors = true);
void save_json(const std::string& path, const Json& j);

Json to_json(const ScenarioAngles& angles);
Json to_json(const FimReport& r);
Json to_json(const QuadAngles& q);
Json to_json(const CaseLabel& label);
Json to_json(const Lemma1Result& r);
Json to_json(const Theorem1Diagnostics& d);
Json to_json(const HeadingConfig& cfg);
Json to_json(const BoundsReport& r);
Json to_json(const SolveResult& r, bool include_trajectories);
Json to_json(const Certificate& c);
Json to_json(const HeadingGridResult& r);
Json to_json(const Oracle2x2Result& r);

// Bound sweep table. Columns: m, gamma, the six raw values, then the same six
// divided by m^2 with a "_norm" suffix.
void write_bounds_csv(std::ostream& out, std::span<const BoundsReport> rows);
std::vector<BoundsReport> read_bounds_csv(std::istream& in);

// Top-K heading-grid cells: rank, eta2, then alpha_<i>_<k> for every row.
void write_top_cells_csv(std::ostream& out, const HeadingGridResult& r);

// Binary greymap, 0 = infeasible, 255 = feasible, first row = top.
void write_pgm(std::ostream& out, const RegionRaster& raster);

struct Segment {
  Point a;
  Point b;
};

// Marching-squares iso-segments of the constraint field at gamma^2, using
// cell centers as samples. Cells touching a target sample are skipped.
std::vector<Segment> contour_segments(const RegionRaster& raster);

void write_region_svg(std::ostream& out, const RegionRaster& raster, std::span<const Point> targets);

// One panel per row group of equal m (plus an m -> infinity panel when
// normalized): the four bounds against gamma, the band between best lower
// and best upper bound, and the large-m uniform asymptote.
void write_bounds_svg(std::ostream& out, std::span<const BoundsReport> rows, bool normalized);

// Two-sensor / two-target diagram: stealth boundary circles of diameter
// d / gamma, the circle through all four points when `common_circle` is set,
// targets and sensors.
void write_diagram_svg(std::ostream& out, const Scenario& s, double gamma, bool common_circle);

}  // namespace stealth
