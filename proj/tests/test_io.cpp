#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stealth/errors.hpp"
#include "stealth/io.hpp"

using namespace stealth;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("stealth_io_" + name)).string();
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.36}) EXPECT_EQ(std::stod(format_double(v)), v);
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(ScenarioJson, RoundTripIsExact) {
  const Scenario s = random_scenario(9, 4, 3, 0.7);
  const Scenario back = scenario_from_json(Json::parse(to_json(s).dump()));
  EXPECT_EQ(back.targets, s.targets);
  EXPECT_EQ(back.sensors, s.sensors);
  EXPECT_EQ(back.sigma, s.sigma);
}

TEST(ScenarioJson, FileRoundTrip) {
  const Scenario s = random_scenario(2, 3, 2);
  const std::string path = temp_path("scenario.json");
  save_json(path, to_json(s));
  const Scenario back = load_scenario(path);
  EXPECT_EQ(back.sensors, s.sensors);
  std::remove(path.c_str());
}

TEST(ScenarioJson, SigmaDefaultsAndOptionalSensors) {
  const Scenario s = scenario_from_json(Json::parse(R"({"targets": [[0, 0], [1, 0]]})"), false);
  EXPECT_EQ(s.sigma, 1.0);
  EXPECT_TRUE(s.sensors.empty());
}

TEST(ScenarioJson, ParseErrors) {
  EXPECT_THROW(scenario_from_json(Json::parse("[1, 2]")), InvalidParameters);
  EXPECT_THROW(scenario_from_json(Json::parse(R"({"sensors": []})")), InvalidParameters);
  EXPECT_THROW(scenario_from_json(Json::parse(R"({"targets": [[0, 0], [1, 0]]})")), InvalidParameters);
  EXPECT_THROW(scenario_from_json(Json::parse(R"({"targets": [[0, "a"]], "sensors": []})")), InvalidParameters);
  EXPECT_THROW(scenario_from_json(Json::parse(R"({"targets": [[0, 0, 1]], "sensors": []})")), InvalidParameters);
  EXPECT_THROW(scenario_from_json(Json::parse(R"({"targets": [], "sensors": [], "sigma": "x"})")),
               InvalidParameters);
  EXPECT_THROW(load_scenario(temp_path("does_not_exist.json")), InvalidParameters);
  const std::string path = temp_path("broken.json");
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(load_scenario(path), InvalidParameters);
  std::remove(path.c_str());
}

TEST(BoundsCsv, RoundTripIsByteIdentical) {
  const std::vector<std::size_t> ms{2, 3, 7};
  const auto gammas = gamma_grid(0.05, 1.0, 7);
  const auto rows = bounds_sweep(ms, gammas);
  std::ostringstream first;
  write_bounds_csv(first, rows);
  std::istringstream in(first.str());
  const auto back = read_bounds_csv(in);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].m, rows[i].m);
    EXPECT_EQ(back[i].gamma, rows[i].gamma);
    EXPECT_EQ(back[i].best_lb, rows[i].best_lb);
    EXPECT_EQ(back[i].ub_jensen, rows[i].ub_jensen);
  }
  std::ostringstream second;
  write_bounds_csv(second, back);
  EXPECT_EQ(first.str(), second.str());
}

TEST(BoundsCsv, HeaderAndErrors) {
  const auto rows = bounds_sweep(std::vector<std::size_t>{4}, std::vector<double>{0.5});
  std::ostringstream out;
  write_bounds_csv(out, rows);
  const std::string header = out.str().substr(0, out.str().find('\n'));
  EXPECT_EQ(header.rfind("m,gamma,", 0), 0u);
  EXPECT_NE(header.find("best_lb_norm"), std::string::npos);
  std::istringstream empty("");
  EXPECT_THROW(read_bounds_csv(empty), InvalidParameters);
  std::istringstream narrow(header + "\n4,0.5,1\n");
  EXPECT_THROW(read_bounds_csv(narrow), InvalidParameters);
}

TEST(BoundsJson, CarriesEveryField) {
  const Json j = to_json(best_bounds(3, 0.6));
  EXPECT_EQ(j["m"].get<std::size_t>(), 3u);
  for (const char* group : {"raw", "normalized"})
    for (const char* key : {"lb_degenerate", "lb_uniform", "ub_constraint", "ub_jensen", "best_lb", "best_ub"})
      EXPECT_TRUE(j[group].contains(key)) << group << "." << key;
  EXPECT_EQ(j["raw"]["best_lb"].get<double>(), best_bounds(3, 0.6).best_lb);
  EXPECT_EQ(j["normalized"]["best_lb"].get<double>(), best_bounds(3, 0.6).best_lb / 9);
}

TEST(TopCells, CsvLayout) {
  const HeadingGridResult r = grid_search_headings(2, 0.5, 11, SignPatterns::kSymmetric, kDefaultEvaluationCap, 3);
  std::ostringstream out;
  write_top_cells_csv(out, r);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "rank,eta2,alpha_1_1,alpha_1_2,alpha_2_1,alpha_2_2");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Pgm, HeaderAndPayload) {
  const std::vector<Point> t{{0, 0}, {1, 0}};
  const RegionRaster r = stealth_region_raster(t, 0.5, default_region_bounds(t), 16);
  std::ostringstream out;
  write_pgm(out, r);
  const std::string s = out.str();
  const std::string header = "P5\n16 16\n255\n";
  ASSERT_EQ(s.size(), header.size() + 256);
  EXPECT_EQ(s.substr(0, header.size()), header);
  std::size_t white = 0;
  for (std::size_t i = header.size(); i < s.size(); ++i) {
    const auto byte = static_cast<unsigned char>(s[i]);
    EXPECT_TRUE(byte == 0 || byte == 255);
    white += byte == 255;
  }
  EXPECT_EQ(white, r.feasible_count());
}

TEST(Svg, RegionIsWellFormed) {
  const std::vector<Point> t{{0, 0}, {1, 0}, {0.5, 0.8}};
  const RegionRaster r = stealth_region_raster(t, 0.5, default_region_bounds(t), 64);
  EXPECT_FALSE(contour_segments(r).empty());
  std::ostringstream out;
  write_region_svg(out, r, t);
  const std::string s = out.str();
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  EXPECT_GE(count(s, "<circle"), 3);
}

TEST(Svg, BoundsAndDiagram) {
  const auto rows = bounds_sweep(std::vector<std::size_t>{2, 4}, gamma_grid(0.1, 1.0, 10));
  std::ostringstream plot;
  write_bounds_svg(plot, rows, true);
  EXPECT_NE(plot.str().find("</svg>"), std::string::npos);
  EXPECT_GE(count(plot.str(), "<polyline"), 4);

  const Scenario s = theorem1_config({0, 0}, {1, 0}, 0.6, 2.0);
  std::ostringstream diagram;
  write_diagram_svg(diagram, s, 0.6, true);
  EXPECT_GE(count(diagram.str(), "<circle"), 7);
  const Scenario three{{{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 1}}, 1.0};
  std::ostringstream bad;
  EXPECT_THROW(write_diagram_svg(bad, three, 0.6, false), InvalidParameters);
}

TEST(SolveJson, HasResultFields) {
  SolveOptions o;
  o.starts = 2;
  const SolveResult r = solve(3, 0.6, o);
  const Json j = to_json(r, false);
  EXPECT_EQ(j["m"].get<std::size_t>(), 3u);
  EXPECT_EQ(j["eta2"].get<double>(), r.eta2);
  EXPECT_EQ(j["best_alpha"]["alpha"].size(), 3u);
  EXPECT_EQ(j["per_start"].size(), r.per_start.size());
}
