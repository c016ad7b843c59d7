// stealth_place: command-line front end for the stealth_core library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stealth/analytic2x2.hpp"
#include "stealth/bounds.hpp"
#include "stealth/errors.hpp"
#include "stealth/fim.hpp"
#include "stealth/io.hpp"
#include "stealth/oracle.hpp"
#include "stealth/solver.hpp"

namespace {

using stealth::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

constexpr double kFimTolerance = 1e-9;

// Raised by a subcommand whose check came out negative after printing its
// report.
struct VerificationFailed {};

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    stealth::save_json(path, j);
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw stealth::InvalidParameters("cannot write '" + path + "'");
  return out;
}

stealth::Point to_point(const std::vector<double>& v) { return {v.at(0), v.at(1)}; }

Json scenario_report(const stealth::Scenario& s) {
  Json j = {{"scenario", stealth::to_json(s)}, {"fim", stealth::to_json(stealth::det_fim(s))}};
  if (s.sensors.size() == 2 && s.targets.size() == 2) {
    const stealth::QuadAngles q = stealth::quad_angles(s);
    j["quad_angles"] = stealth::to_json(q);
    j["cases"] = stealth::to_json(stealth::classify_case(q));
    j["lemma1"] = stealth::to_json(stealth::lemma1_check(q));
  }
  return j;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
  std::vector<std::size_t> m_list{3, 6, 9};
  double gamma_min = 0.05;
  double gamma_max = 1.0;
  std::size_t gamma_steps = 40;
  bool normalize = false;
  std::string out = "csv";
  std::string output;
  std::string plot;
};

void run_bounds(const BoundsArgs& a) {
  const std::vector<double> gammas = stealth::gamma_grid(a.gamma_min, a.gamma_max, a.gamma_steps);
  const std::vector<stealth::BoundsReport> rows = stealth::bounds_sweep(a.m_list, gammas);

  std::ostringstream text;
  if (a.out == "csv") {
    stealth::write_bounds_csv(text, rows);
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(stealth::to_json(a.normalize ? r.normalized() : r));
    text << arr.dump(2) << '\n';
  }
  if (a.output.empty()) {
    std::cout << text.str();
  } else {
    open_output(a.output) << text.str();
  }
  if (!a.plot.empty()) {
    std::ofstream svg = open_output(a.plot);
    stealth::write_bounds_svg(svg, rows, a.normalize);
  }
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::size_t m = 3;
  double gamma = 0.6;
  stealth::SolveOptions opts;
  std::string method = "penalty-gradient";
  bool no_warm_starts = false;
  std::string output;
};

void run_solve(SolveArgs a) {
  a.opts.method = stealth::parse_solver_method(a.method);
  a.opts.warm_starts = !a.no_warm_starts;
  const stealth::SolveResult result = stealth::solve(a.m, a.gamma, a.opts);
  Json j = {{"result", stealth::to_json(result, a.opts.trace)}};
  try {
    j["certificate"] = stealth::to_json(stealth::certify(result, a.opts.tol_opt));
  } catch (const stealth::BoundViolation&) {
    emit(j, a.output);
    throw;
  }
  emit(j, a.output);
}

// ---- optimal2x2 -----------------------------------------------------------

struct Optimal2x2Args {
  std::string mode = "thm1";
  std::vector<double> t1{0.0, 0.0};
  std::vector<double> t2;
  std::optional<double> d;
  double gamma = 0.5;
  std::optional<double> diameter;
  double phase = 0.0;
  double arc_fraction = 0.5;
  std::string output;
  std::string svg;
};

void run_optimal2x2(const Optimal2x2Args& a) {
  const stealth::Point t1 = to_point(a.t1);
  stealth::Point t2 = t1 + stealth::Point{1.0, 0.0};
  if (!a.t2.empty()) t2 = to_point(a.t2);
  if (a.d) t2 = t1 + stealth::Point{*a.d, 0.0};

  stealth::Scenario s;
  Json extra;
  if (a.mode == "thm1") {
    const double diameter = a.diameter.value_or(stealth::distance(t1, t2) / a.gamma);
    s = stealth::theorem1_config(t1, t2, a.gamma, diameter, a.phase);
    extra = stealth::to_json(stealth::verify_theorem1(s, a.gamma));
  } else {
    s = stealth::theorem2_config(t1, t2, a.gamma, a.arc_fraction);
  }
  Json j = scenario_report(s);
  j["mode"] = a.mode;
  j["gamma"] = a.gamma;
  if (!extra.is_null()) j["theorem1"] = extra;
  std::cout << j.dump(2) << '\n';
  if (!a.output.empty()) stealth::save_json(a.output, stealth::to_json(s));
  if (!a.svg.empty()) {
    std::ofstream out = open_output(a.svg);
    stealth::write_diagram_svg(out, s, a.gamma, a.mode == "thm1");
  }
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string scenario;
  double gamma = 1.0;
};

void run_verify(const VerifyArgs& a) {
  const stealth::Scenario s = stealth::load_scenario(a.scenario);
  const stealth::Theorem1Diagnostics diag = stealth::verify_theorem1(s, a.gamma);
  Json j = {{"ok", diag.ok()}, {"theorem1", stealth::to_json(diag)}};
  if (s.sensors.size() == 2 && s.targets.size() == 2) {
    const Json report = scenario_report(s);
    j["quad_angles"] = report["quad_angles"];
    j["cases"] = report["cases"];
    j["lemma1"] = report["lemma1"];
  }
  std::cout << j.dump(2) << '\n';
  if (!diag.ok()) throw VerificationFailed{};
}

// ---- region ---------------------------------------------------------------

struct RegionArgs {
  std::string targets;
  double gamma = 0.6;
  std::vector<double> bounds;
  std::size_t res = 512;
  std::string out = "pgm";
  std::string output;
};

void run_region(const RegionArgs& a) {
  const stealth::Scenario s = stealth::load_scenario(a.targets, false);
  const stealth::Rect box = a.bounds.empty() ? stealth::default_region_bounds(s.targets)
                                             : stealth::Rect{a.bounds[0], a.bounds[1], a.bounds[2], a.bounds[3]};
  const stealth::RegionRaster raster = stealth::stealth_region_raster(s.targets, a.gamma, box, a.res);
  {
    std::ofstream out = open_output(a.output);
    if (a.out == "pgm") {
      stealth::write_pgm(out, raster);
    } else {
      stealth::write_region_svg(out, raster, s.targets);
    }
  }
  const Json j = {{"components", stealth::count_components(raster)},
                  {"feasible_cells", raster.feasible_count()},
                  {"cells", raster.mask.size()},
                  {"resolution", raster.resolution},
                  {"gamma", raster.gamma},
                  {"bounds", {box.xmin, box.xmax, box.ymin, box.ymax}}};
  std::cout << j.dump(2) << '\n';
}

// ---- fimcheck -------------------------------------------------------------

struct FimcheckArgs {
  std::string scenario;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::size_t max_size = 6;
};

void run_fimcheck(const FimcheckArgs& a) {
  double worst = 0.0;
  std::size_t count = 0;
  Json j;
  if (!a.scenario.empty()) {
    const stealth::Scenario s = stealth::load_scenario(a.scenario);
    worst = stealth::fim_identity_error(s);
    count = 1;
    j["fim"] = stealth::to_json(stealth::det_fim(s));
  }
  for (std::size_t i = 0; i < a.random; ++i) {
    const stealth::Scenario s = stealth::random_scenario(a.seed + i, a.max_size);
    worst = std::max(worst, stealth::fim_identity_error(s));
    ++count;
  }
  j["scenarios"] = count;
  j["max_relative_error"] = worst;
  j["tolerance"] = kFimTolerance;
  j["ok"] = worst <= kFimTolerance;
  std::cout << j.dump(2) << '\n';
  if (worst > kFimTolerance) throw VerificationFailed{};
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::size_t m = 3;
  double gamma = 0.6;
  std::size_t resolution = 41;
  std::string patterns = "symmetric";
  std::uint64_t max_evaluations = stealth::kDefaultEvaluationCap;
  std::size_t top_k = 0;
  std::string top_csv;
  std::string output;
};

void run_oracle(const OracleArgs& a) {
  const auto patterns = a.patterns == "all" ? stealth::SignPatterns::kAll : stealth::SignPatterns::kSymmetric;
  const std::size_t keep = a.top_csv.empty() ? 0 : std::max<std::size_t>(a.top_k, 1);
  const stealth::HeadingGridResult r =
      stealth::grid_search_headings(a.m, a.gamma, a.resolution, patterns, a.max_evaluations, keep);
  Json j = stealth::to_json(r);
  j["m"] = a.m;
  j["gamma"] = a.gamma;
  j["resolution"] = a.resolution;
  j["sign_patterns"] = a.patterns;
  emit(j, a.output);
  if (!a.top_csv.empty()) {
    std::ofstream out = open_output(a.top_csv);
    stealth::write_top_cells_csv(out, r);
  }
}

struct Oracle2x2Args {
  double gamma = 0.6;
  std::string mode = "unconstrained";
  std::size_t resolution = 201;
  std::vector<double> t1{0.0, 0.0};
  std::vector<double> t2{1.0, 0.0};
  std::string output;
};

void run_oracle2x2(const Oracle2x2Args& a) {
  const auto mode =
      a.mode == "both-between" ? stealth::Oracle2x2Mode::kBothBetween : stealth::Oracle2x2Mode::kUnconstrained;
  const stealth::Oracle2x2Result r =
      stealth::oracle_2x2(to_point(a.t1), to_point(a.t2), a.gamma, mode, a.resolution);
  Json j = stealth::to_json(r);
  j["gamma"] = a.gamma;
  j["mode"] = a.mode;
  j["resolution"] = a.resolution;
  emit(j, a.output);
}

void report_error(bool as_json, const std::string& kind, const std::string& message, int code) {
  if (as_json) {
    const Json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
    std::cerr << j.dump() << '\n';
  } else {
    std::cerr << "stealth_place: " << kind << ": " << message << '\n';
  }
}

int exit_code_for(const stealth::Error& e) {
  if (dynamic_cast<const stealth::InvalidParameters*>(&e) != nullptr) return kExitUsage;
  if (dynamic_cast<const stealth::DomainError*>(&e) != nullptr) return kExitUsage;
  return kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stealthy range-sensor placement: bounds, solvers and geometric checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "Report errors as one JSON object on stderr");

  const auto gamma_range = CLI::Range(0.0, 1.0);
  const auto point = [](CLI::Option* opt) { return opt->delimiter(',')->expected(2); };

  BoundsArgs bounds;
  auto* cmd_bounds = app.add_subcommand("bounds", "Sweep the analytic bounds over m and gamma");
  cmd_bounds->add_option("--m-list", bounds.m_list, "Sensor counts, comma separated")->delimiter(',');
  cmd_bounds->add_option("--gamma-min", bounds.gamma_min)->check(gamma_range);
  cmd_bounds->add_option("--gamma-max", bounds.gamma_max)->check(gamma_range);
  cmd_bounds->add_option("--gamma-steps", bounds.gamma_steps)->check(CLI::PositiveNumber);
  cmd_bounds->add_flag("--normalize", bounds.normalize, "Divide by m^2 in JSON output and plots");
  cmd_bounds->add_option("--out", bounds.out)->check(CLI::IsMember({"csv", "json"}));
  cmd_bounds->add_option("--output,-o", bounds.output, "Table file (default stdout)");
  cmd_bounds->add_option("--plot", bounds.plot, "SVG plot file");

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Multi-start local solve of the heading program");
  cmd_solve->add_option("--m", solve.m)->required();
  cmd_solve->add_option("--gamma", solve.gamma)->required()->check(gamma_range);
  cmd_solve->add_option("--starts", solve.opts.starts);
  cmd_solve->add_option("--seed", solve.opts.seed);
  cmd_solve->add_option("--method", solve.method)
      ->check(CLI::IsMember({"penalty-gradient", "augmented-lagrangian"}));
  cmd_solve->add_flag("--no-warm-starts", solve.no_warm_starts);
  cmd_solve->add_option("--max-iters", solve.opts.max_iters);
  cmd_solve->add_option("--tol-feas", solve.opts.tol_feas);
  cmd_solve->add_option("--tol-opt", solve.opts.tol_opt);
  cmd_solve->add_flag("--trace", solve.opts.trace, "Include per-start trajectories");
  cmd_solve->add_option("--output,-o", solve.output);

  Optimal2x2Args opt2;
  auto* cmd_opt2 = app.add_subcommand("optimal2x2", "Construct a two-sensor optimum");
  cmd_opt2->add_option("--mode", opt2.mode)->check(CLI::IsMember({"thm1", "thm2"}));
  point(cmd_opt2->add_option("--t1", opt2.t1, "x,y"));
  auto* t2_opt = point(cmd_opt2->add_option("--t2", opt2.t2, "x,y"));
  cmd_opt2->add_option("--d", opt2.d, "Target separation, t2 = t1 + (d, 0)")->excludes(t2_opt);
  cmd_opt2->add_option("--gamma", opt2.gamma)->required()->check(gamma_range);
  cmd_opt2->add_option("--diameter,-D", opt2.diameter, "Circle diameter (thm1, default d / gamma)");
  cmd_opt2->add_option("--phase", opt2.phase, "Rotation of the sensor diameter (thm1)");
  cmd_opt2->add_option("--arc-fraction", opt2.arc_fraction, "Position on the boundary arc (thm2)")
      ->check(CLI::Range(0.0, 1.0));
  cmd_opt2->add_option("--output,-o", opt2.output, "Scenario file for the constructed placement");
  cmd_opt2->add_option("--svg", opt2.svg);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check the concyclic diametral optimality conditions");
  cmd_verify->add_option("--scenario", verify.scenario)->required()->check(CLI::ExistingFile);
  cmd_verify->add_option("--gamma", verify.gamma)->required()->check(gamma_range);

  RegionArgs region;
  auto* cmd_region = app.add_subcommand("region", "Rasterize the single-sensor stealth region");
  cmd_region->add_option("--targets", region.targets, "Scenario file; sensors are ignored")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_region->add_option("--gamma", region.gamma)->required()->check(gamma_range);
  cmd_region->add_option("--bounds", region.bounds, "xmin,xmax,ymin,ymax")->delimiter(',')->expected(4);
  cmd_region->add_option("--res", region.res)->check(CLI::Range(2, 1 << 14));
  cmd_region->add_option("--out", region.out)->check(CLI::IsMember({"pgm", "svg"}));
  cmd_region->add_option("--output,-o", region.output)->required();

  FimcheckArgs fimcheck;
  auto* cmd_fim = app.add_subcommand("fimcheck", "Compare the pair-sum FIM determinant with the assembled FIM");
  auto* scen_opt = cmd_fim->add_option("--scenario", fimcheck.scenario)->check(CLI::ExistingFile);
  auto* rand_opt = cmd_fim->add_option("--random", fimcheck.random, "Number of random scenarios");
  cmd_fim->add_option("--seed", fimcheck.seed);
  cmd_fim->add_option("--max-size", fimcheck.max_size, "Largest m and n drawn")->check(CLI::Range(2, 64));
  cmd_fim->callback([&] {
    if (scen_opt->count() == 0 && rand_opt->count() == 0)
      throw CLI::RequiredError("--scenario or --random");
  });

  OracleArgs oracle;
  auto* cmd_oracle = app.add_subcommand("oracle", "Exhaustive heading-grid search for m <= 4");
  cmd_oracle->add_option("--m", oracle.m)->required();
  cmd_oracle->add_option("--gamma", oracle.gamma)->required()->check(gamma_range);
  cmd_oracle->add_option("--resolution", oracle.resolution);
  cmd_oracle->add_option("--sign-patterns", oracle.patterns)->check(CLI::IsMember({"all", "symmetric"}));
  cmd_oracle->add_option("--max-evaluations", oracle.max_evaluations);
  cmd_oracle->add_option("--top-k", oracle.top_k, "Rows in the --top-csv table");
  cmd_oracle->add_option("--top-csv", oracle.top_csv);
  cmd_oracle->add_option("--output,-o", oracle.output);

  Oracle2x2Args oracle2;
  auto* cmd_oracle2 = app.add_subcommand("oracle2x2", "Brute-force two-sensor placement search");
  cmd_oracle2->add_option("--gamma", oracle2.gamma)->required()->check(gamma_range);
  cmd_oracle2->add_option("--mode", oracle2.mode)->check(CLI::IsMember({"unconstrained", "both-between"}));
  cmd_oracle2->add_option("--resolution", oracle2.resolution);
  point(cmd_oracle2->add_option("--t1", oracle2.t1, "x,y"));
  point(cmd_oracle2->add_option("--t2", oracle2.t2, "x,y"));
  cmd_oracle2->add_option("--output,-o", oracle2.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(json_errors, "UsageError", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (*cmd_bounds) run_bounds(bounds);
    if (*cmd_solve) run_solve(solve);
    if (*cmd_opt2) run_optimal2x2(opt2);
    if (*cmd_verify) run_verify(verify);
    if (*cmd_region) run_region(region);
    if (*cmd_fim) run_fimcheck(fimcheck);
    if (*cmd_oracle) run_oracle(oracle);
    if (*cmd_oracle2) run_oracle2x2(oracle2);
  } catch (const VerificationFailed&) {
    report_error(json_errors, "VerificationFailed", "check did not pass", kExitFailed);
    return kExitFailed;
  } catch (const stealth::Error& e) {
    const int code = exit_code_for(e);
    report_error(json_errors, e.kind(), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    report_error(json_errors, "Error", e.what(), kExitFailed);
    return kExitFailed;
  }
  return kExitOk;
}
