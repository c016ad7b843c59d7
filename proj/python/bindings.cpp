#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "stealth/analytic2x2.hpp"
#include "stealth/bounds.hpp"
#include "stealth/errors.hpp"
#include "stealth/fim.hpp"
#include "stealth/geometry.hpp"
#include "stealth/io.hpp"
#include "stealth/oracle.hpp"
#include "stealth/solver.hpp"

namespace py = pybind11;
using namespace stealth;

namespace {

Point as_point(const std::array<double, 2>& p) { return {p[0], p[1]}; }

std::vector<std::array<double, 2>> as_pairs(const std::vector<Point>& pts) {
  std::vector<std::array<double, 2>> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back({p.x, p.y});
  return out;
}

std::vector<Point> as_points(const std::vector<std::array<double, 2>>& pairs) {
  std::vector<Point> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(as_point(p));
  return out;
}

template <typename T>
py::array_t<T> grid(const std::vector<T>& values, std::size_t n) {
  py::array_t<T> out({n, n});
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stealthy range-sensor placement: FIM criteria, analytic bounds, solvers and oracles.";

  auto base = py::register_exception<Error>(m, "StealthError", PyExc_RuntimeError);
  py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", base);
  py::register_exception<InfeasibleParameters>(m, "InfeasibleParameters", base);
  py::register_exception<InvalidParameters>(m, "InvalidParameters", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<NoFeasiblePoint>(m, "NoFeasiblePoint", base);
  py::register_exception<BoundViolation>(m, "BoundViolation", base);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base);

  // Points cross the boundary as (x, y) pairs.
  py::class_<Scenario>(m, "Scenario")
      .def(py::init([](const std::vector<std::array<double, 2>>& targets,
                       const std::vector<std::array<double, 2>>& sensors, double sigma) {
             return Scenario{as_points(targets), as_points(sensors), sigma};
           }),
           py::arg("targets"), py::arg("sensors") = std::vector<std::array<double, 2>>{}, py::arg("sigma") = 1.0)
      .def_property(
          "targets", [](const Scenario& s) { return as_pairs(s.targets); },
          [](Scenario& s, const std::vector<std::array<double, 2>>& v) { s.targets = as_points(v); })
      .def_property(
          "sensors", [](const Scenario& s) { return as_pairs(s.sensors); },
          [](Scenario& s, const std::vector<std::array<double, 2>>& v) { s.sensors = as_points(v); })
      .def_readwrite("sigma", &Scenario::sigma)
      .def("validate", &Scenario::validate)
      .def("to_json", [](const Scenario& s) { return to_json(s).dump(); })
      .def_static(
          "from_json",
          [](const std::string& text, bool require_sensors) {
            return scenario_from_json(Json::parse(text), require_sensors);
          },
          py::arg("text"), py::arg("require_sensors") = true)
      .def("__repr__", [](const Scenario& s) {
        return "Scenario(m=" + std::to_string(s.sensors.size()) + ", n=" + std::to_string(s.targets.size()) + ")";
      });
  m.def("load_scenario", &load_scenario, py::arg("path"), py::arg("require_sensors") = true);
  m.def("random_scenario", py::overload_cast<std::uint64_t, std::size_t, std::size_t, double, double>(&random_scenario),
        py::arg("seed"), py::arg("m"), py::arg("n"), py::arg("sigma") = 1.0, py::arg("min_separation") = 1e-3);

  py::class_<HeadingConfig>(m, "HeadingConfig")
      .def(py::init([](const std::vector<std::array<double, 2>>& alpha, double gamma) {
             return HeadingConfig{alpha, gamma};
           }),
           py::arg("alpha"), py::arg("gamma"))
      .def_readwrite("alpha", &HeadingConfig::alpha)
      .def_readwrite("gamma", &HeadingConfig::gamma)
      .def("constraint_violation", &HeadingConfig::constraint_violation)
      .def("validate", &HeadingConfig::validate, py::arg("tolerance") = 1e-9);
  m.def("positions_from_headings", &positions_from_headings, py::arg("cfg"), py::arg("d"));
  m.def(
      "subtended_angle",
      [](std::array<double, 2> apex, std::array<double, 2> a, std::array<double, 2> b) {
        return subtended_angle(as_point(apex), as_point(a), as_point(b));
      },
      py::arg("apex"), py::arg("a"), py::arg("b"));

  // fim
  py::class_<FimReport>(m, "FimReport")
      .def_readonly("target_info", &FimReport::target_info)
      .def_readonly("sensor_info", &FimReport::sensor_info)
      .def_readonly("objective", &FimReport::objective)
      .def_readonly("leakage", &FimReport::leakage);
  m.def("det_fim", &det_fim, py::arg("scenario"));
  m.def("empirical_fim_det", &empirical_fim_det, py::arg("scenario"), py::arg("target_index"));
  m.def("fim_identity_error", &fim_identity_error, py::arg("scenario"));
  m.def(
      "stealth_region_raster",
      [](const std::vector<std::array<double, 2>>& targets, double gamma, std::array<double, 4> bounds,
         std::size_t resolution) {
        const std::vector<Point> pts = as_points(targets);
        const RegionRaster r =
            stealth_region_raster(pts, gamma, Rect{bounds[0], bounds[1], bounds[2], bounds[3]}, resolution);
        py::dict out;
        out["mask"] = grid(r.mask, r.resolution).attr("astype")("bool");
        out["field"] = grid(r.field, r.resolution);
        out["components"] = count_components(r);
        return out;
      },
      py::arg("targets"), py::arg("gamma"), py::arg("bounds"), py::arg("resolution"),
      "Returns a dict with the boolean mask (row 0 = top), the constraint field and the component count.");

  // analytic2x2
  py::class_<QuadAngles>(m, "QuadAngles")
      .def(py::init<double, double, double, double>(), py::arg("theta1"), py::arg("theta2"), py::arg("beta1"),
           py::arg("beta2"))
      .def_readwrite("theta1", &QuadAngles::theta1)
      .def_readwrite("theta2", &QuadAngles::theta2)
      .def_readwrite("beta1", &QuadAngles::beta1)
      .def_readwrite("beta2", &QuadAngles::beta2);
  m.def("quad_angles", &quad_angles, py::arg("scenario"));
  py::class_<CaseLabel>(m, "CaseLabel")
      .def_property_readonly("labels", &CaseLabel::labels)
      .def_readonly("equality", &CaseLabel::equality)
      .def_readonly("slack", &CaseLabel::slack)
      .def_property_readonly("feasible", &CaseLabel::feasible);
  m.def("classify_case", &classify_case, py::arg("q"), py::arg("tol") = kCaseTolerance);
  py::class_<Lemma1Result>(m, "Lemma1Result")
      .def_readonly("satisfied", &Lemma1Result::satisfied)
      .def_readonly("slack", &Lemma1Result::slack);
  m.def("lemma1_check", &lemma1_check, py::arg("q"), py::arg("tol") = 1e-9);
  m.def(
      "theorem1_config",
      [](std::array<double, 2> t1, std::array<double, 2> t2, double gamma, double diameter, double phase) {
        return theorem1_config(as_point(t1), as_point(t2), gamma, diameter, phase);
      },
      py::arg("t1"), py::arg("t2"), py::arg("gamma"), py::arg("diameter"), py::arg("phase") = 0.0);
  py::class_<Theorem1Diagnostics>(m, "Theorem1Diagnostics")
      .def_property_readonly("ok", &Theorem1Diagnostics::ok)
      .def_readonly("concyclic", &Theorem1Diagnostics::concyclic)
      .def_readonly("diametral", &Theorem1Diagnostics::diametral)
      .def_readonly("diameter_ok", &Theorem1Diagnostics::diameter_ok)
      .def_readonly("concyclicity_residual", &Theorem1Diagnostics::concyclicity_residual)
      .def_readonly("circumdiameter", &Theorem1Diagnostics::circumdiameter);
  m.def("verify_theorem1", &verify_theorem1, py::arg("scenario"), py::arg("gamma"));
  m.def(
      "theorem2_config",
      [](std::array<double, 2> t1, std::array<double, 2> t2, double gamma, double arc_fraction) {
        return theorem2_config(as_point(t1), as_point(t2), gamma, arc_fraction);
      },
      py::arg("t1"), py::arg("t2"), py::arg("gamma"), py::arg("arc_fraction") = 0.5);
  py::class_<Oracle2x2Result>(m, "Oracle2x2Result")
      .def_readonly("best", &Oracle2x2Result::best)
      .def_property_readonly("s1", [](const Oracle2x2Result& r) { return std::array<double, 2>{r.s1.x, r.s1.y}; })
      .def_property_readonly("s2", [](const Oracle2x2Result& r) { return std::array<double, 2>{r.s2.x, r.s2.y}; })
      .def_readonly("feasible_points", &Oracle2x2Result::feasible_points);
  m.def(
      "oracle_2x2",
      [](std::array<double, 2> t1, std::array<double, 2> t2, double gamma, const std::string& mode,
         std::size_t resolution) {
        if (mode != "unconstrained" && mode != "both-between") throw InvalidParameters("unknown mode '" + mode + "'");
        return oracle_2x2(as_point(t1), as_point(t2), gamma,
                          mode == "both-between" ? Oracle2x2Mode::kBothBetween : Oracle2x2Mode::kUnconstrained,
                          resolution);
      },
      py::arg("t1"), py::arg("t2"), py::arg("gamma"), py::arg("mode") = "unconstrained", py::arg("resolution") = 201);

  // bounds
  py::class_<BoundsReport>(m, "BoundsReport")
      .def_readonly("m", &BoundsReport::m)
      .def_readonly("gamma", &BoundsReport::gamma)
      .def_readonly("lb_degenerate", &BoundsReport::lb_degenerate)
      .def_readonly("lb_uniform", &BoundsReport::lb_uniform)
      .def_readonly("ub_constraint", &BoundsReport::ub_constraint)
      .def_readonly("ub_jensen", &BoundsReport::ub_jensen)
      .def_readonly("best_lb", &BoundsReport::best_lb)
      .def_readonly("best_ub", &BoundsReport::best_ub)
      .def("normalized", &BoundsReport::normalized);
  m.def("best_bounds", &best_bounds, py::arg("m"), py::arg("gamma"));
  m.def("degenerate_config", &degenerate_config, py::arg("m"), py::arg("gamma"));
  m.def("uniform_config", &uniform_config, py::arg("m"), py::arg("gamma"));
  m.def("degenerate_lower_bound", &degenerate_lower_bound, py::arg("m"), py::arg("gamma"));
  m.def("uniform_lower_bound", &uniform_lower_bound, py::arg("m"), py::arg("gamma"));
  m.def("constraint_upper_bound", &constraint_upper_bound, py::arg("m"), py::arg("gamma"));
  m.def("jensen_upper_bound", &jensen_upper_bound, py::arg("m"), py::arg("gamma"));
  m.def("g_envelope", &g_envelope, py::arg("theta"));
  m.def(
      "bounds_csv",
      [](const std::vector<std::size_t>& ms, const std::vector<double>& gammas) {
        std::ostringstream out;
        write_bounds_csv(out, bounds_sweep(ms, gammas));
        return out.str();
      },
      py::arg("m_list"), py::arg("gammas"));

  // solver
  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init<>())
      .def_readwrite("starts", &SolveOptions::starts)
      .def_readwrite("max_iters", &SolveOptions::max_iters)
      .def_readwrite("tol_feas", &SolveOptions::tol_feas)
      .def_readwrite("tol_opt", &SolveOptions::tol_opt)
      .def_readwrite("seed", &SolveOptions::seed)
      .def_readwrite("warm_starts", &SolveOptions::warm_starts)
      .def_readwrite("trace", &SolveOptions::trace)
      .def_property(
          "method", [](const SolveOptions& o) { return to_string(o.method); },
          [](SolveOptions& o, const std::string& name) { o.method = parse_solver_method(name); });
  py::class_<StartReport>(m, "StartReport")
      .def_property_readonly("kind", [](const StartReport& r) { return to_string(r.kind); })
      .def_readonly("index", &StartReport::index)
      .def_readonly("eta2", &StartReport::eta2)
      .def_readonly("feasibility_residual", &StartReport::feasibility_residual)
      .def_readonly("iterations", &StartReport::iterations)
      .def_readonly("incumbent", &StartReport::incumbent)
      .def_readonly("trajectory", &StartReport::trajectory);
  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("m", &SolveResult::m)
      .def_readonly("gamma", &SolveResult::gamma)
      .def_readonly("best_alpha", &SolveResult::best_alpha)
      .def_readonly("eta2", &SolveResult::eta2)
      .def_readonly("per_start", &SolveResult::per_start)
      .def_readonly("best_lb", &SolveResult::best_lb)
      .def_readonly("best_ub", &SolveResult::best_ub)
      .def("to_json", [](const SolveResult& r, bool trajectories) { return to_json(r, trajectories).dump(); },
           py::arg("include_trajectories") = false);
  py::class_<Certificate>(m, "Certificate")
      .def_readonly("eta2", &Certificate::eta2)
      .def_readonly("best_lb", &Certificate::best_lb)
      .def_readonly("best_ub", &Certificate::best_ub)
      .def_readonly("gap", &Certificate::gap)
      .def_readonly("excess", &Certificate::excess);
  m.def("evaluate_eta2", &evaluate_eta2, py::arg("cfg"));
  m.def("solve", &solve, py::arg("m"), py::arg("gamma"), py::arg("options") = SolveOptions{},
        py::call_guard<py::gil_scoped_release>());
  m.def("certify", &certify, py::arg("result"), py::arg("tol_opt") = 1e-6);

  // oracle
  py::class_<HeadingGridResult>(m, "HeadingGridResult")
      .def_readonly("eta2", &HeadingGridResult::eta2)
      .def_readonly("argmax", &HeadingGridResult::argmax)
      .def_readonly("evaluations", &HeadingGridResult::evaluations)
      .def_readonly("patterns", &HeadingGridResult::patterns)
      .def_readonly("top", &HeadingGridResult::top);
  m.def(
      "grid_search_headings",
      [](std::size_t mm, double gamma, std::size_t resolution, const std::string& patterns,
         std::uint64_t max_evaluations, std::size_t top_k) {
        if (patterns != "all" && patterns != "symmetric")
          throw InvalidParameters("unknown sign pattern mode '" + patterns + "'");
        py::gil_scoped_release release;
        return grid_search_headings(mm, gamma, resolution,
                                    patterns == "all" ? SignPatterns::kAll : SignPatterns::kSymmetric,
                                    max_evaluations, top_k);
      },
      py::arg("m"), py::arg("gamma"), py::arg("resolution"), py::arg("sign_patterns") = "symmetric",
      py::arg("max_evaluations") = kDefaultEvaluationCap, py::arg("top_k") = 0);
}
