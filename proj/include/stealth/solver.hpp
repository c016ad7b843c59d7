#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stealth/geometry.hpp"

namespace stealth {

// min over both targets of sum_{i<j} sin^2(alpha_ik - alpha_jk). Rows are not
// checked for feasibility.
double evaluate_eta2(const HeadingConfig& cfg);

enum class SolverMethod {
  kPenaltyGradient,      // projected gradient ascent on an annealed softmin
  kAugmentedLagrangian,  // epigraph form, inequality augmented Lagrangian
};

std::string to_string(SolverMethod method);
// Accepts "penalty-gradient" and "augmented-lagrangian".
SolverMethod parse_solver_method(const std::string& name);

struct SolveOptions {
  std::size_t starts = 16;
  std::size_t max_iters = 5000;
  double tol_feas = 1e-8;
  double tol_opt = 1e-6;
  std::uint64_t seed = 0;
  bool warm_starts = true;
  SolverMethod method = SolverMethod::kPenaltyGradient;
  bool trace = false;  // keep per-iteration eta^2 trajectories

  void validate() const;
};

enum class StartKind { kRandom, kWarmDegenerate, kWarmUniform };
std::string to_string(StartKind kind);

struct StartReport {
  StartKind kind = StartKind::kRandom;
  std::size_t index = 0;  // random-start index (seed stream), 0 for warm starts
  double eta2 = 0.0;      // best feasible eta^2 seen along the run
  double feasibility_residual = 0.0;
  std::size_t iterations = 0;
  HeadingConfig incumbent;
  std::vector<double> trajectory;  // filled when SolveOptions::trace is set
};

struct SolveResult {
  std::size_t m = 0;
  double gamma = 0.0;
  HeadingConfig best_alpha;
  double eta2 = 0.0;
  std::vector<StartReport> per_start;
  double best_lb = 0.0;
  double best_ub = 0.0;
};

// Local ascent from `init` with each row's side (orthant) fixed to the sign
// of its heading sum. The rows are first projected onto their feasible
// triangle, so any finite start is admissible.
StartReport local_solve(const HeadingConfig& init, const SolveOptions& opts);

// Multi-start maximization of eta^2 over feasible heading configurations.
// Random starts draw alpha ~ Uniform[-asin(gamma), asin(gamma)]^{m x 2};
// warm starts add the degenerate and uniform analytic configurations.
SolveResult solve(std::size_t m, double gamma, const SolveOptions& opts = {});

struct Certificate {
  double eta2 = 0.0;
  double best_lb = 0.0;
  double best_ub = 0.0;
  double gap = 0.0;     // best_ub - eta2
  double excess = 0.0;  // eta2 - best_lb
};

// Throws BoundViolation when eta2 exceeds best_ub + tol_opt.
Certificate certify(const SolveResult& result, double tol_opt = 1e-6);

namespace detail {

// Softmin smoothing of min(S_1, S_2) with parameter mu; writes the gradient
// with respect to alpha when `gradient` is non-null.
double softmin_objective(const HeadingConfig& cfg, double mu, std::vector<std::array<double, 2>>* gradient);

// Augmented Lagrangian (to be minimized) of: maximize eta subject to
// S_k(alpha) - eta >= 0. Gradients are with respect to alpha and eta.
double augmented_lagrangian(const HeadingConfig& cfg, double eta, const std::array<double, 2>& multipliers,
                            double penalty, std::vector<std::array<double, 2>>* alpha_gradient,
                            double* eta_gradient);

// Euclidean projection of (u, v) onto {u >= 0, v >= 0, u + v <= cap}.
std::array<double, 2> project_triangle(double u, double v, double cap);

}  // namespace detail

}  // namespace stealth
