#include "stealth/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "stealth/bounds.hpp"
#include "stealth/errors.hpp"
#include "stealth/parallel.hpp"

namespace stealth {

namespace {

using Rows = std::vector<std::array<double, 2>>;

constexpr std::array<double, 4> kSmoothingSchedule{1e-1, 1e-2, 1e-3, 1e-4};
constexpr std::size_t kStallWindow = 25;
constexpr double kStallTolerance = 1e-10;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-14;
constexpr double kMaxMove = 0.25;  // per iteration, as a fraction of asin(gamma)

double square(double v) { return v * v; }

// S_k for both targets and, optionally, dS_k / dalpha_ik.
std::array<double, 2> sums_and_gradients(const Rows& alpha, Rows* gradient) {
  const std::size_t m = alpha.size();
  std::array<double, 2> sums{0.0, 0.0};
  if (gradient) gradient->assign(m, {0.0, 0.0});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        const double diff = alpha[i][k] - alpha[j][k];
        sums[k] += square(std::sin(diff));
        if (gradient) {
          const double g = std::sin(2.0 * diff);
          (*gradient)[i][k] += g;
          (*gradient)[j][k] -= g;
        }
      }
    }
  }
  return sums;
}

// Rows with an orthant sign per row; projection keeps every row inside
// {s * alpha_1 >= 0, s * alpha_2 >= 0, s * (alpha_1 + alpha_2) <= a}.
struct Orthants {
  std::vector<double> sign;
  double cap = 0.0;

  void project(Rows& alpha) const {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const auto uv = detail::project_triangle(sign[i] * alpha[i][0], sign[i] * alpha[i][1], cap);
      alpha[i] = {sign[i] * uv[0], sign[i] * uv[1]};
    }
  }
};

Orthants orthants_for(const HeadingConfig& cfg) {
  Orthants o;
  o.cap = cfg.max_heading();
  for (const auto& row : cfg.alpha) {
    const double sum = row[0] + row[1];
    o.sign.push_back(sum < 0.0 ? -1.0 : 1.0);
  }
  return o;
}

double inner_product(const Rows& g, const Rows& a, const Rows& b) {
  double ip = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = 0; k < 2; ++k) ip += g[i][k] * (a[i][k] - b[i][k]);
  return ip;
}

// Step length that moves no heading by more than `reach`.
double capped_step(const Rows& g, double reach, double proposal) {
  double largest = 0.0;
  for (const auto& row : g) largest = std::max({largest, std::abs(row[0]), std::abs(row[1])});
  return largest > 0.0 ? std::min(proposal, reach / largest) : proposal;
}

double min_sum(const Rows& alpha) {
  const auto s = sums_and_gradients(alpha, nullptr);
  return std::min(s[0], s[1]);
}

// Bookkeeping shared by both methods: iteration budget, incumbent, trace.
struct Tracker {
  const SolveOptions& opts;
  StartReport report;
  std::size_t budget;

  bool exhausted() const { return report.iterations >= budget; }

  void record(const Rows& alpha, double gamma) {
    ++report.iterations;
    const double eta2 = min_sum(alpha);
    if (opts.trace) report.trajectory.push_back(eta2);
    if (eta2 > report.eta2) {
      report.eta2 = eta2;
      report.incumbent.alpha = alpha;
      report.incumbent.gamma = gamma;
    }
  }
};

struct StallDetector {
  std::vector<double> history;

  bool stalled(double value) {
    history.push_back(value);
    if (history.size() <= kStallWindow) return false;
    const double old = history[history.size() - 1 - kStallWindow];
    return std::abs(value - old) <= kStallTolerance * std::max(1.0, std::abs(value));
  }
};

void run_penalty_gradient(Rows& alpha, const Orthants& orthants, double gamma, Tracker& tracker) {
  const std::size_t stage_budget = std::max<std::size_t>(1, tracker.budget / kSmoothingSchedule.size());
  double step = 1.0;
  HeadingConfig cfg{alpha, gamma};
  for (const double level : kSmoothingSchedule) {
    const double mu = level * gamma * gamma;
    cfg.alpha = alpha;
    Rows grad;
    double value = detail::softmin_objective(cfg, mu, &grad);
    StallDetector stall;
    for (std::size_t it = 0; it < stage_budget && !tracker.exhausted(); ++it) {
      bool accepted = false;
      double t = capped_step(grad, kMaxMove * orthants.cap, 2.0 * step);
      Rows trial;
      double trial_value = value;
      for (; t > kMinStep; t *= 0.5) {
        trial = alpha;
        for (std::size_t i = 0; i < trial.size(); ++i)
          for (std::size_t k = 0; k < 2; ++k) trial[i][k] += t * grad[i][k];
        orthants.project(trial);
        const double ip = inner_product(grad, trial, alpha);
        if (!(ip > 0.0)) break;  // projected gradient vanishes
        cfg.alpha = trial;
        trial_value = detail::softmin_objective(cfg, mu, nullptr);
        if (trial_value >= value + kArmijo * ip) {
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      alpha = std::move(trial);
      step = t;
      cfg.alpha = alpha;
      value = detail::softmin_objective(cfg, mu, &grad);
      tracker.record(alpha, gamma);
      if (stall.stalled(value)) break;
    }
  }
}

void run_augmented_lagrangian(Rows& alpha, const Orthants& orthants, double gamma, Tracker& tracker) {
  constexpr std::size_t kOuter = 40;
  const std::size_t inner_budget = std::max<std::size_t>(1, tracker.budget / kOuter);
  double eta = 0.0;
  std::array<double, 2> multipliers{0.0, 0.0};
  double penalty = 10.0;
  double previous_violation = std::numeric_limits<double>::infinity();
  HeadingConfig cfg{alpha, gamma};

  for (std::size_t outer = 0; outer < kOuter && !tracker.exhausted(); ++outer) {
    double step = 1.0 / penalty;
    cfg.alpha = alpha;
    Rows grad;
    double eta_grad = 0.0;
    double value = detail::augmented_lagrangian(cfg, eta, multipliers, penalty, &grad, &eta_grad);
    StallDetector stall;
    for (std::size_t it = 0; it < inner_budget && !tracker.exhausted(); ++it) {
      bool accepted = false;
      double t = std::min(2.0 * step, 10.0);
      Rows trial;
      double trial_eta = eta;
      for (; t > kMinStep; t *= 0.5) {
        trial = alpha;
        for (std::size_t i = 0; i < trial.size(); ++i)
          for (std::size_t k = 0; k < 2; ++k) trial[i][k] -= t * grad[i][k];
        orthants.project(trial);
        trial_eta = eta - t * eta_grad;
        const double decrease = inner_product(grad, alpha, trial) + eta_grad * (eta - trial_eta);
        if (!(decrease > 0.0)) break;
        cfg.alpha = trial;
        const double trial_value =
            detail::augmented_lagrangian(cfg, trial_eta, multipliers, penalty, nullptr, nullptr);
        if (trial_value <= value - kArmijo * decrease) {
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      alpha = std::move(trial);
      eta = trial_eta;
      step = t;
      cfg.alpha = alpha;
      value = detail::augmented_lagrangian(cfg, eta, multipliers, penalty, &grad, &eta_grad);
      tracker.record(alpha, gamma);
      if (stall.stalled(value)) break;
    }

    const auto sums = sums_and_gradients(alpha, nullptr);
    double violation = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      const double c = sums[k] - eta;
      multipliers[k] = std::max(0.0, multipliers[k] - penalty * c);
      violation = std::max(violation, -c);
    }
    if (violation <= tracker.opts.tol_feas && outer > 0) break;
    if (violation > 0.25 * previous_violation) penalty = std::min(penalty * 10.0, 1e6);
    previous_violation = violation;
  }
}

}  // namespace

namespace detail {

std::array<double, 2> project_triangle(double u, double v, double cap) {
  const double pu = std::max(u, 0.0);
  const double pv = std::max(v, 0.0);
  if (pu + pv <= cap) return {pu, pv};
  // Shift both coordinates down by tau until the sum constraint is active.
  const double tau = 0.5 * (u + v - cap);
  if (u - tau >= 0.0 && v - tau >= 0.0) return {u - tau, v - tau};
  return u > v ? std::array<double, 2>{cap, 0.0} : std::array<double, 2>{0.0, cap};
}

double softmin_objective(const HeadingConfig& cfg, double mu, Rows* gradient) {
  Rows partials;
  const auto sums = sums_and_gradients(cfg.alpha, gradient ? &partials : nullptr);
  const double lo = std::min(sums[0], sums[1]);
  const std::array<double, 2> w{std::exp(-(sums[0] - lo) / mu), std::exp(-(sums[1] - lo) / mu)};
  const double total = w[0] + w[1];
  if (gradient) {
    gradient->assign(cfg.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < cfg.size(); ++i)
      for (std::size_t k = 0; k < 2; ++k) (*gradient)[i][k] = w[k] / total * partials[i][k];
  }
  return lo - mu * std::log(total);
}

double augmented_lagrangian(const HeadingConfig& cfg, double eta, const std::array<double, 2>& multipliers,
                            double penalty, Rows* alpha_gradient, double* eta_gradient) {
  Rows partials;
  const bool want_gradient = alpha_gradient != nullptr || eta_gradient != nullptr;
  const auto sums = sums_and_gradients(cfg.alpha, want_gradient ? &partials : nullptr);
  double value = -eta;
  std::array<double, 2> slope{0.0, 0.0};  // d psi / d c_k
  for (std::size_t k = 0; k < 2; ++k) {
    const double c = sums[k] - eta;
    if (c - multipliers[k] / penalty < 0.0) {
      value += -multipliers[k] * c + 0.5 * penalty * c * c;
      slope[k] = -multipliers[k] + penalty * c;
    } else {
      value += -0.5 * multipliers[k] * multipliers[k] / penalty;
    }
  }
  if (alpha_gradient) {
    alpha_gradient->assign(cfg.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < cfg.size(); ++i)
      for (std::size_t k = 0; k < 2; ++k) (*alpha_gradient)[i][k] = slope[k] * partials[i][k];
  }
  if (eta_gradient) *eta_gradient = -1.0 - slope[0] - slope[1];
  return value;
}

}  // namespace detail

double evaluate_eta2(const HeadingConfig& cfg) { return min_sum(cfg.alpha); }

std::string to_string(SolverMethod method) {
  return method == SolverMethod::kPenaltyGradient ? "penalty-gradient" : "augmented-lagrangian";
}

SolverMethod parse_solver_method(const std::string& name) {
  if (name == "penalty-gradient") return SolverMethod::kPenaltyGradient;
  if (name == "augmented-lagrangian") return SolverMethod::kAugmentedLagrangian;
  throw InvalidParameters("unknown solver method '" + name + "'");
}

std::string to_string(StartKind kind) {
  switch (kind) {
    case StartKind::kWarmDegenerate:
      return "warm-degenerate";
    case StartKind::kWarmUniform:
      return "warm-uniform";
    default:
      return "random";
  }
}

void SolveOptions::validate() const {
  if (starts < 1 && !warm_starts) throw InvalidParameters("need at least one start");
  if (max_iters < 1) throw InvalidParameters("max_iters must be positive");
  if (!(tol_feas > 0.0) || !(tol_opt > 0.0)) throw InvalidParameters("tolerances must be positive");
}

StartReport local_solve(const HeadingConfig& init, const SolveOptions& opts) {
  if (!(init.gamma > 0.0 && init.gamma <= 1.0)) throw InvalidParameters("gamma must lie in (0, 1]");
  const Orthants orthants = orthants_for(init);
  Rows alpha = init.alpha;
  orthants.project(alpha);

  Tracker tracker{opts, {}, opts.max_iters};
  tracker.report.eta2 = min_sum(alpha);
  tracker.report.incumbent = {alpha, init.gamma};
  if (opts.trace) tracker.report.trajectory.push_back(tracker.report.eta2);

  if (opts.method == SolverMethod::kPenaltyGradient)
    run_penalty_gradient(alpha, orthants, init.gamma, tracker);
  else
    run_augmented_lagrangian(alpha, orthants, init.gamma, tracker);

  tracker.report.feasibility_residual = std::max(0.0, tracker.report.incumbent.constraint_violation());
  return tracker.report;
}

SolveResult solve(std::size_t m, double gamma, const SolveOptions& opts) {
  opts.validate();
  const BoundsReport bounds = best_bounds(m, gamma);  // validates m and gamma
  const double a = std::asin(gamma);

  std::vector<HeadingConfig> inits;
  std::vector<StartKind> kinds;
  if (opts.warm_starts) {
    inits.push_back(degenerate_config(m, gamma));
    kinds.push_back(StartKind::kWarmDegenerate);
    inits.push_back(uniform_config(m, gamma));
    kinds.push_back(StartKind::kWarmUniform);
  }
  for (std::size_t s = 0; s < opts.starts; ++s) {
    // One RNG stream per start so serial and parallel runs agree.
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> heading(-a, a);
    HeadingConfig cfg;
    cfg.gamma = gamma;
    for (std::size_t i = 0; i < m; ++i) {
      const double first = heading(rng);
      const double second = heading(rng);
      cfg.alpha.push_back({first, second});
    }
    inits.push_back(std::move(cfg));
    kinds.push_back(StartKind::kRandom);
  }

  std::vector<StartReport> reports(inits.size());
  parallel_for(inits.size(), inits.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t s = begin; s < end; ++s) {
      reports[s] = local_solve(inits[s], opts);
      reports[s].kind = kinds[s];
      reports[s].index = kinds[s] == StartKind::kRandom ? s - (opts.warm_starts ? 2 : 0) : 0;
    }
  });

  SolveResult result;
  result.m = m;
  result.gamma = gamma;
  result.best_lb = bounds.best_lb;
  result.best_ub = bounds.best_ub;
  bool found = false;
  for (const StartReport& r : reports) {
    if (r.feasibility_residual > opts.tol_feas) continue;
    if (!found || r.eta2 > result.eta2) {
      result.best_alpha = r.incumbent;
      result.eta2 = evaluate_eta2(r.incumbent);
      found = true;
    }
  }
  if (!found) throw NoFeasiblePoint("no start produced a feasible configuration");
  result.per_start = std::move(reports);
  return result;
}

Certificate certify(const SolveResult& result, double tol_opt) {
  Certificate c;
  c.eta2 = result.eta2;
  c.best_lb = result.best_lb;
  c.best_ub = result.best_ub;
  c.gap = result.best_ub - result.eta2;
  c.excess = result.eta2 - result.best_lb;
  if (result.eta2 > result.best_ub + tol_opt)
    throw BoundViolation("eta^2 = " + std::to_string(result.eta2) + " exceeds the upper bound " +
                         std::to_string(result.best_ub));
  return c;
}

}  // namespace stealth
