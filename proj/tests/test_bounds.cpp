#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "stealth/bounds.hpp"
#include "stealth/errors.hpp"

using namespace stealth;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kGammas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};

}  // namespace

TEST(Degenerate, ConfigMatchesClosedForm) {
  for (std::size_t m = 2; m <= 16; ++m)
    for (double gamma : kGammas) {
      const HeadingConfig cfg = degenerate_config(m, gamma);
      ASSERT_EQ(cfg.size(), m);
      EXPECT_LE(cfg.constraint_violation(), 1e-12);
      const double lb = degenerate_lower_bound(m, gamma);
      EXPECT_LE(oracle::rel_err(oracle::heading_pair_sum(cfg.alpha, 0), lb), 1e-9) << m << " " << gamma;
      EXPECT_LE(oracle::rel_err(oracle::heading_pair_sum(cfg.alpha, 1), lb), 1e-9) << m << " " << gamma;
    }
}

TEST(Degenerate, Examples) {
  EXPECT_NEAR(degenerate_lower_bound(2, 0.6), 0.36, 1e-12);
  EXPECT_NEAR(degenerate_lower_bound(4, 0.5), 1.75, 1e-12);
  EXPECT_NEAR(degenerate_lower_bound(3, 0.6), 1.136, 5e-4);
  const double g2 = 0.7 * 0.7;
  EXPECT_NEAR(degenerate_lower_bound(4, 0.7), 4 * g2 * (2 - g2), 1e-12);
}

TEST(Degenerate, RowsAreTight) {
  const HeadingConfig cfg = degenerate_config(7, 0.4);
  for (const auto& row : cfg.alpha) EXPECT_NEAR(std::abs(row[0] + row[1]), std::asin(0.4), 1e-15);
}

TEST(Uniform, ConfigMatchesClosedFormAndSum) {
  for (std::size_t m = 2; m <= 16; ++m)
    for (double gamma : kGammas) {
      const HeadingConfig cfg = uniform_config(m, gamma);
      EXPECT_LE(cfg.constraint_violation(), 1e-12);
      const double lb = uniform_lower_bound(m, gamma);
      EXPECT_LE(oracle::rel_err(oracle::heading_pair_sum(cfg.alpha, 0), lb), 1e-9) << m << " " << gamma;
      EXPECT_LE(oracle::rel_err(oracle::heading_pair_sum(cfg.alpha, 1), lb), 1e-9) << m << " " << gamma;
      const double delta = 2 * std::asin(gamma) / static_cast<double>(m);
      double sum = 0.0;
      for (std::size_t k = 1; k < m; ++k) sum += static_cast<double>(m - k) * oracle::sin2(k * delta);
      EXPECT_LE(oracle::rel_err(uniform_pair_sum(m, delta), sum), 1e-9);
    }
}

TEST(Uniform, Examples) {
  EXPECT_NEAR(uniform_lower_bound(2, 0.6), 0.36, 1e-12);
  const double delta = 2 * std::asin(0.6) / 3;
  EXPECT_NEAR(uniform_lower_bound(3, 0.6), 2 * oracle::sin2(delta) + oracle::sin2(2 * delta), 1e-12);
  EXPECT_NEAR(uniform_lower_bound(3, 0.6), 0.918, 5e-4);
}

TEST(Uniform, SmallGammaStaysAccurate) {
  for (std::size_t m : {2u, 5u, 40u}) {
    const double gamma = 1e-7;
    const double delta = 2 * std::asin(gamma) / static_cast<double>(m);
    double sum = 0.0;
    for (std::size_t k = 1; k < m; ++k) sum += static_cast<double>(m - k) * std::pow(std::sin(k * delta), 2);
    EXPECT_LE(oracle::rel_err(uniform_lower_bound(m, gamma), sum), 1e-6) << m;
  }
}

TEST(Uniform, Asymptote) {
  const double gamma = 0.6, a = std::asin(gamma);
  const double m = 1e4;
  const double limit = 0.25 - std::pow(std::sin(2 * a), 2) / (16 * a * a);
  EXPECT_NEAR(uniform_lower_bound(10000, gamma) / (m * m), limit, 1e-4);
  EXPECT_NEAR(asymptotic_bounds(gamma).lb_uniform, limit, 1e-12);
}

TEST(Constraint, Examples) {
  EXPECT_NEAR(constraint_upper_bound(2, 0.6), 0.9216, 1e-12);
  EXPECT_NEAR(constraint_upper_bound(2, 1.0), 1.0, 1e-12);
}

TEST(Constraint, SplitMatchesPairCount) {
  for (std::size_t m = 2; m <= 12; ++m)
    for (double gamma : kGammas)
      for (std::size_t p = 0; p <= m; ++p)
        EXPECT_NEAR(constraint_bound_for_split(m, p, gamma), oracle::split_bound_by_pairs(m, p, gamma), 1e-12);
}

TEST(Constraint, ClosedFormIsIntegerMaxForEvenM) {
  for (std::size_t m = 2; m <= 20; m += 2)
    for (double gamma : kGammas)
      EXPECT_LE(oracle::rel_err(constraint_upper_bound(m, gamma), constraint_bound_integer_max(m, gamma)), 1e-12);
}

TEST(Constraint, ClosedFormOvershootsForOddM) {
  // The balanced split is fractional for odd m; the excess is (c - gamma^2) / 4.
  for (std::size_t m = 3; m <= 19; m += 2)
    for (double gamma : kGammas) {
      const double c = gamma <= 1 / std::sqrt(2.0) ? 4 * gamma * gamma * (1 - gamma * gamma) : 1.0;
      EXPECT_NEAR(constraint_upper_bound(m, gamma) - constraint_bound_integer_max(m, gamma),
                  (c - gamma * gamma) / 4, 1e-12);
    }
}

TEST(Envelope, BranchValues) {
  EXPECT_EQ(g_envelope(0.0), 0.0);
  EXPECT_EQ(g_envelope(kPi / 2), 1.0);
  EXPECT_EQ(g_envelope(kPi), 1.0);
  EXPECT_NEAR(kEnvelopeSlope * kEnvelopeBreak, oracle::sin2(kEnvelopeBreak), 1e-4);
  EXPECT_THROW(g_envelope(-1e-3), DomainError);
  EXPECT_THROW(g_envelope(kPi + 1e-3), DomainError);
}

TEST(Envelope, MajorantMonotoneConcave) {
  const auto grid = oracle::linspace(0.0, kPi, 2000);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double g = g_envelope(grid[i]);
    EXPECT_GE(g - oracle::sin2(grid[i]), -1e-6);
    if (i > 0) EXPECT_GE(g, g_envelope(grid[i - 1]) - 1e-15);
    if (i > 0 && i + 1 < grid.size()) {
      const double mid = 0.5 * (g_envelope(grid[i - 1]) + g_envelope(grid[i + 1]));
      // Rounded constants leave a kink of order 1e-7 at the break.
      EXPECT_GE(g, mid - 1e-6) << grid[i];
    }
  }
}

TEST(Jensen, Examples) {
  const double a = std::asin(0.6);
  EXPECT_NEAR(jensen_upper_bound(2, 0.6), kEnvelopeSlope * 1.5 * a, 1e-12);
  EXPECT_NEAR(jensen_upper_bound(2, 0.6), 0.6994, 5e-4);
  EXPECT_NEAR(jensen_upper_bound(3, 0.6), 3 * kEnvelopeSlope * a, 1e-12);
  EXPECT_NEAR(jensen_upper_bound(3, 0.6), 1.399, 5e-4);
}

TEST(BestBounds, BracketForAllSmallM) {
  for (std::size_t m = 2; m <= 20; ++m)
    for (double gamma : oracle::linspace(0.05, 1.0, 20)) {
      const BoundsReport r = best_bounds(m, gamma);
      EXPECT_LE(r.best_lb, r.best_ub + 1e-12) << m << " " << gamma;
      EXPECT_EQ(r.best_lb, std::max(r.lb_degenerate, r.lb_uniform));
      EXPECT_EQ(r.best_ub, std::min(r.ub_constraint, r.ub_jensen));
      EXPECT_GE(r.ub_jensen, r.lb_degenerate - 1e-12);
      EXPECT_GE(r.ub_jensen, r.lb_uniform - 1e-12);
    }
}

TEST(BestBounds, ThreeSensorExample) {
  const BoundsReport r = best_bounds(3, 0.6);
  EXPECT_NEAR(r.best_lb, 1.136, 5e-4);
  EXPECT_EQ(r.best_lb, r.lb_degenerate);
  EXPECT_NEAR(r.best_ub, 1.399, 5e-4);
  EXPECT_EQ(r.best_ub, r.ub_jensen);
}

TEST(BestBounds, TwoSensorsGiveGammaSquared) {
  for (double gamma : kGammas) EXPECT_NEAR(best_bounds(2, gamma).best_lb, gamma * gamma, 1e-12);
}

TEST(BestBounds, LowerBoundsGrowWithM) {
  for (double gamma : kGammas) {
    double prev = 0.0;
    for (std::size_t m = 2; m <= 30; ++m) {
      const double lb = best_bounds(m, gamma).best_lb;
      EXPECT_GE(lb, prev);
      prev = lb;
    }
  }
}

TEST(BestBounds, VanishAsGammaShrinks) {
  const BoundsReport r = best_bounds(6, 1e-6);
  EXPECT_LT(r.lb_degenerate, 1e-9);
  EXPECT_LT(r.lb_uniform, 1e-9);
  EXPECT_LT(r.ub_constraint, 1e-9);
  EXPECT_LT(r.ub_jensen, 1e-4);
}

TEST(BestBounds, NormalizedDividesByMSquared) {
  const BoundsReport r = best_bounds(5, 0.7);
  const BoundsReport n = r.normalized();
  EXPECT_DOUBLE_EQ(n.best_lb, r.best_lb / 25);
  EXPECT_DOUBLE_EQ(n.ub_jensen, r.ub_jensen / 25);
  EXPECT_EQ(n.m, 5u);
}

TEST(BestBounds, RejectsInvalid) {
  EXPECT_THROW(best_bounds(1, 0.5), InvalidParameters);
  EXPECT_THROW(best_bounds(3, 0.0), InvalidParameters);
  EXPECT_THROW(best_bounds(3, 1.5), InvalidParameters);
  EXPECT_THROW(degenerate_config(1, 0.5), InvalidParameters);
}

TEST(Sweep, GridAndOrder) {
  const auto g = gamma_grid(0.1, 0.5, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 0.1);
  EXPECT_DOUBLE_EQ(g.back(), 0.5);
  EXPECT_EQ(gamma_grid(0.1, 0.5, 1), std::vector<double>{0.5});
  EXPECT_THROW(gamma_grid(0.0, 0.5, 3), InvalidParameters);
  const std::vector<std::size_t> ms{2, 3};
  const auto rows = bounds_sweep(ms, g);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[4].m, 2u);
  EXPECT_EQ(rows[5].m, 3u);
  EXPECT_DOUBLE_EQ(rows[5].gamma, 0.1);
}
