#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "stealth/errors.hpp"
#include "stealth/geometry.hpp"

using namespace stealth;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(SubtendedAngle, RightAngleAtOrigin) {
  EXPECT_NEAR(subtended_angle({0, 0}, {1, 0}, {0, 1}), kPi / 2, 1e-15);
}

TEST(SubtendedAngle, StraightAngleAtMidpoint) { EXPECT_NEAR(subtended_angle({0, 0}, {-1, 0}, {1, 0}), kPi, 1e-15); }

TEST(SubtendedAngle, ApexOnEndpointIsDegenerate) {
  EXPECT_THROW(subtended_angle({1, 0}, {1, 0}, {0, 1}), DegenerateGeometry);
}

TEST(SubtendedAngle, MatchesLawOfCosines) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const Point p{u(rng), u(rng)}, a{u(rng), u(rng)}, b{u(rng), u(rng)};
    EXPECT_NEAR(subtended_angle(p, a, b), oracle::angle_acos(p, a, b), 1e-6);
  }
}

TEST(Scenario, ValidateRejectsSmallAndDegenerate) {
  EXPECT_THROW((Scenario{{{0, 0}}, {{1, 0}, {2, 0}}, 1.0}).validate(), InvalidParameters);
  EXPECT_THROW((Scenario{{{0, 0}, {1, 0}}, {{1, 1}}, 1.0}).validate(), InvalidParameters);
  EXPECT_THROW((Scenario{{{0, 0}, {1, 0}}, {{1, 1}, {2, 2}}, 0.0}).validate(), InvalidParameters);
  EXPECT_THROW((Scenario{{{0, 0}, {1, 0}}, {{1, 0}, {2, 2}}, 1.0}).validate(), DegenerateGeometry);
  EXPECT_NO_THROW((Scenario{{{0, 0}, {1, 0}}, {{1, 1}, {2, 2}}, 1.0}).validate());
}

TEST(AnglesFromScenario, SquareHasRightAngles) {
  const Scenario s{{{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}, 1.0};
  const ScenarioAngles a = angles_from_scenario(s);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(a.theta(0, 1, k), kPi / 2, 1e-15);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(a.beta(0, 1, i), kPi / 2, 1e-15);
}

TEST(AnglesFromScenario, PairTensorIsSymmetric) {
  PairTensor t(4, 3);
  t(2, 1, 0) = 5.0;
  EXPECT_EQ(t(1, 2, 0), 5.0);
  EXPECT_EQ(t.pairs(), 6u);
}

TEST(Headings, RoundTripThroughPositions) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    HeadingConfig cfg;
    cfg.gamma = unit(rng);
    const double a = cfg.max_heading();
    for (int i = 0; i < 5; ++i) {
      const double u = unit(rng), v = unit(rng) * (1 - u);
      const double s = trial % 2 == 0 ? 1.0 : -1.0;
      cfg.alpha.push_back({s * a * u, s * a * v});
    }
    const Scenario s = positions_from_headings(cfg, 2.0);
    const ScenarioAngles geo = angles_from_scenario(s);
    const HeadingAngles head = headings_to_pair_angles(cfg);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_NEAR(geo.beta(0, 1, i), head.beta[i], 1e-9);
      for (std::size_t j = i + 1; j < 5; ++j)
        for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(geo.theta(i, j, k), head.theta(i, j, k), 1e-9);
    }
  }
}

TEST(Headings, PositiveHeadingsLieBelowTheAxis) {
  const HeadingConfig cfg{{{0.2, 0.3}, {-0.2, -0.3}}, 0.6};
  const Scenario s = positions_from_headings(cfg, 1.0);
  EXPECT_LT(s.sensors[0].y, 0.0);
  EXPECT_GT(s.sensors[1].y, 0.0);
}

TEST(Headings, DegenerateRowsAreRejected) {
  EXPECT_THROW(positions_from_headings({{{0.2, -0.1}}, 0.6}, 1.0), DegenerateGeometry);
  // (a, 0) puts the sensor on t1: the ray from t2 meets the ray from t1 there.
  EXPECT_THROW(positions_from_headings({{{0.3, 0.0}}, 0.6}, 1.0), DegenerateGeometry);
  EXPECT_THROW(positions_from_headings({{{0.0, 0.0}}, 0.6}, 1.0), DegenerateGeometry);
}

TEST(Headings, NudgeKeepsRowSum) {
  const HeadingConfig cfg{{{0.4, 0.0}, {0.0, -0.4}, {0.1, 0.2}}, 0.6};
  const HeadingConfig out = nudge_degenerate_rows(cfg, 1e-4);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_NEAR(out.alpha[i][0] + out.alpha[i][1], cfg.alpha[i][0] + cfg.alpha[i][1], 1e-15);
  EXPECT_DOUBLE_EQ(out.alpha[0][1], 1e-4);
  EXPECT_DOUBLE_EQ(out.alpha[1][0], -1e-4);
  EXPECT_EQ(out.alpha[2], cfg.alpha[2]);
  EXPECT_NO_THROW(positions_from_headings(out, 1.0));
}

TEST(Headings, ConstraintViolation) {
  const double a = std::asin(0.5);
  EXPECT_EQ((HeadingConfig{{{a, 0.0}}, 0.5}).constraint_violation(), 0.0);
  EXPECT_NEAR((HeadingConfig{{{a, 0.1}}, 0.5}).constraint_violation(), 0.1, 1e-15);
  EXPECT_NEAR((HeadingConfig{{{0.1, -0.2}}, 0.5}).constraint_violation(), 0.02, 1e-15);
  EXPECT_THROW((HeadingConfig{{{a, 0.1}}, 0.5}).validate(), InvalidParameters);
}

TEST(RandomScenario, SeparatedAndReproducible) {
  const Scenario a = random_scenario(5, 6, 4);
  const Scenario b = random_scenario(5, 6, 4);
  ASSERT_EQ(a.sensors.size(), 6u);
  ASSERT_EQ(a.targets.size(), 4u);
  EXPECT_EQ(a.sensors, b.sensors);
  EXPECT_NO_THROW(a.validate());
}
