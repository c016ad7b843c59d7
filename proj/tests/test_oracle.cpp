#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "stealth/bounds.hpp"
#include "stealth/errors.hpp"
#include "stealth/oracle.hpp"

using namespace stealth;

TEST(GridSearch, TwoSensorsNearGammaSquared) {
  const HeadingGridResult r = grid_search_headings(2, 0.6, 101);
  EXPECT_NEAR(r.eta2, 0.36, 5e-3);
  EXPECT_LE(r.eta2, 0.36 + 1e-12);
  EXPECT_LE(r.argmax.constraint_violation(), 1e-12);
  EXPECT_NEAR(oracle::heading_objective(r.argmax.alpha), r.eta2, 1e-12);
}

TEST(GridSearch, ThreeSensorsInsideBracket) {
  const HeadingGridResult r = grid_search_headings(3, 0.6, 41);
  EXPECT_GE(r.eta2, 1.136 - 5e-2);
  EXPECT_LE(r.eta2, best_bounds(3, 0.6).best_ub);
}

TEST(GridSearch, NestedRefinementNeverWorsens) {
  for (double gamma : {0.3, 0.6, 0.9}) {
    const double coarse = grid_search_headings(2, gamma, 17).eta2;
    const double mid = grid_search_headings(2, gamma, 33).eta2;
    const double fine = grid_search_headings(2, gamma, 65).eta2;
    EXPECT_LE(coarse, mid);
    EXPECT_LE(mid, fine);
    EXPECT_LE(grid_search_headings(3, gamma, 17).eta2, grid_search_headings(3, gamma, 33).eta2);
  }
}

TEST(GridSearch, AllPatternsAgreeWithSymmetric) {
  for (std::size_t m : {2u, 3u}) {
    const HeadingGridResult sym = grid_search_headings(m, 0.7, 11, SignPatterns::kSymmetric);
    const HeadingGridResult all = grid_search_headings(m, 0.7, 11, SignPatterns::kAll);
    EXPECT_NEAR(sym.eta2, all.eta2, 1e-12) << m;
    EXPECT_LT(sym.evaluations, all.evaluations);
    EXPECT_EQ(all.evaluations, projected_evaluations(m, 11, SignPatterns::kAll));
    EXPECT_EQ(sym.evaluations, projected_evaluations(m, 11, SignPatterns::kSymmetric));
  }
}

TEST(GridSearch, TopCellsAreSorted) {
  const HeadingGridResult r = grid_search_headings(3, 0.5, 11, SignPatterns::kSymmetric, kDefaultEvaluationCap, 10);
  ASSERT_EQ(r.top.size(), 10u);
  EXPECT_EQ(r.top.front().first, r.eta2);
  EXPECT_EQ(r.top.front().second.alpha, r.argmax.alpha);
  for (std::size_t i = 1; i < r.top.size(); ++i) EXPECT_GE(r.top[i - 1].first, r.top[i].first);
  for (const auto& [value, cfg] : r.top) EXPECT_NEAR(oracle::heading_objective(cfg.alpha), value, 1e-12);
}

TEST(GridSearch, ResourceLimit) {
  EXPECT_THROW(grid_search_headings(4, 0.5, 65, SignPatterns::kSymmetric, 1000), ResourceLimit);
  EXPECT_GT(projected_evaluations(4, 65, SignPatterns::kSymmetric), 1000u);
}

TEST(GridSearch, RejectsInvalid) {
  EXPECT_THROW(grid_search_headings(1, 0.5, 11), InvalidParameters);
  EXPECT_THROW(grid_search_headings(5, 0.5, 11), InvalidParameters);
  EXPECT_THROW(grid_search_headings(3, 0.0, 11), InvalidParameters);
  EXPECT_THROW(grid_search_headings(3, 0.5, 10), InvalidParameters);
}
