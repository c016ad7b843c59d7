#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "stealth/geometry.hpp"

namespace stealth {

enum class SignPatterns {
  kAll,        // every side assignment, every ordered tuple of rows
  kSymmetric,  // side assignments up to mirror, rows up to relabeling
};

struct HeadingGridResult {
  double eta2 = 0.0;
  HeadingConfig argmax;
  std::uint64_t evaluations = 0;
  std::size_t patterns = 0;
  // Best `top_k` cells, best first; empty unless requested.
  std::vector<std::pair<double, HeadingConfig>> top;
};

inline constexpr std::uint64_t kDefaultEvaluationCap = 2'000'000'000ULL;

// Number of configurations grid_search_headings would evaluate.
std::uint64_t projected_evaluations(std::size_t m, std::size_t resolution, SignPatterns patterns);

// Exhaustive search of the heading program for m <= 4 sensors. Each row is
// discretized on its side's triangle {|alpha_1 + alpha_2| <= asin(gamma),
// alpha_1 alpha_2 >= 0} with step asin(gamma) / (resolution - 1); the
// all-zero row is skipped. Choosing resolution = 2^k + 1 makes refinements
// nested. Ties keep the first configuration in enumeration order. Throws
// ResourceLimit when the projected evaluation count exceeds
// `max_evaluations`.
HeadingGridResult grid_search_headings(std::size_t m, double gamma, std::size_t resolution,
                                       SignPatterns patterns = SignPatterns::kSymmetric,
                                       std::uint64_t max_evaluations = kDefaultEvaluationCap,
                                       std::size_t top_k = 0);

}  // namespace stealth
