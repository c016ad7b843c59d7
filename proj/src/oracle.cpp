#include "stealth/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "stealth/errors.hpp"
#include "stealth/parallel.hpp"

namespace stealth {

namespace {

constexpr std::size_t kMaxSensors = 4;

struct GridPoint {
  int first;   // alpha_1 in units of the grid step, first quadrant
  int second;  // alpha_2
};

std::vector<GridPoint> triangle_points(int steps) {
  std::vector<GridPoint> pts;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; i + j <= steps; ++j)
      if (i != 0 || j != 0) pts.push_back({i, j});
  return pts;
}

double multichoose(double n, std::size_t r) {
  double v = 1.0;
  for (std::size_t i = 0; i < r; ++i) v = v * (n + static_cast<double>(i)) / static_cast<double>(i + 1);
  return v;
}

struct Pattern {
  std::array<int, kMaxSensors> sign{};
  // Row r may only use grid indices >= the previous row's index when both
  // rows are interchangeable (same side, symmetric mode).
  std::array<bool, kMaxSensors> tied{};
};

std::vector<Pattern> patterns_for(std::size_t m, SignPatterns mode) {
  std::vector<Pattern> out;
  if (mode == SignPatterns::kSymmetric) {
    // Mirror symmetry: k negative rows is equivalent to m - k.
    for (std::size_t k = 0; k <= m / 2; ++k) {
      Pattern p;
      for (std::size_t r = 0; r < m; ++r) {
        p.sign[r] = r < k ? -1 : 1;
        p.tied[r] = r > 0 && p.sign[r] == p.sign[r - 1];
      }
      out.push_back(p);
    }
  } else {
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Pattern p;
      for (std::size_t r = 0; r < m; ++r) p.sign[r] = (mask >> r) & 1U ? -1 : 1;
      out.push_back(p);
    }
  }
  return out;
}

struct Cell {
  double value = -1.0;
  std::size_t pattern = 0;
  std::array<std::size_t, kMaxSensors> index{};
};

// Higher value first; ties keep enumeration order.
bool better(const Cell& x, const Cell& y) {
  if (x.value != y.value) return x.value > y.value;
  if (x.pattern != y.pattern) return x.pattern < y.pattern;
  return x.index < y.index;
}

struct Candidate {
  double value = -1.0;
  std::array<std::size_t, kMaxSensors> index{};
  std::uint64_t evaluations = 0;
  std::vector<Cell> top;  // heap, worst on top
};

class Enumerator {
 public:
  Enumerator(std::size_t m, const Pattern& pattern, std::size_t pattern_id, const std::vector<GridPoint>& points,
             const std::vector<double>& sin2, std::size_t top_k)
      : m_(m), pattern_(pattern), pattern_id_(pattern_id), points_(points), sin2_(sin2), top_k_(top_k) {}

  Candidate run(std::size_t first_begin, std::size_t first_end) {
    for (std::size_t p = first_begin; p < first_end; ++p) {
      place(0, p);
      descend(1, 0.0, 0.0);
    }
    return best_;
  }

 private:
  void place(std::size_t row, std::size_t p) {
    index_[row] = p;
    a1_[row] = pattern_.sign[row] * points_[p].first;
    a2_[row] = pattern_.sign[row] * points_[p].second;
  }

  void descend(std::size_t row, double s1, double s2) {
    if (row == m_) {
      ++best_.evaluations;
      const double value = s1 < s2 ? s1 : s2;
      if (value > best_.value) {
        best_.value = value;
        best_.index = index_;
      }
      if (top_k_ > 0) keep(value);
      return;
    }
    const std::size_t start = pattern_.tied[row] ? index_[row - 1] : 0;
    for (std::size_t p = start; p < points_.size(); ++p) {
      place(row, p);
      double n1 = s1, n2 = s2;
      for (std::size_t r = 0; r < row; ++r) {
        n1 += sin2_[static_cast<std::size_t>(std::abs(a1_[row] - a1_[r]))];
        n2 += sin2_[static_cast<std::size_t>(std::abs(a2_[row] - a2_[r]))];
      }
      descend(row + 1, n1, n2);
    }
  }

  void keep(double value) {
    auto& heap = best_.top;
    if (heap.size() == top_k_ && !(value > heap.front().value)) return;
    heap.push_back({value, pattern_id_, index_});
    std::push_heap(heap.begin(), heap.end(), better);
    if (heap.size() > top_k_) {
      std::pop_heap(heap.begin(), heap.end(), better);
      heap.pop_back();
    }
  }

  std::size_t m_;
  const Pattern& pattern_;
  std::size_t pattern_id_;
  const std::vector<GridPoint>& points_;
  const std::vector<double>& sin2_;
  std::size_t top_k_;
  std::array<std::size_t, kMaxSensors> index_{};
  std::array<int, kMaxSensors> a1_{};
  std::array<int, kMaxSensors> a2_{};
  Candidate best_;
};

void check_arguments(std::size_t m, double gamma, std::size_t resolution) {
  if (m < 2 || m > kMaxSensors) throw InvalidParameters("heading grid search supports 2 <= m <= 4");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidParameters("gamma must lie in (0, 1]");
  if (resolution < 11) throw InvalidParameters("resolution must be at least 11");
}

}  // namespace

std::uint64_t projected_evaluations(std::size_t m, std::size_t resolution, SignPatterns patterns) {
  check_arguments(m, 1.0, resolution);
  const double per_row = static_cast<double>(triangle_points(static_cast<int>(resolution - 1)).size());
  double total = 0.0;
  if (patterns == SignPatterns::kSymmetric) {
    for (std::size_t k = 0; k <= m / 2; ++k) total += multichoose(per_row, k) * multichoose(per_row, m - k);
  } else {
    total = std::pow(2.0 * per_row, static_cast<double>(m));
  }
  if (total >= 1.8e19) return UINT64_MAX;
  return static_cast<std::uint64_t>(std::llround(total));
}

HeadingGridResult grid_search_headings(std::size_t m, double gamma, std::size_t resolution, SignPatterns patterns,
                                       std::uint64_t max_evaluations, std::size_t top_k) {
  check_arguments(m, gamma, resolution);
  const std::uint64_t projected = projected_evaluations(m, resolution, patterns);
  if (projected > max_evaluations)
    throw ResourceLimit("grid search would evaluate " + std::to_string(projected) + " configurations (cap " +
                        std::to_string(max_evaluations) + ")");

  const int steps = static_cast<int>(resolution - 1);
  const double a = std::asin(gamma);
  const double h = a / steps;
  const std::vector<GridPoint> points = triangle_points(steps);
  // Heading differences are integer multiples of the step, at most 2 * steps.
  std::vector<double> sin2(static_cast<std::size_t>(2 * steps + 1));
  for (std::size_t i = 0; i < sin2.size(); ++i) {
    const double s = std::sin(static_cast<double>(i) * h);
    sin2[i] = s * s;
  }

  HeadingGridResult result;
  const std::vector<Pattern> pattern_list = patterns_for(m, patterns);
  result.patterns = pattern_list.size();
  Candidate best;
  std::size_t best_pattern = 0;
  std::vector<Cell> top;
  const std::size_t chunks = std::min<std::size_t>(points.size(), 64);
  for (std::size_t id = 0; id < pattern_list.size(); ++id) {
    std::vector<Candidate> partial(chunks);
    parallel_for(points.size(), chunks, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
      Enumerator e(m, pattern_list[id], id, points, sin2, top_k);
      partial[chunk] = e.run(begin, end);
    });
    for (const Candidate& c : partial) {
      best.evaluations += c.evaluations;
      if (c.value > best.value) {
        best.value = c.value;
        best.index = c.index;
        best_pattern = id;
      }
      top.insert(top.end(), c.top.begin(), c.top.end());
    }
  }

  auto to_config = [&](std::size_t pattern, const std::array<std::size_t, kMaxSensors>& index) {
    HeadingConfig cfg;
    cfg.gamma = gamma;
    for (std::size_t r = 0; r < m; ++r) {
      const GridPoint& p = points[index[r]];
      const double s = pattern_list[pattern].sign[r];
      cfg.alpha.push_back({s * p.first * h, s * p.second * h});
    }
    return cfg;
  };

  result.eta2 = best.value;
  result.evaluations = best.evaluations;
  result.argmax = to_config(best_pattern, best.index);
  std::sort(top.begin(), top.end(), better);
  if (top.size() > top_k) top.resize(top_k);
  for (const Cell& c : top) result.top.push_back({c.value, to_config(c.pattern, c.index)});
  return result;
}

}  // namespace stealth
