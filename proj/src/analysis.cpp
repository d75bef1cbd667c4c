#include "analysis.hpp"

#include <cmath>
#include <limits>

namespace pwiscore {

double euclidean_distance(const ValueFunction& lhs, const ValueFunction& rhs) {
  if (lhs.marginals.size() != rhs.marginals.size())
    fail(ErrorCode::InvalidArgument, "value functions have different criterion counts");
  double sum = 0.0;
  for (size_t j = 0; j < lhs.marginals.size(); ++j) {
    if (lhs.marginals[j].size() != rhs.marginals[j].size())
      fail(ErrorCode::InvalidArgument, "value functions have different breakpoint counts");
    for (size_t k = 0; k < lhs.marginals[j].size(); ++k) {
      const double d = lhs.marginals[j][k] - rhs.marginals[j][k];
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

DispersedSelection select_dispersed(const std::vector<ValueFunction>& candidates, int count) {
  const int n = static_cast<int>(candidates.size());
  if (count < 1 || count > n)
    fail(ErrorCode::InvalidArgument,
         "dispersion count must be between 1 and the candidate count");
  if (n >= 2 && count < 2)
    fail(ErrorCode::InvalidArgument,
         "dispersion count must be at least 2 when there are 2 or more candidates");

  DispersedSelection sel;
  sel.distances.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double d = euclidean_distance(candidates[static_cast<size_t>(a)],
                                          candidates[static_cast<size_t>(b)]);
      sel.distances[static_cast<size_t>(a)][static_cast<size_t>(b)] = d;
      sel.distances[static_cast<size_t>(b)][static_cast<size_t>(a)] = d;
    }

  std::vector<char> picked(static_cast<size_t>(n), 0);
  auto pick = [&](int i) {
    picked[static_cast<size_t>(i)] = 1;
    sel.indices.push_back(i);
    sel.labels.push_back(candidates[static_cast<size_t>(i)].label);
  };

  if (n == 1) {
    pick(0);
    return sel;
  }

  int seed_a = 0, seed_b = 1;
  double best = -1.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (sel.distances[static_cast<size_t>(a)][static_cast<size_t>(b)] > best) {
        best = sel.distances[static_cast<size_t>(a)][static_cast<size_t>(b)];
        seed_a = a;
        seed_b = b;
      }
  pick(seed_a);
  pick(seed_b);

  while (static_cast<int>(sel.indices.size()) < count) {
    int choice = -1;
    double best_min = -1.0;
    for (int k = 0; k < n; ++k) {
      if (picked[static_cast<size_t>(k)]) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (const int p : sel.indices)
        nearest = std::min(nearest, sel.distances[static_cast<size_t>(k)][static_cast<size_t>(p)]);
      if (nearest > best_min) {
        best_min = nearest;
        choice = k;
      }
    }
    pick(choice);
  }
  return sel;
}

std::vector<std::vector<std::pair<double, double>>> marginal_plot_data(
    const ValueFunction& function, const std::vector<CriterionScale>& scales) {
  if (function.marginals.size() != scales.size())
    fail(ErrorCode::InvalidArgument, "value function and scales have different criterion counts");
  std::vector<std::vector<std::pair<double, double>>> out;
  out.reserve(scales.size());
  for (size_t j = 0; j < scales.size(); ++j) {
    if (function.marginals[j].size() != scales[j].levels.size())
      fail(ErrorCode::InvalidArgument,
           "value function not dimensioned to scale of criterion '" + scales[j].criterion + "'");
    std::vector<std::pair<double, double>> points;
    points.reserve(scales[j].levels.size());
    for (size_t k = 0; k < scales[j].levels.size(); ++k)
      points.emplace_back(scales[j].levels[k], function.marginals[j][k]);
    out.push_back(std::move(points));
  }
  return out;
}

}  // namespace pwiscore
