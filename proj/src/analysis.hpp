#pragma once

#include <vector>

#include "model.hpp"

namespace pwiscore {

// Euclidean distance between two equally-dimensioned value functions, taken
// over all marginal coordinates.
double euclidean_distance(const ValueFunction& lhs, const ValueFunction& rhs);

struct DispersedSelection {
  std::vector<int> indices;           // into the candidate list, in pick order
  std::vector<std::string> labels;
  std::vector<std::vector<double>> distances;  // over all candidates
};

// Greedy max-min subset selection: seed with the most distant pair, then
// repeatedly add the candidate maximizing its minimum distance to the picks.
// Ties break on the lowest candidate index.
DispersedSelection select_dispersed(const std::vector<ValueFunction>& candidates, int count);

// Breakpoint/value pairs per criterion, ascending in x; suitable for
// piecewise-linear rendering.
std::vector<std::vector<std::pair<double, double>>> marginal_plot_data(
    const ValueFunction& function, const std::vector<CriterionScale>& scales);

}  // namespace pwiscore
