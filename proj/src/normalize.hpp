#pragma once

#include <vector>

#include "model.hpp"

namespace pwiscore {

struct ColumnStats {
  std::string criterion;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, divisor n-1
};

struct StandardizeResult {
  PerformanceMatrix normalized;
  std::vector<ColumnStats> stats;
};

// Column-wise standardization onto a common scale centered at 0.5:
//   g_norm = 0.5 + (g - mean) / (6 * stddev)
// A constant column maps to 0.5 everywhere. Output is not clamped; values
// outside [0,1] pass through. Requires at least two alternatives.
StandardizeResult standardize(const PerformanceMatrix& matrix);

}  // namespace pwiscore
