#include "normalize.hpp"

#include <cmath>

namespace pwiscore {

StandardizeResult standardize(const PerformanceMatrix& matrix) {
  matrix.validate();
  const int n = matrix.alternative_count();
  const int m = matrix.criterion_count();
  if (n < 2)
    fail(ErrorCode::InvalidArgument,
         "standardization needs at least 2 alternatives, got " + std::to_string(n));

  StandardizeResult result;
  result.normalized.alternatives = matrix.alternatives;
  result.normalized.criteria = matrix.criteria;
  result.normalized.values.assign(n, std::vector<double>(m, 0.0));
  result.stats.reserve(m);

  for (int j = 0; j < m; ++j) {
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += matrix.values[i][j];
    mean /= n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = matrix.values[i][j] - mean;
      ss += d * d;
    }
    const double stddev = std::sqrt(ss / (n - 1));
    for (int i = 0; i < n; ++i) {
      result.normalized.values[i][j] =
          stddev > 0.0 ? 0.5 + (matrix.values[i][j] - mean) / (6.0 * stddev) : 0.5;
    }
    result.stats.push_back({matrix.criteria[j], mean, stddev});
  }
  return result;
}

}  // namespace pwiscore
