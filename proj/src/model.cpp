#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace pwiscore {

int PerformanceMatrix::index_of(const std::string& alternative_id) const {
  for (int i = 0; i < alternative_count(); ++i) {
    if (alternatives[i].id == alternative_id) return i;
  }
  return -1;
}

void PerformanceMatrix::validate() const {
  if (alternatives.empty()) fail(ErrorCode::InvalidArgument, "matrix has no alternatives");
  if (criteria.empty()) fail(ErrorCode::InvalidArgument, "matrix has no criteria");
  if (values.size() != alternatives.size())
    fail(ErrorCode::InvalidArgument, "matrix row count does not match alternative count");
  std::set<std::string> ids;
  for (const auto& alt : alternatives) {
    if (alt.id.empty()) fail(ErrorCode::InvalidArgument, "empty alternative id");
    if (!ids.insert(alt.id).second)
      fail(ErrorCode::InvalidArgument, "duplicate alternative id '" + alt.id + "'");
  }
  std::set<std::string> crits(criteria.begin(), criteria.end());
  if (crits.size() != criteria.size())
    fail(ErrorCode::InvalidArgument, "duplicate criterion id");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != criteria.size())
      fail(ErrorCode::InvalidArgument,
           "row '" + alternatives[i].id + "' has wrong number of evaluations");
    for (double v : values[i]) {
      if (!std::isfinite(v))
        fail(ErrorCode::InvalidArgument,
             "non-finite evaluation in row '" + alternatives[i].id + "'");
    }
  }
}

int CriterionScale::index_of_level(double value) const {
  auto it = std::lower_bound(levels.begin(), levels.end(), value);
  if (it == levels.end() || *it != value)
    fail(ErrorCode::InvalidArgument,
         "evaluation " + std::to_string(value) + " is not a breakpoint of criterion '" +
             criterion + "'");
  return static_cast<int>(it - levels.begin());
}

int ValueFunction::coordinate_count() const {
  int n = 0;
  for (const auto& m : marginals) n += static_cast<int>(m.size());
  return n;
}

void ValueFunction::validate(double tol) const {
  double top_sum = 0.0;
  for (const auto& m : marginals) {
    if (m.empty()) fail(ErrorCode::InvalidArgument, "criterion with no breakpoints");
    if (std::abs(m.front()) > tol)
      fail(ErrorCode::InvalidArgument, "marginal value at worst breakpoint is not 0");
    for (size_t k = 0; k + 1 < m.size(); ++k) {
      if (m[k] > m[k + 1] + tol)
        fail(ErrorCode::InvalidArgument, "marginal values are not non-decreasing");
    }
    for (double v : m) {
      if (!std::isfinite(v) || v < -tol || v > 1.0 + tol)
        fail(ErrorCode::InvalidArgument, "marginal value outside [0,1]");
    }
    top_sum += m.back();
  }
  if (std::abs(top_sum - 1.0) > tol)
    fail(ErrorCode::InvalidArgument, "marginal top values do not sum to 1");
}

std::vector<CriterionScale> build_scales(const PerformanceMatrix& matrix) {
  matrix.validate();
  std::vector<CriterionScale> scales;
  scales.reserve(matrix.criteria.size());
  for (int j = 0; j < matrix.criterion_count(); ++j) {
    std::set<double> distinct;
    for (int i = 0; i < matrix.alternative_count(); ++i) distinct.insert(matrix.values[i][j]);
    CriterionScale scale;
    scale.criterion = matrix.criteria[j];
    scale.levels.assign(distinct.begin(), distinct.end());
    scales.push_back(std::move(scale));
  }
  return scales;
}

double evaluate(const ValueFunction& function,
                const std::vector<CriterionScale>& scales,
                std::span<const double> row) {
  if (function.marginals.size() != scales.size() || row.size() != scales.size())
    fail(ErrorCode::InvalidArgument, "value function, scales and row have mismatched sizes");
  double total = 0.0;
  for (size_t j = 0; j < scales.size(); ++j) {
    if (function.marginals[j].size() != scales[j].levels.size())
      fail(ErrorCode::InvalidArgument,
           "value function not dimensioned to scale of criterion '" + scales[j].criterion + "'");
    total += function.marginals[j][scales[j].index_of_level(row[j])];
  }
  return total;
}

Ranking rank(const std::vector<std::pair<std::string, double>>& utilities, double tie_tol) {
  if (tie_tol < 0) fail(ErrorCode::InvalidArgument, "tie tolerance must be non-negative");
  Ranking result;
  result.utilities = utilities;
  std::vector<int> order(utilities.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return utilities[lhs].second > utilities[rhs].second;
  });
  // Ties are grouped by chaining: each member is within tie_tol of its
  // predecessor in utility order.
  for (size_t pos = 0; pos < order.size(); ++pos) {
    if (pos == 0 ||
        utilities[order[pos - 1]].second - utilities[order[pos]].second > tie_tol) {
      result.groups.emplace_back();
    }
    result.groups.back().push_back(utilities[order[pos]].first);
  }
  return result;
}

}  // namespace pwiscore
