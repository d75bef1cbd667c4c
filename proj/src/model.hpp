#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pwiscore {

struct Alternative {
  std::string id;
  std::string label;  // optional human-readable name
};

// Alternative x criterion evaluation table. Raw units before normalization,
// dimensionless afterwards. Immutable after construction.
struct PerformanceMatrix {
  std::vector<Alternative> alternatives;
  std::vector<std::string> criteria;
  std::vector<std::vector<double>> values;  // [alternative][criterion]

  int alternative_count() const { return static_cast<int>(alternatives.size()); }
  int criterion_count() const { return static_cast<int>(criteria.size()); }

  // Index of an alternative id, -1 if absent.
  int index_of(const std::string& alternative_id) const;

  // Rectangular, finite, unique ids. Throws InvalidArgument on violation.
  void validate() const;
};

// The strictly increasing list of distinct evaluations observed on one
// criterion. Marginal values are defined exactly on these breakpoints.
struct CriterionScale {
  std::string criterion;
  std::vector<double> levels;

  // n_j: number of steps, i.e. levels.size() - 1.
  int max_index() const { return static_cast<int>(levels.size()) - 1; }

  // Exact breakpoint position of an evaluation; throws InvalidArgument when
  // the value is not on the scale (signals a matrix/function mismatch).
  int index_of_level(double value) const;
};

// Additive value function represented by its marginal values at the
// breakpoints of each criterion scale.
struct ValueFunction {
  std::string label;
  std::vector<std::vector<double>> marginals;  // [criterion][breakpoint]

  int coordinate_count() const;

  // Monotone within tol, u_j^0 = 0 +- tol, sum of top values = 1 +- tol.
  // Use 1e-6 for solver output, 1e-3 for rounded published values.
  void validate(double tol) const;
};

enum class PreferenceKind { Strict, Weak, Indifference };

struct PreferenceStatement {
  PreferenceKind kind = PreferenceKind::Strict;
  std::string a;
  std::string b;
};

// Complete order with ties grouped, plus the utilities that induced it.
struct Ranking {
  std::vector<std::vector<std::string>> groups;  // best group first
  std::vector<std::pair<std::string, double>> utilities;  // matrix order
};

std::vector<CriterionScale> build_scales(const PerformanceMatrix& matrix);

// Sum of the marginal values at the row's breakpoints. Every entry of the row
// must sit exactly on its criterion's scale.
double evaluate(const ValueFunction& function,
                const std::vector<CriterionScale>& scales,
                std::span<const double> row);

Ranking rank(const std::vector<std::pair<std::string, double>>& utilities,
             double tie_tol = 1e-9);

}  // namespace pwiscore
