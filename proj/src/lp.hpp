#pragma once

#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pwiscore {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };

struct LpVariable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  bool is_binary = false;
};

struct LpRow {
  std::vector<double> coeffs;  // one per variable
  Relation rel = Relation::LessEq;
  double rhs = 0.0;
};

// Dense constraint-system carrier for every program solved by the scoring
// engine. Small by construction (tens of variables, a few hundred rows).
struct LinearProgram {
  std::vector<LpVariable> vars;
  std::vector<LpRow> rows;
  std::vector<double> objective;
  Sense sense = Sense::Maximize;

  int add_variable(const std::string& name, double lower, double upper, bool binary = false);
  void add_row(std::vector<double> coeffs, Relation rel, double rhs);
  int index_of(const std::string& name) const;  // -1 if absent
  int variable_count() const { return static_cast<int>(vars.size()); }
  bool has_binaries() const;
  void validate() const;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, LimitReached };

struct LpSolution {
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> values;  // per variable; empty unless Optimal
  double gap = 0.0;            // MILP bound gap; 0 for a completed search
  long long nodes = 0;         // MILP nodes explored

  double value_of(const LinearProgram& lp, const std::string& name) const;
};

struct SolverLimits {
  long long max_iterations = 200000;  // simplex pivots per LP
  long long max_nodes = 2000000;      // branch-and-bound nodes
};

inline constexpr double kFeasTol = 1e-8;
inline constexpr double kOptTol = 1e-7;

// Primal simplex, two phases, Bland's anti-cycling pivot rule, dense tableau.
// Rejects programs with binary variables.
LpSolution solve_lp(const LinearProgram& lp, const SolverLimits& limits = {});

// Exact branch-and-bound on the binary variables with LP relaxation bounding:
// depth-first, most-fractional branching, best-bound pruning.
LpSolution solve_milp(const LinearProgram& lp, const SolverLimits& limits = {});

// Debug dump in LP text format for cross-checking with external tools.
std::string to_lp_format(const LinearProgram& lp);

}  // namespace pwiscore
