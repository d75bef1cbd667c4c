#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lp.hpp"
#include "model.hpp"
#include "sampler.hpp"

namespace pwiscore {

enum class BaseRowKind {
  PwiMargin,        // U(a) - U(b) >= eta * (p(a,b) - 0.5), for p(a,b) > 0.5
  PrefStrict,       // U(a) - U(b) >= eta
  PrefWeak,         // U(a) - U(b) >= 0
  PrefIndifference, // U(a) - U(b) = 0
  Monotonicity,     // u_j^k <= u_j^{k+1}
  Anchor,           // u_j^0 = 0
  Normalization,    // sum_j u_j^{n_j} = 1
};

// One constraint over the flattened marginal-value coordinates plus eta
// (always the last coefficient, zero where eta does not participate).
struct BaseRow {
  BaseRowKind kind;
  std::vector<double> coeffs;
  Relation rel;
  double rhs;
  std::string note;
};

// The base constraint system: everything a compatible value function must
// satisfy, independent of the objective placed on top of it.
struct BaseSystem {
  std::vector<CriterionScale> scales;
  std::vector<Alternative> alternatives;
  std::vector<std::vector<int>> breakpoint_of;  // [alternative][criterion] -> k
  std::vector<int> coord_offset;                // per criterion, into flat coords
  int coord_count = 0;
  std::vector<BaseRow> rows;
  bool has_eta = false;  // true when any row involves eta

  int flat_index(int criterion, int level) const {
    return coord_offset[static_cast<size_t>(criterion)] + level;
  }
  int count(BaseRowKind kind) const;

  // Coefficient vector of U(a) over the flat coordinates.
  std::vector<double> utility_row(int alternative) const;

  ValueFunction unflatten(const std::vector<double>& flat, const std::string& label) const;
  std::vector<double> flatten(const ValueFunction& function) const;

  // Largest constraint violation of a candidate function at a given eta
  // (ignored when the system has no eta rows). Negative means strictly inside.
  double max_violation(const ValueFunction& function, double eta) const;
};

BaseSystem build_base_constraints(const std::vector<CriterionScale>& scales,
                                  const PerformanceMatrix& normalized,
                                  const PWIMatrix& pwi,
                                  const std::vector<PreferenceStatement>& preferences);

struct IncompatibilityReport {
  bool system_feasible = false;           // base system feasible at some eta >= 0
  std::optional<double> eta_star;         // present when system_feasible
  int pwi_constraints = 0;
  int preference_constraints = 0;
  std::string message;
};

struct Lp0Result {
  enum class Status { Compatible, VacuouslyCompatible, Incompatible };
  Status status = Status::Incompatible;
  // Finite maximum for Compatible; +infinity sentinel when no constraint
  // involves eta (vacuously compatible).
  double eta_star = 0.0;
  std::optional<ValueFunction> function;  // U^1, present unless Incompatible
  std::optional<IncompatibilityReport> report;

  bool compatible() const { return status != Status::Incompatible; }
};

// Maximize eta over the base system. eta* <= tolerance or an infeasible
// system yields an incompatibility report instead of a function.
Lp0Result solve_lp0(const BaseSystem& base);

struct DiagnosticResult {
  enum class Kind { AllContribute, AllIncreasing };
  Kind kind = Kind::AllContribute;
  bool feasible = false;
  double value = 0.0;  // h* or epsilon*
  std::optional<ValueFunction> witness;  // present iff feasible and value > tol
};

// (T1) Is there a compatible function where every criterion contributes?
DiagnosticResult check_all_contribute(const BaseSystem& base, double eta_star);

// (T2) Is there a compatible function with strictly increasing marginals?
DiagnosticResult check_all_increasing(const BaseSystem& base, double eta_star);

// Appends one exclusion block to the program: for every coordinate i two
// big-M rows with fresh binaries y1, y2 forcing u_i >= prev_i + delta or
// u_i <= prev_i - delta whenever the matching binary is 0, the implied cover
// y1 + y2 >= 1 (the pair cannot both be 0 for positive delta), and the cap
// sum(y) <= 2n - 1 that makes at least one coordinate actually move.
// Returns the indices of the new binaries.
std::vector<int> build_exclusion(LinearProgram& lp, const std::vector<int>& u_columns,
                                 const std::vector<double>& previous_values, double delta,
                                 double big_m, int round_index);

struct EnumerationState {
  enum class StopReason { ExclusionInfeasible, CapReached, SolverFailure };
  double eta_star = 0.0;  // +infinity for a vacuously compatible base
  double delta = 0.0;
  double big_m = 0.0;
  int cap = 0;
  std::vector<ValueFunction> functions;      // U^1 first
  std::vector<double> objective_values;      // z_2 ... z_t
  StopReason stop = StopReason::ExclusionInfeasible;
  std::string failure;                       // set when stop == SolverFailure
};

// Iteratively finds compatible functions pairwise separated by at least delta
// in some coordinate, starting from the LP0 function, until the exclusion
// MILP goes infeasible or the cap is hit.
EnumerationState enumerate_compatible(const BaseSystem& base, const Lp0Result& lp0,
                                      double delta, double big_m, int cap);

struct DeaAlternative {
  std::string id;
  double u_star = 0.0;
  bool efficient = false;
  std::optional<ValueFunction> witness;
  std::string error;  // per-alternative solver failure, empty otherwise
};

struct DeaResult {
  std::vector<DeaAlternative> alternatives;
  bool vacuous = false;  // every criterion degenerate: efficiency by convention
};

// Best-case utility of each alternative over all normalized monotone additive
// value functions; an alternative is efficient iff that optimum is 1.
DeaResult dea_efficiency(const std::vector<CriterionScale>& scales,
                         const PerformanceMatrix& matrix);

}  // namespace pwiscore
