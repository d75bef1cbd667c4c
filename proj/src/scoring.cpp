#include "scoring.hpp"

#include <algorithm>
#include <cmath>

namespace pwiscore {

namespace {

constexpr double kPositiveTol = 1e-7;

// Shared program skeleton: the flat marginal coordinates, optionally eta,
// and every base row.
struct ProgramFrame {
  LinearProgram lp;
  std::vector<int> u_cols;
  int eta_col = -1;
};

ProgramFrame make_frame(const BaseSystem& base, bool with_eta) {
  ProgramFrame frame;
  for (int j = 0; j < static_cast<int>(base.scales.size()); ++j) {
    const CriterionScale& scale = base.scales[static_cast<size_t>(j)];
    for (int k = 0; k <= scale.max_index(); ++k) {
      // [0,1] is implied by anchoring, monotonicity and normalization; the
      // explicit upper bound would only add tableau rows.
      frame.u_cols.push_back(frame.lp.add_variable(
          "u_" + scale.criterion + "_" + std::to_string(k), 0.0, kInfinity));
    }
  }
  if (with_eta) frame.eta_col = frame.lp.add_variable("eta", 0.0, kInfinity);
  for (const BaseRow& row : base.rows) {
    std::vector<double> coeffs(static_cast<size_t>(frame.lp.variable_count()), 0.0);
    for (int i = 0; i < base.coord_count; ++i)
      coeffs[static_cast<size_t>(frame.u_cols[static_cast<size_t>(i)])] =
          row.coeffs[static_cast<size_t>(i)];
    const double eta_coeff = row.coeffs[static_cast<size_t>(base.coord_count)];
    if (eta_coeff != 0.0) {
      if (!with_eta)
        fail(ErrorCode::Internal, "eta row in a frame built without eta");
      coeffs[static_cast<size_t>(frame.eta_col)] = eta_coeff;
    }
    frame.lp.add_row(std::move(coeffs), row.rel, row.rhs);
  }
  return frame;
}

void fix_eta(ProgramFrame& frame, double eta_star) {
  std::vector<double> coeffs(static_cast<size_t>(frame.lp.variable_count()), 0.0);
  coeffs[static_cast<size_t>(frame.eta_col)] = 1.0;
  frame.lp.add_row(std::move(coeffs), Relation::Equal, eta_star);
}

ValueFunction function_from_solution(const BaseSystem& base, const ProgramFrame& frame,
                                     const LpSolution& sol, const std::string& label) {
  std::vector<double> flat(static_cast<size_t>(base.coord_count), 0.0);
  for (int i = 0; i < base.coord_count; ++i) {
    double v = sol.values[static_cast<size_t>(frame.u_cols[static_cast<size_t>(i)])];
    if (std::abs(v) < 1e-12) v = 0.0;
    flat[static_cast<size_t>(i)] = v;
  }
  return base.unflatten(flat, label);
}

[[noreturn]] void solver_failed(const char* what, SolveStatus status) {
  const char* detail = status == SolveStatus::LimitReached ? "iteration or node limit reached"
                       : status == SolveStatus::Unbounded  ? "program unbounded"
                                                           : "unexpected solver status";
  fail(ErrorCode::Solver, std::string(what) + ": " + detail);
}

}  // namespace

int BaseSystem::count(BaseRowKind kind) const {
  int n = 0;
  for (const BaseRow& row : rows)
    if (row.kind == kind) ++n;
  return n;
}

std::vector<double> BaseSystem::utility_row(int alternative) const {
  std::vector<double> coeffs(static_cast<size_t>(coord_count), 0.0);
  const auto& bps = breakpoint_of[static_cast<size_t>(alternative)];
  for (int j = 0; j < static_cast<int>(scales.size()); ++j)
    coeffs[static_cast<size_t>(flat_index(j, bps[static_cast<size_t>(j)]))] += 1.0;
  return coeffs;
}

ValueFunction BaseSystem::unflatten(const std::vector<double>& flat,
                                    const std::string& label) const {
  if (static_cast<int>(flat.size()) != coord_count)
    fail(ErrorCode::InvalidArgument, "flat coordinate vector has wrong length");
  ValueFunction fn;
  fn.label = label;
  for (int j = 0; j < static_cast<int>(scales.size()); ++j) {
    const int levels = scales[static_cast<size_t>(j)].max_index() + 1;
    std::vector<double> m(static_cast<size_t>(levels));
    for (int k = 0; k < levels; ++k) m[static_cast<size_t>(k)] = flat[static_cast<size_t>(flat_index(j, k))];
    fn.marginals.push_back(std::move(m));
  }
  return fn;
}

std::vector<double> BaseSystem::flatten(const ValueFunction& function) const {
  if (function.marginals.size() != scales.size())
    fail(ErrorCode::InvalidArgument, "value function criterion count mismatch");
  std::vector<double> flat(static_cast<size_t>(coord_count), 0.0);
  for (int j = 0; j < static_cast<int>(scales.size()); ++j) {
    const auto& m = function.marginals[static_cast<size_t>(j)];
    if (static_cast<int>(m.size()) != scales[static_cast<size_t>(j)].max_index() + 1)
      fail(ErrorCode::InvalidArgument, "value function not dimensioned to the scales");
    for (int k = 0; k < static_cast<int>(m.size()); ++k)
      flat[static_cast<size_t>(flat_index(j, k))] = m[static_cast<size_t>(k)];
  }
  return flat;
}

double BaseSystem::max_violation(const ValueFunction& function, double eta) const {
  const std::vector<double> flat = flatten(function);
  double worst = -kInfinity;
  for (const BaseRow& row : rows) {
    double lhs = 0.0;
    for (int i = 0; i < coord_count; ++i)
      lhs += row.coeffs[static_cast<size_t>(i)] * flat[static_cast<size_t>(i)];
    const double eta_coeff = row.coeffs[static_cast<size_t>(coord_count)];
    if (eta_coeff != 0.0) {
      if (std::isinf(eta)) continue;  // vacuous sentinel: no eta rows apply
      lhs += eta_coeff * eta;
    }
    double violation = 0.0;
    switch (row.rel) {
      case Relation::LessEq: violation = lhs - row.rhs; break;
      case Relation::GreaterEq: violation = row.rhs - lhs; break;
      case Relation::Equal: violation = std::abs(lhs - row.rhs); break;
    }
    worst = std::max(worst, violation);
  }
  return worst;
}

BaseSystem build_base_constraints(const std::vector<CriterionScale>& scales,
                                  const PerformanceMatrix& normalized,
                                  const PWIMatrix& pwi,
                                  const std::vector<PreferenceStatement>& preferences) {
  normalized.validate();
  pwi.validate();
  const int n = normalized.alternative_count();
  const int m = normalized.criterion_count();
  if (static_cast<int>(scales.size()) != m)
    fail(ErrorCode::InvalidArgument, "scale count does not match criterion count");
  if (pwi.size() != n)
    fail(ErrorCode::InvalidArgument, "PWI dimension does not match alternative count");
  for (int a = 0; a < n; ++a) {
    if (pwi.alternative_ids[static_cast<size_t>(a)] != normalized.alternatives[static_cast<size_t>(a)].id)
      fail(ErrorCode::InvalidArgument, "PWI alternative ids do not match the matrix");
  }

  BaseSystem base;
  base.scales = scales;
  base.alternatives = normalized.alternatives;
  base.coord_offset.resize(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    base.coord_offset[static_cast<size_t>(j)] = base.coord_count;
    base.coord_count += scales[static_cast<size_t>(j)].max_index() + 1;
  }
  base.breakpoint_of.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(m), 0));
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < m; ++j)
      base.breakpoint_of[static_cast<size_t>(a)][static_cast<size_t>(j)] =
          scales[static_cast<size_t>(j)].index_of_level(normalized.values[static_cast<size_t>(a)][static_cast<size_t>(j)]);

  const int width = base.coord_count + 1;  // + eta
  auto blank = [&]() { return std::vector<double>(static_cast<size_t>(width), 0.0); };
  auto difference_row = [&](int a, int b) {
    std::vector<double> coeffs = blank();
    for (int j = 0; j < m; ++j) {
      coeffs[static_cast<size_t>(base.flat_index(j, base.breakpoint_of[static_cast<size_t>(a)][static_cast<size_t>(j)]))] += 1.0;
      coeffs[static_cast<size_t>(base.flat_index(j, base.breakpoint_of[static_cast<size_t>(b)][static_cast<size_t>(j)]))] -= 1.0;
    }
    return coeffs;
  };

  // Proportionality constraints for every strictly winning ordered pair.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const double p = pwi.p[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (p > 0.5) {
        std::vector<double> coeffs = difference_row(a, b);
        coeffs[static_cast<size_t>(base.coord_count)] = -(p - 0.5);
        base.rows.push_back({BaseRowKind::PwiMargin, std::move(coeffs), Relation::GreaterEq, 0.0,
                             "p(" + pwi.alternative_ids[static_cast<size_t>(a)] + "," +
                                 pwi.alternative_ids[static_cast<size_t>(b)] + ")"});
      }
    }
  }

  for (const PreferenceStatement& pref : preferences) {
    const int a = normalized.index_of(pref.a);
    const int b = normalized.index_of(pref.b);
    if (a < 0 || b < 0)
      fail(ErrorCode::InvalidArgument,
           "preference references unknown alternative '" + (a < 0 ? pref.a : pref.b) + "'");
    if (a == b)
      fail(ErrorCode::InvalidArgument, "preference compares '" + pref.a + "' with itself");
    std::vector<double> coeffs = difference_row(a, b);
    switch (pref.kind) {
      case PreferenceKind::Strict:
        coeffs[static_cast<size_t>(base.coord_count)] = -1.0;
        base.rows.push_back({BaseRowKind::PrefStrict, std::move(coeffs), Relation::GreaterEq, 0.0,
                             pref.a + " > " + pref.b});
        break;
      case PreferenceKind::Weak:
        base.rows.push_back({BaseRowKind::PrefWeak, std::move(coeffs), Relation::GreaterEq, 0.0,
                             pref.a + " >= " + pref.b});
        break;
      case PreferenceKind::Indifference:
        base.rows.push_back({BaseRowKind::PrefIndifference, std::move(coeffs), Relation::Equal,
                             0.0, pref.a + " ~ " + pref.b});
        break;
    }
  }

  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < scales[static_cast<size_t>(j)].max_index(); ++k) {
      std::vector<double> coeffs = blank();
      coeffs[static_cast<size_t>(base.flat_index(j, k))] = 1.0;
      coeffs[static_cast<size_t>(base.flat_index(j, k + 1))] = -1.0;
      base.rows.push_back({BaseRowKind::Monotonicity, std::move(coeffs), Relation::LessEq, 0.0,
                           scales[static_cast<size_t>(j)].criterion + "[" + std::to_string(k) + "]"});
    }
  }
  for (int j = 0; j < m; ++j) {
    std::vector<double> coeffs = blank();
    coeffs[static_cast<size_t>(base.flat_index(j, 0))] = 1.0;
    base.rows.push_back({BaseRowKind::Anchor, std::move(coeffs), Relation::Equal, 0.0,
                         scales[static_cast<size_t>(j)].criterion});
  }
  {
    std::vector<double> coeffs = blank();
    for (int j = 0; j < m; ++j)
      coeffs[static_cast<size_t>(base.flat_index(j, scales[static_cast<size_t>(j)].max_index()))] = 1.0;
    base.rows.push_back({BaseRowKind::Normalization, std::move(coeffs), Relation::Equal, 1.0, ""});
  }

  for (const BaseRow& row : base.rows)
    if (row.coeffs[static_cast<size_t>(base.coord_count)] != 0.0) base.has_eta = true;
  return base;
}

Lp0Result solve_lp0(const BaseSystem& base) {
  Lp0Result result;
  const int pwi_rows = base.count(BaseRowKind::PwiMargin);
  const int pref_rows = base.count(BaseRowKind::PrefStrict) +
                        base.count(BaseRowKind::PrefWeak) +
                        base.count(BaseRowKind::PrefIndifference);

  auto incompatible = [&](bool feasible, std::optional<double> eta, const std::string& msg) {
    result.status = Lp0Result::Status::Incompatible;
    result.eta_star = eta.value_or(0.0);
    result.report = IncompatibilityReport{feasible, eta, pwi_rows, pref_rows, msg};
    return result;
  };

  if (!base.has_eta) {
    // No constraint bounds eta: any feasible function is vacuously compatible.
    ProgramFrame frame = make_frame(base, false);
    const LpSolution sol = solve_lp(frame.lp);
    if (sol.status == SolveStatus::Infeasible)
      return incompatible(false, std::nullopt,
                          "the base system is infeasible (no admissible value function)");
    if (sol.status != SolveStatus::Optimal) solver_failed("feasibility program", sol.status);
    result.status = Lp0Result::Status::VacuouslyCompatible;
    result.eta_star = kInfinity;
    result.function = function_from_solution(base, frame, sol, "U1");
    return result;
  }

  ProgramFrame frame = make_frame(base, true);
  frame.lp.objective[static_cast<size_t>(frame.eta_col)] = 1.0;
  frame.lp.sense = Sense::Maximize;
  const LpSolution sol = solve_lp(frame.lp);
  if (sol.status == SolveStatus::Infeasible)
    return incompatible(false, std::nullopt, "the base system is infeasible");
  if (sol.status != SolveStatus::Optimal) solver_failed("LP0", sol.status);
  const double eta_star = sol.objective;
  if (eta_star <= kPositiveTol)
    return incompatible(true, eta_star,
                        "no value function spreads the utilities with a positive margin");
  result.status = Lp0Result::Status::Compatible;
  result.eta_star = eta_star;
  result.function = function_from_solution(base, frame, sol, "U1");
  return result;
}

namespace {

DiagnosticResult run_diagnostic(const BaseSystem& base, double eta_star,
                                DiagnosticResult::Kind kind) {
  ProgramFrame frame = make_frame(base, base.has_eta);
  if (base.has_eta) {
    if (std::isinf(eta_star))
      fail(ErrorCode::InvalidArgument, "finite eta* required for a system with eta constraints");
    fix_eta(frame, eta_star);
  }
  const int aux = frame.lp.add_variable(
      kind == DiagnosticResult::Kind::AllContribute ? "h" : "epsilon", -kInfinity, kInfinity);

  const int m = static_cast<int>(base.scales.size());
  if (kind == DiagnosticResult::Kind::AllContribute) {
    // u_j(top) >= h for every criterion.
    for (int j = 0; j < m; ++j) {
      std::vector<double> coeffs(static_cast<size_t>(frame.lp.variable_count()), 0.0);
      coeffs[static_cast<size_t>(frame.u_cols[static_cast<size_t>(base.flat_index(
          j, base.scales[static_cast<size_t>(j)].max_index()))])] = 1.0;
      coeffs[static_cast<size_t>(aux)] = -1.0;
      frame.lp.add_row(std::move(coeffs), Relation::GreaterEq, 0.0);
    }
  } else {
    // u_j^k + epsilon <= u_j^{k+1} for every consecutive breakpoint pair.
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < base.scales[static_cast<size_t>(j)].max_index(); ++k) {
        std::vector<double> coeffs(static_cast<size_t>(frame.lp.variable_count()), 0.0);
        coeffs[static_cast<size_t>(frame.u_cols[static_cast<size_t>(base.flat_index(j, k))])] = 1.0;
        coeffs[static_cast<size_t>(frame.u_cols[static_cast<size_t>(base.flat_index(j, k + 1))])] = -1.0;
        coeffs[static_cast<size_t>(aux)] = 1.0;
        frame.lp.add_row(std::move(coeffs), Relation::LessEq, 0.0);
      }
    }
  }
  frame.lp.objective[static_cast<size_t>(aux)] = 1.0;
  frame.lp.sense = Sense::Maximize;

  DiagnosticResult diag;
  diag.kind = kind;
  const LpSolution sol = solve_lp(frame.lp);
  if (sol.status == SolveStatus::Infeasible) {
    diag.feasible = false;
    return diag;
  }
  if (sol.status != SolveStatus::Optimal)
    solver_failed(kind == DiagnosticResult::Kind::AllContribute ? "LP1" : "LP2", sol.status);
  diag.feasible = true;
  diag.value = sol.objective;
  if (diag.value > kPositiveTol)
    diag.witness = function_from_solution(
        base, frame, sol,
        kind == DiagnosticResult::Kind::AllContribute ? "U_allcontr" : "U_allinc");
  return diag;
}

}  // namespace

DiagnosticResult check_all_contribute(const BaseSystem& base, double eta_star) {
  return run_diagnostic(base, eta_star, DiagnosticResult::Kind::AllContribute);
}

DiagnosticResult check_all_increasing(const BaseSystem& base, double eta_star) {
  return run_diagnostic(base, eta_star, DiagnosticResult::Kind::AllIncreasing);
}

std::vector<int> build_exclusion(LinearProgram& lp, const std::vector<int>& u_columns,
                                 const std::vector<double>& previous_values, double delta,
                                 double big_m, int round_index) {
  if (delta <= 0.0)
    fail(ErrorCode::InvalidArgument, "delta must be strictly positive");
  if (big_m < 1.0 + delta)
    fail(ErrorCode::InvalidArgument,
         "big-M too small: it must be at least 1 + delta or the exclusion cuts feasible points");
  if (u_columns.size() != previous_values.size())
    fail(ErrorCode::InvalidArgument, "coordinate columns and previous values differ in length");
  const int n = static_cast<int>(u_columns.size());
  if (n == 0) fail(ErrorCode::InvalidArgument, "exclusion over an empty coordinate set");

  std::vector<int> binaries;
  binaries.reserve(static_cast<size_t>(2 * n));
  const std::string tag = "_r" + std::to_string(round_index) + "_";
  std::vector<LpRow> pending;
  for (int i = 0; i < n; ++i) {
    const int y1 = lp.add_variable("y1" + tag + std::to_string(i), 0.0, 1.0, true);
    const int y2 = lp.add_variable("y2" + tag + std::to_string(i), 0.0, 1.0, true);
    binaries.push_back(y1);
    binaries.push_back(y2);
  }

  const auto width = lp.vars.size();
  for (int i = 0; i < n; ++i) {
    const int y1 = binaries[static_cast<size_t>(2 * i)];
    const int y2 = binaries[static_cast<size_t>(2 * i + 1)];
    const int u = u_columns[static_cast<size_t>(i)];
    const double prev = previous_values[static_cast<size_t>(i)];

    std::vector<double> above(width, 0.0);  // u + M y1 >= prev + delta
    above[static_cast<size_t>(u)] = 1.0;
    above[static_cast<size_t>(y1)] = big_m;
    lp.add_row(std::move(above), Relation::GreaterEq, prev + delta);

    std::vector<double> below(width, 0.0);  // u - M y2 <= prev - delta
    below[static_cast<size_t>(u)] = 1.0;
    below[static_cast<size_t>(y2)] = -big_m;
    lp.add_row(std::move(below), Relation::LessEq, prev - delta);

    std::vector<double> cover(width, 0.0);  // both 0 is contradictory
    cover[static_cast<size_t>(y1)] = 1.0;
    cover[static_cast<size_t>(y2)] = 1.0;
    lp.add_row(std::move(cover), Relation::GreaterEq, 1.0);
  }
  std::vector<double> cap(width, 0.0);
  for (const int y : binaries) cap[static_cast<size_t>(y)] = 1.0;
  lp.add_row(std::move(cap), Relation::LessEq, 2.0 * n - 1.0);
  return binaries;
}

EnumerationState enumerate_compatible(const BaseSystem& base, const Lp0Result& lp0,
                                      double delta, double big_m, int cap) {
  if (!lp0.compatible() || !lp0.function.has_value())
    fail(ErrorCode::InvalidArgument, "enumeration requires a compatible base system");
  if (cap < 1) fail(ErrorCode::InvalidArgument, "enumeration cap must be >= 1");
  if (delta <= 0.0) fail(ErrorCode::InvalidArgument, "delta must be strictly positive");
  if (big_m < 1.0 + delta)
    fail(ErrorCode::InvalidArgument, "big-M too small: it must be at least 1 + delta");

  EnumerationState state;
  state.eta_star = lp0.eta_star;
  state.delta = delta;
  state.big_m = big_m;
  state.cap = cap;
  state.functions.push_back(*lp0.function);
  state.functions.back().label = "U1";

  // Attainable range of every coordinate over the compatible set. A move
  // past either end is impossible for any function, so the matching
  // exclusion binary can be pinned to its relaxed value up front; the
  // integer-feasible set is unchanged and the search tree collapses.
  std::vector<double> coord_low(static_cast<size_t>(base.coord_count), 0.0);
  std::vector<double> coord_high(static_cast<size_t>(base.coord_count), 1.0);
  {
    ProgramFrame probe = make_frame(base, base.has_eta);
    if (base.has_eta) fix_eta(probe, lp0.eta_star);
    for (int i = 0; i < base.coord_count; ++i) {
      probe.lp.objective.assign(probe.lp.vars.size(), 0.0);
      probe.lp.objective[static_cast<size_t>(probe.u_cols[static_cast<size_t>(i)])] = 1.0;
      probe.lp.sense = Sense::Minimize;
      const LpSolution lo = solve_lp(probe.lp);
      probe.lp.sense = Sense::Maximize;
      const LpSolution hi = solve_lp(probe.lp);
      if (lo.status == SolveStatus::Optimal && hi.status == SolveStatus::Optimal) {
        coord_low[static_cast<size_t>(i)] = lo.objective;
        coord_high[static_cast<size_t>(i)] = hi.objective;
      }
    }
  }

  while (static_cast<int>(state.functions.size()) < cap) {
    ProgramFrame frame = make_frame(base, base.has_eta);
    if (base.has_eta) fix_eta(frame, lp0.eta_star);
    std::vector<int> all_binaries;
    for (int r = 0; r < static_cast<int>(state.functions.size()); ++r) {
      const std::vector<double> prev = base.flatten(state.functions[static_cast<size_t>(r)]);
      const std::vector<int> bins =
          build_exclusion(frame.lp, frame.u_cols, prev, delta, big_m, r + 1);
      for (int i = 0; i < base.coord_count; ++i) {
        const double v = prev[static_cast<size_t>(i)];
        if (v + delta > coord_high[static_cast<size_t>(i)] + 1e-6) {
          LpVariable& y1 = frame.lp.vars[static_cast<size_t>(bins[static_cast<size_t>(2 * i)])];
          y1.is_binary = false;
          y1.lower = y1.upper = 1.0;  // no compatible function lies above
        }
        if (v - delta < coord_low[static_cast<size_t>(i)] - 1e-6) {
          LpVariable& y2 =
              frame.lp.vars[static_cast<size_t>(bins[static_cast<size_t>(2 * i + 1)])];
          y2.is_binary = false;
          y2.lower = y2.upper = 1.0;  // no compatible function lies below
        }
      }
      all_binaries.insert(all_binaries.end(), bins.begin(), bins.end());
    }
    frame.lp.objective.assign(frame.lp.vars.size(), 0.0);
    for (const int y : all_binaries) frame.lp.objective[static_cast<size_t>(y)] = 1.0;
    frame.lp.sense = Sense::Minimize;

    const LpSolution sol = solve_milp(frame.lp);
    if (sol.status == SolveStatus::Infeasible) {
      state.stop = EnumerationState::StopReason::ExclusionInfeasible;
      return state;
    }
    if (sol.status != SolveStatus::Optimal) {
      state.stop = EnumerationState::StopReason::SolverFailure;
      state.failure = sol.status == SolveStatus::LimitReached ? "node or iteration limit reached"
                                                              : "relaxation unbounded";
      return state;
    }
    state.objective_values.push_back(sol.objective);
    state.functions.push_back(function_from_solution(
        base, frame, sol, "U" + std::to_string(state.functions.size() + 1)));
  }
  state.stop = EnumerationState::StopReason::CapReached;
  return state;
}

DeaResult dea_efficiency(const std::vector<CriterionScale>& scales,
                         const PerformanceMatrix& matrix) {
  matrix.validate();
  if (scales.size() != matrix.criteria.size())
    fail(ErrorCode::InvalidArgument, "scale count does not match criterion count");

  DeaResult result;
  bool any_steps = false;
  for (const CriterionScale& s : scales)
    if (s.max_index() > 0) any_steps = true;
  if (!any_steps) {
    // Every criterion is single-valued: the normalization row is unsatisfiable
    // and all alternatives are mutually indistinguishable, hence efficient by
    // convention (no witness function exists).
    result.vacuous = true;
    for (const Alternative& alt : matrix.alternatives)
      result.alternatives.push_back({alt.id, 1.0, true, std::nullopt, ""});
    return result;
  }

  // The admissible set does not depend on the alternative, only the objective
  // does: monotonicity, anchors and normalization over the scales.
  PWIMatrix empty_pwi;
  for (const Alternative& alt : matrix.alternatives) empty_pwi.alternative_ids.push_back(alt.id);
  empty_pwi.p.assign(matrix.alternatives.size(),
                     std::vector<double>(matrix.alternatives.size(), 0.0));
  for (size_t a = 0; a < matrix.alternatives.size(); ++a)
    for (size_t b = 0; b < matrix.alternatives.size(); ++b)
      if (a != b) empty_pwi.p[a][b] = 0.5;
  const BaseSystem base = build_base_constraints(scales, matrix, empty_pwi, {});

  for (int a = 0; a < matrix.alternative_count(); ++a) {
    ProgramFrame frame = make_frame(base, false);
    const std::vector<double> urow = base.utility_row(a);
    for (int i = 0; i < base.coord_count; ++i)
      frame.lp.objective[static_cast<size_t>(frame.u_cols[static_cast<size_t>(i)])] =
          urow[static_cast<size_t>(i)];
    frame.lp.sense = Sense::Maximize;
    const LpSolution sol = solve_lp(frame.lp);
    DeaAlternative out;
    out.id = matrix.alternatives[static_cast<size_t>(a)].id;
    if (sol.status == SolveStatus::Optimal) {
      out.u_star = sol.objective;
      out.efficient = sol.objective >= 1.0 - 1e-6;
      out.witness = function_from_solution(base, frame, sol,
                                           "U_dea_" + out.id);
    } else if (sol.status == SolveStatus::Infeasible) {
      out.error = "DEA program infeasible";
    } else {
      out.error = sol.status == SolveStatus::LimitReached ? "iteration limit reached"
                                                          : "program unbounded";
    }
    result.alternatives.push_back(std::move(out));
  }
  return result;
}

}  // namespace pwiscore
