#include "lp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

// Self-contained dense solver for the small LPs and binary MILPs produced by
// the scoring engine.
//
// solve_lp: the program is first brought to standard form (maximize, all
// structural variables >= 0) by shifting variables with a finite lower bound,
// mirroring upper-bounded free variables and splitting doubly-free ones;
// remaining finite upper bounds become explicit rows. A two-phase primal
// simplex runs on the dense tableau. Pivoting uses Dantzig's rule while the
// objective makes progress and falls back to Bland's rule on degenerate
// stretches, which guarantees termination; leaving-row ties always break on
// the lowest basis variable index, so results are deterministic.
//
// solve_milp: exact branch-and-bound on the binary variables. Depth-first,
// branching on the most fractional binary with the zero branch explored
// first, pruning on the LP relaxation bound against the incumbent (rounded
// when the objective is provably integral). Branch fixings are substituted
// out of the standard form, so node LPs shrink as the search deepens.

namespace pwiscore {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kPhase1Tol = 1e-7;
constexpr double kIntTol = 1e-7;
constexpr int kDegenerateRun = 40;  // pivots without progress before Bland engages

struct Standard {
  enum class Kind { Fixed, Shift, Mirror, Split };
  struct Map {
    Kind kind = Kind::Shift;
    int col1 = -1;
    int col2 = -1;
    double base = 0.0;  // fixed value / lower bound / upper bound
  };

  int ncols = 0;
  std::vector<std::vector<double>> rows;
  std::vector<Relation> rels;
  std::vector<double> rhs;
  std::vector<double> obj;  // maximize
  std::vector<Map> maps;
  bool infeasible = false;
};

Standard build_standard(const LinearProgram& lp, const std::vector<double>& lower,
                        const std::vector<double>& upper) {
  const int nv = lp.variable_count();
  Standard s;
  s.maps.resize(nv);
  for (int i = 0; i < nv; ++i) {
    const double l = lower[i];
    const double u = upper[i];
    if (l > u + 1e-12) {
      s.infeasible = true;
      return s;
    }
    if (std::isfinite(l) && std::isfinite(u) && u - l <= 1e-12) {
      s.maps[i] = {Standard::Kind::Fixed, -1, -1, l};
    } else if (std::isfinite(l)) {
      s.maps[i] = {Standard::Kind::Shift, s.ncols++, -1, l};
    } else if (std::isfinite(u)) {
      s.maps[i] = {Standard::Kind::Mirror, s.ncols++, -1, u};
    } else {
      s.maps[i] = {Standard::Kind::Split, s.ncols, s.ncols + 1, 0.0};
      s.ncols += 2;
    }
  }

  auto append_row = [&](const std::vector<double>& coeffs, Relation rel, double rhs_value) {
    std::vector<double> row(static_cast<size_t>(s.ncols), 0.0);
    double shift = 0.0;
    bool empty = true;
    for (int i = 0; i < nv; ++i) {
      const double c = coeffs[static_cast<size_t>(i)];
      if (c == 0.0) continue;
      const Standard::Map& mp = s.maps[static_cast<size_t>(i)];
      switch (mp.kind) {
        case Standard::Kind::Fixed:
          shift += c * mp.base;
          break;
        case Standard::Kind::Shift:
          row[static_cast<size_t>(mp.col1)] += c;
          shift += c * mp.base;
          empty = false;
          break;
        case Standard::Kind::Mirror:
          row[static_cast<size_t>(mp.col1)] -= c;
          shift += c * mp.base;
          empty = false;
          break;
        case Standard::Kind::Split:
          row[static_cast<size_t>(mp.col1)] += c;
          row[static_cast<size_t>(mp.col2)] -= c;
          empty = false;
          break;
      }
    }
    const double b = rhs_value - shift;
    if (empty) {
      const bool ok = (rel == Relation::LessEq && b >= -kPhase1Tol) ||
                      (rel == Relation::GreaterEq && b <= kPhase1Tol) ||
                      (rel == Relation::Equal && std::abs(b) <= kPhase1Tol);
      if (!ok) s.infeasible = true;
      return;
    }
    s.rows.push_back(std::move(row));
    s.rels.push_back(rel);
    s.rhs.push_back(b);
  };

  for (const LpRow& row : lp.rows) append_row(row.coeffs, row.rel, row.rhs);

  // Finite upper bounds of shifted variables become explicit rows.
  for (int i = 0; i < nv; ++i) {
    const Standard::Map& mp = s.maps[static_cast<size_t>(i)];
    if (mp.kind == Standard::Kind::Shift && std::isfinite(upper[i])) {
      std::vector<double> row(static_cast<size_t>(s.ncols), 0.0);
      row[static_cast<size_t>(mp.col1)] = 1.0;
      s.rows.push_back(std::move(row));
      s.rels.push_back(Relation::LessEq);
      s.rhs.push_back(upper[i] - lower[i]);
    }
  }

  s.obj.assign(static_cast<size_t>(s.ncols), 0.0);
  const double sign = lp.sense == Sense::Maximize ? 1.0 : -1.0;
  for (int i = 0; i < nv; ++i) {
    const double c = sign * lp.objective[static_cast<size_t>(i)];
    if (c == 0.0) continue;
    const Standard::Map& mp = s.maps[static_cast<size_t>(i)];
    switch (mp.kind) {
      case Standard::Kind::Fixed:
        break;
      case Standard::Kind::Shift:
        s.obj[static_cast<size_t>(mp.col1)] += c;
        break;
      case Standard::Kind::Mirror:
        s.obj[static_cast<size_t>(mp.col1)] -= c;
        break;
      case Standard::Kind::Split:
        s.obj[static_cast<size_t>(mp.col1)] += c;
        s.obj[static_cast<size_t>(mp.col2)] -= c;
        break;
    }
  }
  return s;
}

struct SimplexOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<double> y;  // structural column values
};

class Tableau {
 public:
  Tableau(const Standard& s) : nstruct_(s.ncols) {
    const int m = static_cast<int>(s.rows.size());
    // Column layout: structural | slack/surplus | artificial | rhs.
    int nslack = 0, nart = 0;
    for (int i = 0; i < m; ++i) {
      Relation rel = s.rels[static_cast<size_t>(i)];
      const bool neg = s.rhs[static_cast<size_t>(i)] < 0.0;
      if (neg) rel = rel == Relation::LessEq   ? Relation::GreaterEq
                     : rel == Relation::GreaterEq ? Relation::LessEq
                                                  : Relation::Equal;
      if (rel != Relation::Equal) ++nslack;
      if (rel != Relation::LessEq) ++nart;
    }
    ncols_ = nstruct_ + nslack + nart;
    rhs_col_ = ncols_;
    width_ = ncols_ + 1;
    rows_ = m;
    cells_.assign(static_cast<size_t>(m + 1) * width_, 0.0);
    basis_.assign(static_cast<size_t>(m), -1);
    artificial_.assign(static_cast<size_t>(ncols_), 0);

    int slack_at = nstruct_;
    int art_at = nstruct_ + nslack;
    for (int i = 0; i < m; ++i) {
      double* row = cell(i + 1);
      const double sgn = s.rhs[static_cast<size_t>(i)] < 0.0 ? -1.0 : 1.0;
      Relation rel = s.rels[static_cast<size_t>(i)];
      if (sgn < 0.0)
        rel = rel == Relation::LessEq   ? Relation::GreaterEq
              : rel == Relation::GreaterEq ? Relation::LessEq
                                           : Relation::Equal;
      for (int j = 0; j < nstruct_; ++j)
        row[j] = sgn * s.rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      row[rhs_col_] = sgn * s.rhs[static_cast<size_t>(i)];
      if (rel == Relation::LessEq) {
        row[slack_at] = 1.0;
        basis_[static_cast<size_t>(i)] = slack_at++;
      } else if (rel == Relation::GreaterEq) {
        row[slack_at++] = -1.0;
        row[art_at] = 1.0;
        artificial_[static_cast<size_t>(art_at)] = 1;
        basis_[static_cast<size_t>(i)] = art_at++;
      } else {
        row[art_at] = 1.0;
        artificial_[static_cast<size_t>(art_at)] = 1;
        basis_[static_cast<size_t>(i)] = art_at++;
      }
    }
    n_artificial_ = art_at - (nstruct_ + nslack);
  }

  bool needs_phase1() const { return n_artificial_ > 0; }

  // Phase 1: maximize minus the sum of artificials.
  void load_phase1_objective() {
    double* z = cell(0);
    std::fill(z, z + width_, 0.0);
    for (int j = 0; j < ncols_; ++j)
      if (artificial_[static_cast<size_t>(j)]) z[j] = 1.0;  // -c_j with c_j = -1
    for (int i = 0; i < rows_; ++i) {
      if (!artificial_[static_cast<size_t>(basis_[static_cast<size_t>(i)])]) continue;
      const double* row = cell(i + 1);
      for (int j = 0; j <= ncols_; ++j) z[j] -= row[j];
    }
    ban_artificials_ = false;
  }

  void load_phase2_objective(const std::vector<double>& obj) {
    double* z = cell(0);
    std::fill(z, z + width_, 0.0);
    for (int j = 0; j < nstruct_; ++j) z[j] = -obj[static_cast<size_t>(j)];
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[static_cast<size_t>(i)];
      const double cb = b < nstruct_ ? obj[static_cast<size_t>(b)] : 0.0;
      if (cb == 0.0) continue;
      const double* row = cell(i + 1);
      for (int j = 0; j <= ncols_; ++j) z[j] += cb * row[j];
    }
    ban_artificials_ = true;
  }

  // Runs pivots until optimal/unbounded/limit. Returns the status.
  SolveStatus iterate(long long max_iter, long long& used) {
    int stall = 0;
    bool bland = false;
    double last = objective_value();
    while (true) {
      if (used++ >= max_iter) return SolveStatus::LimitReached;
      const int enter = choose_entering(bland);
      if (enter < 0) return SolveStatus::Optimal;
      const int leave = choose_leaving(enter);
      if (leave < 0) return SolveStatus::Unbounded;
      pivot(leave, enter);
      const double now = objective_value();
      if (now > last + 1e-12) {
        stall = 0;
        bland = false;
        last = now;
      } else if (++stall >= kDegenerateRun) {
        bland = true;
      }
    }
  }

  double objective_value() const { return cells_[static_cast<size_t>(rhs_col_)]; }

  // After a successful phase 1: pivot artificials out of the basis, dropping
  // redundant rows, so phase 2 never reactivates them.
  void eliminate_artificials() {
    std::vector<int> drop;
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[static_cast<size_t>(i)];
      if (!artificial_[static_cast<size_t>(b)]) continue;
      const double* row = cell(i + 1);
      int target = -1;
      double best = kPhase1Tol;
      for (int j = 0; j < ncols_; ++j) {
        if (artificial_[static_cast<size_t>(j)]) continue;
        if (std::abs(row[j]) > best) {
          best = std::abs(row[j]);
          target = j;
        }
      }
      if (target >= 0) {
        pivot(i, target);
      } else {
        drop.push_back(i);  // the row is redundant
      }
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) remove_row(*it);
  }

  SimplexOutcome extract() const {
    SimplexOutcome out;
    out.status = SolveStatus::Optimal;
    out.y.assign(static_cast<size_t>(nstruct_), 0.0);
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[static_cast<size_t>(i)];
      if (b < nstruct_) out.y[static_cast<size_t>(b)] = cell(i + 1)[rhs_col_];
    }
    return out;
  }

 private:
  double* cell(int row) { return cells_.data() + static_cast<size_t>(row) * width_; }
  const double* cell(int row) const {
    return cells_.data() + static_cast<size_t>(row) * width_;
  }

  int choose_entering(bool bland) const {
    const double* z = cell(0);
    int pick = -1;
    double most = -kPivotTol;
    for (int j = 0; j < ncols_; ++j) {
      if (ban_artificials_ && artificial_[static_cast<size_t>(j)]) continue;
      const double d = z[j];
      if (d < -kPivotTol) {
        if (bland) return j;
        if (d < most) {
          most = d;
          pick = j;
        }
      }
    }
    return pick;
  }

  int choose_leaving(int enter) const {
    int pick = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows_; ++i) {
      const double* row = cell(i + 1);
      const double a = row[enter];
      if (a <= kPivotTol) continue;
      const double ratio = row[rhs_col_] / a;
      if (pick < 0 || ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 &&
           basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(pick)])) {
        pick = i;
        best_ratio = ratio;
      }
    }
    return pick;
  }

  void pivot(int leave, int enter) {
    double* prow = cell(leave + 1);
    const double inv = 1.0 / prow[enter];
    for (int j = 0; j <= ncols_; ++j) prow[j] *= inv;
    prow[enter] = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == leave + 1) continue;
      double* row = cell(i);
      const double f = row[enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= ncols_; ++j) row[j] -= f * prow[j];
      row[enter] = 0.0;
    }
    basis_[static_cast<size_t>(leave)] = enter;
  }

  void remove_row(int i) {
    if (i != rows_ - 1) {
      std::copy(cell(rows_), cell(rows_) + width_, cell(i + 1));
      basis_[static_cast<size_t>(i)] = basis_[static_cast<size_t>(rows_ - 1)];
    }
    --rows_;
    basis_.pop_back();
    cells_.resize(static_cast<size_t>(rows_ + 1) * width_);
  }

  int nstruct_ = 0;
  int ncols_ = 0;
  int rhs_col_ = 0;
  int width_ = 0;
  int rows_ = 0;
  int n_artificial_ = 0;
  bool ban_artificials_ = false;
  std::vector<double> cells_;
  std::vector<int> basis_;
  std::vector<char> artificial_;
};

SimplexOutcome run_simplex(const Standard& s, long long max_iter) {
  SimplexOutcome out;
  if (s.infeasible) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  Tableau tab(s);
  long long used = 0;
  if (tab.needs_phase1()) {
    tab.load_phase1_objective();
    const SolveStatus st = tab.iterate(max_iter, used);
    if (st == SolveStatus::LimitReached) {
      out.status = st;
      return out;
    }
    if (st == SolveStatus::Unbounded || tab.objective_value() < -kPhase1Tol) {
      out.status = SolveStatus::Infeasible;
      return out;
    }
    tab.eliminate_artificials();
  }
  tab.load_phase2_objective(s.obj);
  const SolveStatus st = tab.iterate(max_iter, used);
  if (st != SolveStatus::Optimal) {
    out.status = st;
    return out;
  }
  return tab.extract();
}

LpSolution solve_bounded(const LinearProgram& lp, const std::vector<double>& lower,
                         const std::vector<double>& upper, const SolverLimits& limits) {
  const Standard s = build_standard(lp, lower, upper);
  const SimplexOutcome sx = run_simplex(s, limits.max_iterations);
  LpSolution sol;
  sol.status = sx.status;
  if (sx.status != SolveStatus::Optimal) return sol;
  const int nv = lp.variable_count();
  sol.values.assign(static_cast<size_t>(nv), 0.0);
  for (int i = 0; i < nv; ++i) {
    const Standard::Map& mp = s.maps[static_cast<size_t>(i)];
    double x = 0.0;
    switch (mp.kind) {
      case Standard::Kind::Fixed: x = mp.base; break;
      case Standard::Kind::Shift: x = mp.base + sx.y[static_cast<size_t>(mp.col1)]; break;
      case Standard::Kind::Mirror: x = mp.base - sx.y[static_cast<size_t>(mp.col1)]; break;
      case Standard::Kind::Split:
        x = sx.y[static_cast<size_t>(mp.col1)] - sx.y[static_cast<size_t>(mp.col2)];
        break;
    }
    sol.values[static_cast<size_t>(i)] = x;
  }
  sol.objective = 0.0;
  for (int i = 0; i < nv; ++i)
    sol.objective += lp.objective[static_cast<size_t>(i)] * sol.values[static_cast<size_t>(i)];
  return sol;
}

std::vector<double> natural_lower(const LinearProgram& lp) {
  std::vector<double> l(lp.vars.size());
  for (size_t i = 0; i < lp.vars.size(); ++i) l[i] = lp.vars[i].lower;
  return l;
}

std::vector<double> natural_upper(const LinearProgram& lp) {
  std::vector<double> u(lp.vars.size());
  for (size_t i = 0; i < lp.vars.size(); ++i) u[i] = lp.vars[i].upper;
  return u;
}

bool integral_objective(const LinearProgram& lp) {
  for (size_t i = 0; i < lp.vars.size(); ++i) {
    const double c = lp.objective[i];
    if (c == 0.0) continue;
    if (!lp.vars[i].is_binary) return false;
    if (std::abs(c - std::round(c)) > 1e-12) return false;
  }
  return true;
}

}  // namespace

int LinearProgram::add_variable(const std::string& name, double lower, double upper,
                                bool binary) {
  vars.push_back({name, lower, upper, binary});
  objective.push_back(0.0);
  for (LpRow& row : rows) row.coeffs.push_back(0.0);  // absent from existing rows
  return static_cast<int>(vars.size()) - 1;
}

void LinearProgram::add_row(std::vector<double> coeffs, Relation rel, double rhs) {
  if (coeffs.size() != vars.size())
    fail(ErrorCode::InvalidArgument, "constraint row does not match variable count");
  rows.push_back({std::move(coeffs), rel, rhs});
}

int LinearProgram::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == name) return static_cast<int>(i);
  return -1;
}

bool LinearProgram::has_binaries() const {
  for (const LpVariable& v : vars)
    if (v.is_binary) return true;
  return false;
}

void LinearProgram::validate() const {
  if (vars.empty()) fail(ErrorCode::InvalidArgument, "program has no variables");
  if (objective.size() != vars.size())
    fail(ErrorCode::InvalidArgument, "objective does not match variable count");
  for (const LpVariable& v : vars) {
    if (std::isnan(v.lower) || std::isnan(v.upper))
      fail(ErrorCode::InvalidArgument, "NaN bound on variable '" + v.name + "'");
    if (v.is_binary && (v.lower != 0.0 || v.upper != 1.0))
      fail(ErrorCode::InvalidArgument,
           "binary variable '" + v.name + "' must have bounds {0,1}");
  }
  for (double c : objective)
    if (!std::isfinite(c)) fail(ErrorCode::InvalidArgument, "non-finite objective coefficient");
  for (const LpRow& row : rows) {
    if (row.coeffs.size() != vars.size())
      fail(ErrorCode::InvalidArgument, "constraint row does not match variable count");
    for (double c : row.coeffs)
      if (!std::isfinite(c))
        fail(ErrorCode::InvalidArgument, "non-finite constraint coefficient");
    if (!std::isfinite(row.rhs))
      fail(ErrorCode::InvalidArgument, "non-finite right-hand side");
  }
}

double LpSolution::value_of(const LinearProgram& lp, const std::string& name) const {
  const int i = lp.index_of(name);
  if (i < 0 || static_cast<size_t>(i) >= values.size())
    fail(ErrorCode::InvalidArgument, "unknown variable '" + name + "'");
  return values[static_cast<size_t>(i)];
}

LpSolution solve_lp(const LinearProgram& lp, const SolverLimits& limits) {
  lp.validate();
  if (lp.has_binaries())
    fail(ErrorCode::InvalidArgument, "solve_lp cannot handle binary variables");
  return solve_bounded(lp, natural_lower(lp), natural_upper(lp), limits);
}

LpSolution solve_milp(const LinearProgram& lp_in, const SolverLimits& limits) {
  lp_in.validate();
  std::vector<int> bins;
  for (int i = 0; i < lp_in.variable_count(); ++i)
    if (lp_in.vars[static_cast<size_t>(i)].is_binary) bins.push_back(i);
  if (bins.empty())
    return solve_bounded(lp_in, natural_lower(lp_in), natural_upper(lp_in), limits);

  const LinearProgram& lp = lp_in;
  const auto t_start = std::chrono::steady_clock::now();

  const double sign = lp.sense == Sense::Maximize ? 1.0 : -1.0;
  const bool round_bounds = integral_objective(lp);
  const std::vector<double> lower0 = natural_lower(lp);
  const std::vector<double> upper0 = natural_upper(lp);

  struct Node {
    std::vector<std::pair<int, int>> fixed;  // (variable, value)
    double bound;                            // comparison space: larger is better
  };
  std::vector<Node> stack;
  stack.push_back({{}, kInfinity});

  LpSolution best;
  bool have_best = false;
  double best_cmp = -kInfinity;
  long long nodes = 0;

  std::vector<double> lower = lower0;
  std::vector<double> upper = upper0;

  auto relax = [&](const std::vector<std::pair<int, int>>& fixed) {
    lower = lower0;
    upper = upper0;
    for (const auto& [var, val] : fixed) {
      lower[static_cast<size_t>(var)] = val;
      upper[static_cast<size_t>(var)] = val;
    }
    return solve_bounded(lp, lower, upper, limits);
  };

  while (!stack.empty()) {
    const Node node = std::move(stack.back());
    stack.pop_back();
    if (have_best && node.bound <= best_cmp + 1e-9) continue;
    if (++nodes > limits.max_nodes) {
      LpSolution out = have_best ? best : LpSolution{};
      out.status = SolveStatus::LimitReached;
      out.nodes = nodes;
      double open = node.bound;
      for (const Node& n : stack) open = std::max(open, n.bound);
      out.gap = have_best && std::isfinite(open) ? std::max(0.0, open - best_cmp) : kInfinity;
      return out;
    }

    LpSolution rel = relax(node.fixed);
    if (rel.status == SolveStatus::Infeasible) continue;
    if (rel.status != SolveStatus::Optimal) {
      rel.nodes = nodes;
      return rel;  // Unbounded or LimitReached propagates
    }
    double bound = sign * rel.objective;
    if (round_bounds) bound = std::floor(bound + 1e-5);
    if (have_best && bound <= best_cmp + 1e-9) continue;

    int branch_var = -1;
    double most_frac = kIntTol;
    for (const int i : bins) {
      bool is_fixed = false;
      for (const auto& [var, val] : node.fixed)
        if (var == i) is_fixed = true;
      if (is_fixed) continue;
      const double v = rel.values[static_cast<size_t>(i)];
      const double dist = std::min(v - std::floor(v), std::ceil(v) - v);
      if (dist > most_frac) {
        most_frac = dist;
        branch_var = i;
      }
    }

    if (branch_var < 0) {
      // Integral relaxation. Re-solve with every binary pinned to its rounded
      // value so the continuous part is exactly consistent.
      std::vector<std::pair<int, int>> all_fixed = node.fixed;
      for (const int i : bins) {
        bool is_fixed = false;
        for (const auto& [var, val] : node.fixed)
          if (var == i) is_fixed = true;
        if (!is_fixed)
          all_fixed.emplace_back(i, rel.values[static_cast<size_t>(i)] >= 0.5 ? 1 : 0);
      }
      LpSolution exact = all_fixed.size() == node.fixed.size() ? std::move(rel)
                                                               : relax(all_fixed);
      if (exact.status == SolveStatus::Infeasible) {
        // Numerically near-integral but not actually; branch on the first
        // unpinned binary instead.
        for (const int i : bins) {
          bool is_fixed = false;
          for (const auto& [var, val] : node.fixed)
            if (var == i) is_fixed = true;
          if (!is_fixed) {
            branch_var = i;
            break;
          }
        }
        if (branch_var < 0) continue;
      } else if (exact.status != SolveStatus::Optimal) {
        exact.nodes = nodes;
        return exact;
      } else {
        const double cand = sign * exact.objective;
        if (!have_best || cand > best_cmp + 1e-9) {
          best = std::move(exact);
          best_cmp = cand;
          have_best = true;
        }
        continue;
      }
    }

    Node one_child{node.fixed, bound};
    one_child.fixed.emplace_back(branch_var, 1);
    Node zero_child{node.fixed, bound};
    zero_child.fixed.emplace_back(branch_var, 0);
    stack.push_back(std::move(one_child));
    stack.push_back(std::move(zero_child));  // explored first
  }

  if (std::getenv("PWISCORE_MILP_STATS") != nullptr) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    std::fprintf(stderr, "[milp] bins=%zu nodes=%lld time=%.2fs %s obj=%g\n", bins.size(),
                 nodes, secs, have_best ? "optimal" : "infeasible",
                 have_best ? best.objective : 0.0);
  }
  if (!have_best) {
    LpSolution out;
    out.status = SolveStatus::Infeasible;
    out.nodes = nodes;
    return out;
  }
  best.status = SolveStatus::Optimal;
  best.gap = 0.0;
  best.nodes = nodes;
  return best;
}

std::string to_lp_format(const LinearProgram& lp) {
  std::ostringstream os;
  os.precision(17);
  auto term = [&](double c, const std::string& name, bool first) {
    if (first) {
      os << (c < 0 ? "- " : "") << std::abs(c) << " " << name;
    } else {
      os << (c < 0 ? " - " : " + ") << std::abs(c) << " " << name;
    }
  };
  os << (lp.sense == Sense::Maximize ? "Maximize" : "Minimize") << "\n obj: ";
  bool first = true;
  for (size_t i = 0; i < lp.vars.size(); ++i) {
    if (lp.objective[i] == 0.0) continue;
    term(lp.objective[i], lp.vars[i].name, first);
    first = false;
  }
  if (first) os << "0 " << lp.vars.front().name;
  os << "\nSubject To\n";
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    os << " c" << r + 1 << ": ";
    first = true;
    for (size_t i = 0; i < lp.vars.size(); ++i) {
      if (lp.rows[r].coeffs[i] == 0.0) continue;
      term(lp.rows[r].coeffs[i], lp.vars[i].name, first);
      first = false;
    }
    if (first) os << "0 " << lp.vars.front().name;
    const char* rel = lp.rows[r].rel == Relation::LessEq      ? "<="
                      : lp.rows[r].rel == Relation::GreaterEq ? ">="
                                                              : "=";
    os << " " << rel << " " << lp.rows[r].rhs << "\n";
  }
  os << "Bounds\n";
  for (const LpVariable& v : lp.vars) {
    if (v.is_binary) continue;
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      os << " " << v.name << " free\n";
    } else if (std::isinf(v.upper)) {
      os << " " << v.name << " >= " << v.lower << "\n";
    } else if (std::isinf(v.lower)) {
      os << " " << v.name << " <= " << v.upper << "\n";
    } else {
      os << " " << v.lower << " <= " << v.name << " <= " << v.upper << "\n";
    }
  }
  bool any_bin = lp.has_binaries();
  if (any_bin) {
    os << "Binaries\n";
    for (const LpVariable& v : lp.vars)
      if (v.is_binary) os << " " << v.name << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace pwiscore
