#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracles {

namespace {

using pwiscore::LinearProgram;
using pwiscore::Relation;
using pwiscore::Sense;

struct HalfspaceSystem {
  // rows: a . x <= b
  std::vector<std::vector<double>> a;
  std::vector<double> b;
};

HalfspaceSystem to_halfspaces(const LinearProgram& lp) {
  HalfspaceSystem hs;
  const size_t n = lp.vars.size();
  auto push = [&](const std::vector<double>& coeffs, double rhs, double sign) {
    std::vector<double> row(n);
    for (size_t i = 0; i < n; ++i) row[i] = sign * coeffs[i];
    hs.a.push_back(std::move(row));
    hs.b.push_back(sign * rhs);
  };
  for (const auto& row : lp.rows) {
    if (row.rel == Relation::LessEq || row.rel == Relation::Equal)
      push(row.coeffs, row.rhs, 1.0);
    if (row.rel == Relation::GreaterEq || row.rel == Relation::Equal)
      push(row.coeffs, row.rhs, -1.0);
  }
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> unit(n, 0.0);
    unit[i] = 1.0;
    push(unit, lp.vars[i].upper, 1.0);   // x_i <= upper
    push(unit, lp.vars[i].lower, -1.0);  // -x_i <= -lower
  }
  return hs;
}

// Gaussian elimination with partial pivoting; false when singular.
bool solve_square(std::vector<std::vector<double>> m, std::vector<double> rhs,
                  std::vector<double>& out) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) < 1e-9) return false;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.resize(n);
  for (size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
  for (double v : out)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

BruteForceResult brute_force_lp(const LinearProgram& lp, double feas_tol) {
  const size_t n = lp.vars.size();
  const HalfspaceSystem hs = to_halfspaces(lp);
  const size_t m = hs.a.size();

  BruteForceResult best;
  const double sign = lp.sense == Sense::Maximize ? 1.0 : -1.0;

  std::vector<size_t> pick(n);
  std::vector<double> point;
  // Enumerate all size-n subsets of rows as candidate active sets.
  auto consider = [&]() {
    std::vector<std::vector<double>> sys;
    std::vector<double> rhs;
    for (size_t i = 0; i < n; ++i) {
      sys.push_back(hs.a[pick[i]]);
      rhs.push_back(hs.b[pick[i]]);
    }
    if (!solve_square(std::move(sys), std::move(rhs), point)) return;
    for (size_t r = 0; r < m; ++r) {
      double lhs = 0.0;
      for (size_t i = 0; i < n; ++i) lhs += hs.a[r][i] * point[i];
      if (lhs > hs.b[r] + feas_tol) return;
    }
    double obj = 0.0;
    for (size_t i = 0; i < n; ++i) obj += lp.objective[i] * point[i];
    if (!best.feasible || sign * obj > sign * best.objective) {
      best.feasible = true;
      best.objective = obj;
      best.point = point;
    }
  };

  // Iterative walk over all size-n index combinations.
  if (m < n) return best;
  for (size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    consider();
    bool advanced = false;
    size_t i = n;
    while (i-- > 0) {
      if (pick[i] < i + m - n) {
        ++pick[i];
        for (size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

BruteForceResult brute_force_milp(const LinearProgram& lp) {
  std::vector<size_t> bins;
  for (size_t i = 0; i < lp.vars.size(); ++i)
    if (lp.vars[i].is_binary) bins.push_back(i);

  BruteForceResult best;
  const double sign = lp.sense == Sense::Maximize ? 1.0 : -1.0;
  const std::uint64_t combos = std::uint64_t{1} << bins.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    LinearProgram fixed = lp;
    for (size_t k = 0; k < bins.size(); ++k) {
      const double v = (mask >> k) & 1 ? 1.0 : 0.0;
      fixed.vars[bins[k]].is_binary = false;
      fixed.vars[bins[k]].lower = v;
      fixed.vars[bins[k]].upper = v;
    }
    const pwiscore::LpSolution sol = pwiscore::solve_lp(fixed);
    if (sol.status != pwiscore::SolveStatus::Optimal) continue;
    if (!best.feasible || sign * sol.objective > sign * best.objective + 1e-12) {
      best.feasible = true;
      best.objective = sol.objective;
      best.point = sol.values;
    }
  }
  return best;
}

double ks_statistic_uniform(std::vector<double>& sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double worst = 0.0;
  for (size_t i = 0; i < sample.size(); ++i) {
    const double cdf = sample[i];  // uniform on [0,1]
    const double hi = (static_cast<double>(i) + 1.0) / n - cdf;
    const double lo = cdf - static_cast<double>(i) / n;
    worst = std::max({worst, hi, lo});
  }
  return worst;
}

pwiscore::LinearProgram random_lp_instance(std::mt19937_64& rng, int max_vars, int max_rows) {
  std::uniform_int_distribution<int> var_count(1, max_vars);
  std::uniform_int_distribution<int> row_count(0, max_rows);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  std::uniform_real_distribution<double> rhs(-4.0, 4.0);
  std::uniform_int_distribution<int> rel(0, 3);

  LinearProgram lp;
  const int n = var_count(rng);
  for (int i = 0; i < n; ++i)
    lp.add_variable("x" + std::to_string(i), -4.0, 4.0);
  const int m = row_count(rng);
  for (int r = 0; r < m; ++r) {
    std::vector<double> coeffs(static_cast<size_t>(n));
    for (double& c : coeffs) c = coeff(rng);
    const int kind = rel(rng);
    lp.add_row(std::move(coeffs),
               kind == 0   ? Relation::Equal
               : kind <= 2 ? Relation::LessEq
                           : Relation::GreaterEq,
               rhs(rng));
  }
  for (int i = 0; i < n; ++i) lp.objective[static_cast<size_t>(i)] = coeff(rng);
  lp.sense = rng() % 2 == 0 ? Sense::Maximize : Sense::Minimize;
  return lp;
}

pwiscore::LinearProgram random_milp_instance(std::mt19937_64& rng, int max_binaries) {
  std::uniform_int_distribution<int> bin_count(1, max_binaries);
  std::uniform_int_distribution<int> cont_count(0, 3);
  std::uniform_int_distribution<int> row_count(1, 6);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  std::uniform_real_distribution<double> rhs(-4.0, 4.0);
  std::uniform_int_distribution<int> rel(0, 3);

  LinearProgram lp;
  const int nb = bin_count(rng);
  const int nc = cont_count(rng);
  for (int i = 0; i < nb; ++i) lp.add_variable("y" + std::to_string(i), 0.0, 1.0, true);
  for (int i = 0; i < nc; ++i) lp.add_variable("x" + std::to_string(i), -4.0, 4.0);
  const int m = row_count(rng);
  for (int r = 0; r < m; ++r) {
    std::vector<double> coeffs(lp.vars.size());
    for (double& c : coeffs) c = coeff(rng);
    const int kind = rel(rng);
    lp.add_row(std::move(coeffs),
               kind == 0   ? Relation::Equal
               : kind <= 2 ? Relation::LessEq
                           : Relation::GreaterEq,
               rhs(rng));
  }
  for (size_t i = 0; i < lp.vars.size(); ++i) lp.objective[i] = coeff(rng);
  lp.sense = rng() % 2 == 0 ? Sense::Maximize : Sense::Minimize;
  return lp;
}

}  // namespace oracles
