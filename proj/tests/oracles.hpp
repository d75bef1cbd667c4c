#pragma once

// Independent oracles used to cross-check the solver and sampler. They share
// no code with the implementation paths they verify.

#include <optional>
#include <random>
#include <vector>

#include "lp.hpp"

namespace oracles {

struct BruteForceResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> point;
};

// Optimum of a linear program by enumerating candidate vertices: every square
// subsystem of active rows (constraints, bounds, equalities split into two
// inequalities) is solved and the best feasible point wins. Requires finite
// bounds on every variable so that vertices exist whenever the region is
// nonempty.
BruteForceResult brute_force_lp(const pwiscore::LinearProgram& lp, double feas_tol = 1e-7);

// Optimum of a binary MILP by exhaustive enumeration of the binary
// assignments, each reduced to an LP with the binaries pinned.
BruteForceResult brute_force_milp(const pwiscore::LinearProgram& lp);

// Kolmogorov-Smirnov statistic of a sample against the uniform distribution
// on [0,1]. The sample is consumed (sorted in place).
double ks_statistic_uniform(std::vector<double>& sample);

// Random LP instances with box bounds, mixed relations and occasional
// equalities; sized for the vertex-enumeration oracle.
pwiscore::LinearProgram random_lp_instance(std::mt19937_64& rng, int max_vars = 6,
                                           int max_rows = 8);

// Random MILP instances with up to max_binaries binary variables plus a few
// continuous ones.
pwiscore::LinearProgram random_milp_instance(std::mt19937_64& rng, int max_binaries = 12);

}  // namespace oracles
