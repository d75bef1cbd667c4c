#include "pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace pwiscore::pipeline {

NormalizeOutput run_normalize(const std::string& matrix_csv) {
  NormalizeOutput out;
  const PerformanceMatrix matrix = io::parse_matrix_csv(matrix_csv);
  out.result = standardize(matrix);
  out.normalized_csv = io::matrix_to_csv(out.result.normalized, 4);
  out.stats_json = io::stats_to_json(out.result);
  return out;
}

PwiOutput run_pwi(const PerformanceMatrix& normalized, long long samples, std::uint64_t seed,
                  int threads) {
  PwiOutput out;
  out.artifact.normalized = normalized;
  out.artifact.pwi = compute_pwi(normalized, samples, seed, threads);
  out.json = io::pwi_to_json(out.artifact);
  out.percent_csv = io::pwi_to_percent_csv(out.artifact.pwi);
  return out;
}

ScoreOutput run_score(const io::PwiArtifact& artifact,
                      const std::vector<PreferenceStatement>& preferences, double tie_tol) {
  ScoreOutput out;
  out.scales = build_scales(artifact.normalized);
  const BaseSystem base =
      build_base_constraints(out.scales, artifact.normalized, artifact.pwi, preferences);
  out.lp0 = solve_lp0(base);
  if (out.lp0.compatible()) {
    out.diagnostics.push_back(check_all_contribute(base, out.lp0.eta_star));
    out.diagnostics.push_back(check_all_increasing(base, out.lp0.eta_star));
    for (int a = 0; a < artifact.normalized.alternative_count(); ++a)
      out.utilities.emplace_back(
          artifact.normalized.alternatives[static_cast<size_t>(a)].id,
          evaluate(*out.lp0.function, out.scales,
                   artifact.normalized.values[static_cast<size_t>(a)]));
    out.ranking = rank(out.utilities, tie_tol);
    out.function_csv = io::function_to_csv(*out.lp0.function, out.scales);
  }
  out.json = io::score_to_json({out.lp0, out.diagnostics, out.utilities, out.ranking},
                               out.scales);
  return out;
}

EnumerateOutput run_enumerate(const io::PwiArtifact& artifact,
                              const std::vector<PreferenceStatement>& preferences, double delta,
                              double big_m, int cap, int dispersion_count) {
  if (dispersion_count < 1)
    fail(ErrorCode::InvalidArgument, "dispersion count must be >= 1");
  EnumerateOutput out;
  out.scales = build_scales(artifact.normalized);
  const BaseSystem base =
      build_base_constraints(out.scales, artifact.normalized, artifact.pwi, preferences);
  const Lp0Result lp0 = solve_lp0(base);
  if (!lp0.compatible())
    fail(ErrorCode::Incompatible,
         lp0.report ? lp0.report->message : "no compatible value function");
  out.state = enumerate_compatible(base, lp0, delta, big_m, cap);

  out.plot_functions.push_back(0);
  const int extra = static_cast<int>(out.state.functions.size()) - 1;
  if (extra > 0) {
    std::vector<ValueFunction> candidates(out.state.functions.begin() + 1,
                                          out.state.functions.end());
    int n = std::min(dispersion_count, extra);
    if (extra >= 2) n = std::max(n, 2);  // the greedy rule is seeded with a pair
    out.dispersed = select_dispersed(candidates, n);
    for (const int i : out.dispersed->indices) out.plot_functions.push_back(i + 1);
  }
  out.json = io::enumeration_to_json(out.state,
                                     out.dispersed ? &*out.dispersed : nullptr, out.scales);
  return out;
}

DeaOutput run_dea(const PerformanceMatrix& normalized) {
  DeaOutput out;
  out.scales = build_scales(normalized);
  out.result = dea_efficiency(out.scales, normalized);
  out.json = io::dea_to_json(out.result, out.scales);
  return out;
}

}  // namespace pwiscore::pipeline
