#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace pwiscore::pipeline {

struct NormalizeOutput {
  StandardizeResult result;
  std::string normalized_csv;  // 4 decimals, the published-table convention
  std::string stats_json;      // full precision
};

NormalizeOutput run_normalize(const std::string& matrix_csv);

struct PwiOutput {
  io::PwiArtifact artifact;
  std::string json;
  std::string percent_csv;
};

PwiOutput run_pwi(const PerformanceMatrix& normalized, long long samples, std::uint64_t seed,
                  int threads = 0);

struct ScoreOutput {
  std::vector<CriterionScale> scales;
  Lp0Result lp0;
  std::vector<DiagnosticResult> diagnostics;
  std::vector<std::pair<std::string, double>> utilities;
  Ranking ranking;
  std::string json;
  std::string function_csv;  // empty when incompatible
};

ScoreOutput run_score(const io::PwiArtifact& artifact,
                      const std::vector<PreferenceStatement>& preferences, double tie_tol);

struct EnumerateOutput {
  std::vector<CriterionScale> scales;
  EnumerationState state;
  std::optional<DispersedSelection> dispersed;  // over functions past U^1
  std::vector<int> plot_functions;              // U^1 plus the dispersed picks
  std::string json;
};

// Throws Incompatible when the base admits no compatible function.
EnumerateOutput run_enumerate(const io::PwiArtifact& artifact,
                              const std::vector<PreferenceStatement>& preferences, double delta,
                              double big_m, int cap, int dispersion_count);

struct DeaOutput {
  std::vector<CriterionScale> scales;
  DeaResult result;
  std::string json;
};

DeaOutput run_dea(const PerformanceMatrix& normalized);

}  // namespace pwiscore::pipeline
