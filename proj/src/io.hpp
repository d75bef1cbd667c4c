#pragma once

#include <string>
#include <vector>

#include "analysis.hpp"
#include "model.hpp"
#include "normalize.hpp"
#include "sampler.hpp"
#include "scoring.hpp"

namespace pwiscore::io {

// Shortest round-trip decimal representation (what keeps artifacts
// byte-identical across runs).
std::string format_double(double value);
std::string format_fixed(double value, int decimals);

// Tabular input: header "alt_id[,label],<criterion>...", one row per
// alternative, dot decimals. Cells must not contain commas.
PerformanceMatrix parse_matrix_csv(const std::string& text);

// decimals < 0 emits shortest round-trip values.
std::string matrix_to_csv(const PerformanceMatrix& matrix, int decimals);

// Self-contained pipeline artifact: the winning indices plus the normalized
// matrix they were sampled from.
struct PwiArtifact {
  PerformanceMatrix normalized;
  PWIMatrix pwi;
};

std::string pwi_to_json(const PwiArtifact& artifact);
PwiArtifact parse_pwi_json(const std::string& text);

std::string pwi_to_percent_csv(const PWIMatrix& pwi);
PWIMatrix parse_pwi_percent_csv(const std::string& text);

std::vector<PreferenceStatement> parse_preferences_json(const std::string& text);

std::string stats_to_json(const StandardizeResult& result);

// Wide breakpoint table: one row per breakpoint index, an (x, u) column pair
// per criterion, blank past the end of shorter scales.
std::string function_to_csv(const ValueFunction& function,
                            const std::vector<CriterionScale>& scales);

// Long form "criterion,x,u" plot points.
std::string plot_to_csv(const ValueFunction& function,
                        const std::vector<CriterionScale>& scales);

std::string function_to_json(const ValueFunction& function,
                             const std::vector<CriterionScale>& scales);

struct ScoreArtifacts {
  Lp0Result lp0;
  std::vector<DiagnosticResult> diagnostics;  // empty when incompatible
  std::vector<std::pair<std::string, double>> utilities;
  Ranking ranking;
};

std::string score_to_json(const ScoreArtifacts& artifacts,
                          const std::vector<CriterionScale>& scales);

std::string enumeration_to_json(const EnumerationState& state,
                                const DispersedSelection* dispersed,
                                const std::vector<CriterionScale>& scales);

std::string dea_to_json(const DeaResult& result, const std::vector<CriterionScale>& scales);

}  // namespace pwiscore::io
