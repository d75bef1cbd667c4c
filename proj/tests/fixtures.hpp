#pragma once

// Case-study fixtures shared across the test suite: the seven funds evaluated
// on five criteria, their standardized values, the published winning indices,
// the synthesized value function and the induced utilities.

#include <string>
#include <vector>

#include "model.hpp"
#include "sampler.hpp"

namespace fixtures {

inline constexpr int kAlternatives = 7;
inline constexpr int kCriteria = 5;

inline const char* kIds[kAlternatives] = {"a1", "a2", "a3", "a4", "a5", "a6", "a7"};

inline const char* kLabels[kAlternatives] = {
    "Allianz Multipartner Multi20", "Amundi Bilanciato Euro C",
    "Arca Te - Titoli Esteri",      "Bancoposta Mix 2 A Cap",
    "Etica Rendita Bilanciata I",   "Eurizon Pir Italia 30 I",
    "Pramerica Global Multiasset 30"};

inline constexpr double kRaw[kAlternatives][kCriteria] = {
    {0.0403, 0.0010, -0.0155, -0.0030, -0.0010},
    {0.0257, 0.0004, -0.0103, -0.0014, -0.0008},
    {0.0322, 0.0009, -0.0133, -0.0022, -0.0011},
    {0.0193, 0.0003, -0.0080, -0.0011, -0.0006},
    {0.0334, 0.0005, -0.0150, -0.0009, -0.0013},
    {0.0219, 0.0003, -0.0088, -0.0011, -0.0007},
    {-0.0018, 0.0000, 0.0007, -0.0010, 0.0006}};

inline constexpr double kNormalized[kAlternatives][kCriteria] = {
    {0.6940, 0.7349, 0.3370, 0.1917, 0.4171},
    {0.5157, 0.4869, 0.4924, 0.5268, 0.4651},
    {0.5943, 0.6939, 0.4013, 0.3492, 0.3923},
    {0.4370, 0.3980, 0.5596, 0.5880, 0.5381},
    {0.6102, 0.4950, 0.3522, 0.6333, 0.3455},
    {0.4694, 0.4342, 0.5357, 0.5926, 0.4933},
    {0.1793, 0.2571, 0.8219, 0.6184, 0.8487}};

inline constexpr double kPwiPercent[kAlternatives][kAlternatives] = {
    {0, 41.66, 42.614, 40.816, 52.372, 40.703, 36.734},
    {58.34, 0, 59.283, 40.742, 55.768, 36.729, 36.806},
    {57.386, 40.717, 0, 40.498, 54.815, 39.685, 37.287},
    {59.184, 59.258, 59.502, 0, 55.949, 45.695, 35.857},
    {47.628, 44.232, 45.185, 44.051, 0, 41.449, 39.327},
    {59.297, 63.271, 60.315, 54.305, 58.551, 0, 38.159},
    {63.266, 63.194, 62.713, 64.143, 60.673, 61.841, 0}};

// Published synthesized function, marginal values per criterion breakpoint.
inline constexpr double kFunctionU1[kCriteria][kAlternatives] = {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0.2885, 0.3419, 0.5318, 0.5318, 0.5318},
    {0, 0, 0, 0, 0.0883, 0.0883, 0.0883},
    {0, 0, 0.137, 0.137, 0.137, 0.137, 0.3799}};

inline constexpr double kUtilities[kAlternatives] = {0.137, 0.4789, 0.2885, 0.6688,
                                                     0.0883, 0.7571, 1.0};

inline constexpr double kEtaStar = 2.0513;

inline const char* kRankingOrder[kAlternatives] = {"a7", "a6", "a4", "a2", "a3", "a1", "a5"};

inline pwiscore::PerformanceMatrix raw_matrix() {
  pwiscore::PerformanceMatrix m;
  for (int i = 0; i < kAlternatives; ++i) {
    m.alternatives.push_back({kIds[i], kLabels[i]});
    m.values.emplace_back(std::begin(kRaw[i]), std::end(kRaw[i]));
  }
  for (const char* c : {"g1", "g2", "g3", "g4", "g5"}) m.criteria.push_back(c);
  return m;
}

inline pwiscore::PerformanceMatrix normalized_matrix() {
  pwiscore::PerformanceMatrix m;
  for (int i = 0; i < kAlternatives; ++i) {
    m.alternatives.push_back({kIds[i], kLabels[i]});
    m.values.emplace_back(std::begin(kNormalized[i]), std::end(kNormalized[i]));
  }
  for (const char* c : {"g1", "g2", "g3", "g4", "g5"}) m.criteria.push_back(c);
  return m;
}

inline pwiscore::PWIMatrix published_pwi() {
  pwiscore::PWIMatrix pwi;
  for (const char* id : kIds) pwi.alternative_ids.push_back(id);
  pwi.p.assign(kAlternatives, std::vector<double>(kAlternatives, 0.0));
  for (int a = 0; a < kAlternatives; ++a)
    for (int b = 0; b < kAlternatives; ++b) pwi.p[a][b] = kPwiPercent[a][b] / 100.0;
  pwi.samples = 0;
  pwi.seed = 0;
  return pwi;
}

inline pwiscore::ValueFunction published_function() {
  pwiscore::ValueFunction fn;
  fn.label = "U1";
  for (int j = 0; j < kCriteria; ++j)
    fn.marginals.emplace_back(std::begin(kFunctionU1[j]), std::end(kFunctionU1[j]));
  return fn;
}

// Simple instances used by several suites.

// Two alternatives, b dominating a on both criteria, winning indices 0.6/0.4.
inline pwiscore::PerformanceMatrix dominance_matrix() {
  pwiscore::PerformanceMatrix m;
  m.alternatives = {{"a", ""}, {"b", ""}};
  m.criteria = {"c1", "c2"};
  m.values = {{0.0, 0.0}, {1.0, 1.0}};
  return m;
}

inline pwiscore::PWIMatrix dominance_pwi() {
  pwiscore::PWIMatrix pwi;
  pwi.alternative_ids = {"a", "b"};
  pwi.p = {{0.0, 0.4}, {0.6, 0.0}};
  return pwi;
}

// One criterion with three observed levels and no winning-index information:
// u(0) = 0 and u(1) = 1 are pinned, the middle marginal value is free.
inline pwiscore::PerformanceMatrix three_level_matrix() {
  pwiscore::PerformanceMatrix m;
  m.alternatives = {{"a", ""}, {"b", ""}, {"c", ""}};
  m.criteria = {"c1"};
  m.values = {{0.0}, {0.5}, {1.0}};
  return m;
}

// All-ties table: carries no ordering information at all.
inline pwiscore::PWIMatrix neutral_pwi(const pwiscore::PerformanceMatrix& matrix) {
  const int n = matrix.alternative_count();
  pwiscore::PWIMatrix pwi;
  for (const auto& alt : matrix.alternatives) pwi.alternative_ids.push_back(alt.id);
  pwi.p.assign(n, std::vector<double>(n, 0.5));
  for (int i = 0; i < n; ++i) pwi.p[i][i] = 0.0;
  return pwi;
}

}  // namespace fixtures
