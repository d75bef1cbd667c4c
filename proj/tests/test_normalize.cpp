#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "normalize.hpp"

using namespace pwiscore;

TEST_CASE("standardization of the raw case-study matrix") {
  const StandardizeResult r = standardize(fixtures::raw_matrix());

  // Spot values that the published normalized table pins exactly.
  CHECK(std::abs(r.normalized.values[0][0] - 0.6940) < 5e-5);
  CHECK(std::abs(r.normalized.values[6][0] - 0.1793) < 5e-5);
  CHECK(r.stats[0].mean == doctest::Approx(0.0244286).epsilon(1e-4));
  CHECK(r.stats[0].stddev == doctest::Approx(0.013632).epsilon(1e-3));
}

TEST_CASE("normalized columns have mean 0.5 and sample deviation 1/6") {
  const StandardizeResult r = standardize(fixtures::raw_matrix());
  const int n = r.normalized.alternative_count();
  for (int j = 0; j < r.normalized.criterion_count(); ++j) {
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += r.normalized.values[static_cast<size_t>(i)][static_cast<size_t>(j)];
    mean /= n;
    CHECK(mean == doctest::Approx(0.5).epsilon(1e-12));
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = r.normalized.values[static_cast<size_t>(i)][static_cast<size_t>(j)] - mean;
      ss += d * d;
    }
    CHECK(std::sqrt(ss / (n - 1)) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  }
}

TEST_CASE("a value equal to its column mean maps to 0.5") {
  PerformanceMatrix m;
  m.alternatives = {{"a", ""}, {"b", ""}, {"c", ""}};
  m.criteria = {"c1"};
  m.values = {{1.0}, {2.0}, {3.0}};  // mean of column is 2
  const StandardizeResult r = standardize(m);
  CHECK(r.normalized.values[1][0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("constant columns map to 0.5 without erroring") {
  PerformanceMatrix m;
  m.alternatives = {{"a", ""}, {"b", ""}};
  m.criteria = {"c1", "c2"};
  m.values = {{7.0, 1.0}, {7.0, 2.0}};
  const StandardizeResult r = standardize(m);
  CHECK(r.normalized.values[0][0] == 0.5);
  CHECK(r.normalized.values[1][0] == 0.5);
  CHECK(r.stats[0].stddev == 0.0);
}

TEST_CASE("standardization needs at least two alternatives") {
  PerformanceMatrix m;
  m.alternatives = {{"a", ""}};
  m.criteria = {"c1"};
  m.values = {{1.0}};
  CHECK_THROWS_AS(standardize(m), Error);
}

TEST_CASE("standardization is invariant under positive affine column maps") {
  PerformanceMatrix m = fixtures::raw_matrix();
  PerformanceMatrix scaled = m;
  for (auto& row : scaled.values) {
    row[0] = 3.5 * row[0] - 2.0;
    row[3] = 0.25 * row[3] + 10.0;
  }
  const StandardizeResult a = standardize(m);
  const StandardizeResult b = standardize(scaled);
  for (size_t i = 0; i < a.normalized.values.size(); ++i)
    for (size_t j = 0; j < a.normalized.values[i].size(); ++j)
      CHECK(a.normalized.values[i][j] == doctest::Approx(b.normalized.values[i][j]).epsilon(1e-12));
}

// Independent fit of the standardization family 0.5 + (x - mean)/(c * spread),
// c in 2..8 with either deviation convention, scored by the worst absolute
// error against the published normalized table. The committed formula must be
// the unique minimizer. (The published table itself was produced from data
// with more digits than the raw table prints, so no member reproduces it
// exactly; see the acceptance suite for the measured gap.)
TEST_CASE("the committed formula is the best fit of the candidate family") {
  const PerformanceMatrix raw = fixtures::raw_matrix();
  const int n = raw.alternative_count();

  double best_err = 1e9;
  int best_c = -1;
  bool best_sample = false;
  for (int c = 2; c <= 8; ++c) {
    for (const bool sample : {true, false}) {
      double worst = 0.0;
      for (int j = 0; j < raw.criterion_count(); ++j) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += raw.values[static_cast<size_t>(i)][static_cast<size_t>(j)];
        mean /= n;
        double ss = 0.0;
        for (int i = 0; i < n; ++i) {
          const double d = raw.values[static_cast<size_t>(i)][static_cast<size_t>(j)] - mean;
          ss += d * d;
        }
        const double spread = std::sqrt(ss / (sample ? n - 1 : n));
        for (int i = 0; i < n; ++i) {
          const double predicted =
              0.5 + (raw.values[static_cast<size_t>(i)][static_cast<size_t>(j)] - mean) / (c * spread);
          worst = std::max(worst, std::abs(predicted - fixtures::kNormalized[i][j]));
        }
      }
      if (worst < best_err) {
        best_err = worst;
        best_c = c;
        best_sample = sample;
      }
    }
  }
  CHECK(best_c == 6);
  CHECK(best_sample);

  // And the implementation agrees with the winning family member everywhere.
  const StandardizeResult r = standardize(raw);
  for (int j = 0; j < raw.criterion_count(); ++j) {
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += raw.values[static_cast<size_t>(i)][static_cast<size_t>(j)];
    mean /= n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = raw.values[static_cast<size_t>(i)][static_cast<size_t>(j)] - mean;
      ss += d * d;
    }
    const double spread = std::sqrt(ss / (n - 1));
    for (int i = 0; i < n; ++i)
      CHECK(r.normalized.values[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            doctest::Approx(0.5 + (raw.values[static_cast<size_t>(i)][static_cast<size_t>(j)] - mean) /
                                      (6.0 * spread))
                .epsilon(1e-12));
  }
}
