#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "model.hpp"

namespace pwiscore {

using WeightVector = std::vector<double>;

// One weight vector distributed uniformly on the open standard simplex
// (normalized unit-rate exponential draws). A draw with a component that
// rounds to zero is resampled.
WeightVector sample_weights(int criterion_count, std::mt19937_64& rng);

double weighted_sum(std::span<const double> weights, std::span<const double> row);

// Pairwise winning indices p(a,b): frequency of WS(a) > WS(b) over sampled
// weight vectors, ties counted half for each side. Entries are therefore
// multiples of 0.5/samples; the diagonal is 0 and p(a,b)+p(b,a)=1 for a!=b.
struct PWIMatrix {
  std::vector<std::string> alternative_ids;
  std::vector<std::vector<double>> p;
  long long samples = 0;  // 0 when loaded from an external table
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(alternative_ids.size()); }
  void validate() const;
};

// Deterministic for a fixed (seed, samples, matrix) regardless of thread
// count: the sample index space is split into fixed chunks, each with its own
// counter-derived substream, and chunk tallies are merged in chunk order.
// threads <= 0 picks the hardware concurrency.
PWIMatrix compute_pwi(const PerformanceMatrix& normalized, long long samples,
                      std::uint64_t seed, int threads = 0);

}  // namespace pwiscore
