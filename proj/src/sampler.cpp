#include "sampler.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace pwiscore {

namespace {

constexpr long long kChunkSize = 8192;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (chunk + 1));
  std::uint64_t s = splitmix64(state);
  return s ^ splitmix64(state);
}

// Canonical double in [0,1) from the top 53 bits, portable across platforms.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

WeightVector sample_weights(int criterion_count, std::mt19937_64& rng) {
  if (criterion_count < 1)
    fail(ErrorCode::InvalidArgument, "weight sampling needs at least one criterion");
  WeightVector weights(criterion_count);
  for (;;) {
    double sum = 0.0;
    bool degenerate = false;
    for (int j = 0; j < criterion_count; ++j) {
      const double e = -std::log(1.0 - uniform01(rng));
      if (e <= 0.0) {
        degenerate = true;
        break;
      }
      weights[j] = e;
      sum += e;
    }
    if (degenerate) continue;
    for (int j = 0; j < criterion_count; ++j) weights[j] /= sum;
    bool boundary = false;
    for (double w : weights) {
      if (w <= 0.0) boundary = true;
    }
    if (!boundary) return weights;
  }
}

double weighted_sum(std::span<const double> weights, std::span<const double> row) {
  if (weights.size() != row.size())
    fail(ErrorCode::InvalidArgument, "weight vector and row have different lengths");
  double total = 0.0;
  for (size_t j = 0; j < weights.size(); ++j) total += weights[j] * row[j];
  return total;
}

void PWIMatrix::validate() const {
  const int n = size();
  if (static_cast<int>(p.size()) != n)
    fail(ErrorCode::InvalidArgument, "PWI matrix is not square");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(p[a].size()) != n)
      fail(ErrorCode::InvalidArgument, "PWI matrix is not square");
    if (p[a][a] != 0.0) fail(ErrorCode::InvalidArgument, "PWI diagonal must be 0");
    for (int b = 0; b < n; ++b) {
      if (p[a][b] < 0.0 || p[a][b] > 1.0)
        fail(ErrorCode::InvalidArgument, "PWI entry outside [0,1]");
      if (a != b && std::abs(p[a][b] + p[b][a] - 1.0) > 1e-4)
        fail(ErrorCode::InvalidArgument, "PWI reciprocity p(a,b)+p(b,a)=1 violated");
    }
  }
}

PWIMatrix compute_pwi(const PerformanceMatrix& normalized, long long samples,
                      std::uint64_t seed, int threads) {
  normalized.validate();
  if (samples < 1) fail(ErrorCode::InvalidArgument, "sample count must be >= 1");
  const int n = normalized.alternative_count();
  const int m = normalized.criterion_count();
  const long long chunks = (samples + kChunkSize - 1) / kChunkSize;

  // Win tallies in half-units per chunk: a strict win counts 2, a tie 1.
  std::vector<std::vector<std::uint64_t>> tallies(
      static_cast<size_t>(chunks), std::vector<std::uint64_t>(static_cast<size_t>(n) * n, 0));

  auto run_chunk = [&](long long chunk) {
    std::mt19937_64 rng(chunk_seed(seed, static_cast<std::uint64_t>(chunk)));
    auto& tally = tallies[static_cast<size_t>(chunk)];
    const long long begin = chunk * kChunkSize;
    const long long end = std::min(samples, begin + kChunkSize);
    std::vector<double> ws(n);
    for (long long s = begin; s < end; ++s) {
      const WeightVector w = sample_weights(m, rng);
      for (int a = 0; a < n; ++a) ws[a] = weighted_sum(w, normalized.values[a]);
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (ws[a] > ws[b]) {
            tally[static_cast<size_t>(a) * n + b] += 2;
          } else if (ws[b] > ws[a]) {
            tally[static_cast<size_t>(b) * n + a] += 2;
          } else {
            tally[static_cast<size_t>(a) * n + b] += 1;
            tally[static_cast<size_t>(b) * n + a] += 1;
          }
        }
      }
    }
  };

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = static_cast<int>(std::min<long long>(workers, chunks));
  if (workers == 1) {
    for (long long c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        for (;;) {
          const long long c = next.fetch_add(1);
          if (c >= chunks) return;
          run_chunk(c);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<std::uint64_t> total(static_cast<size_t>(n) * n, 0);
  for (long long c = 0; c < chunks; ++c) {
    for (size_t i = 0; i < total.size(); ++i) total[i] += tallies[static_cast<size_t>(c)][i];
  }

  PWIMatrix pwi;
  pwi.samples = samples;
  pwi.seed = seed;
  for (const auto& alt : normalized.alternatives) pwi.alternative_ids.push_back(alt.id);
  pwi.p.assign(n, std::vector<double>(n, 0.0));
  const double denom = 2.0 * static_cast<double>(samples);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // The winning side is computed from its tally, the losing side as the
      // complement: with the larger share in [0.5, 1] the subtraction is
      // exact, so reciprocity holds to the last bit.
      const std::uint64_t ab = total[static_cast<size_t>(a) * n + b];
      const std::uint64_t ba = total[static_cast<size_t>(b) * n + a];
      if (ab >= ba) {
        pwi.p[a][b] = static_cast<double>(ab) / denom;
        pwi.p[b][a] = 1.0 - pwi.p[a][b];
      } else {
        pwi.p[b][a] = static_cast<double>(ba) / denom;
        pwi.p[a][b] = 1.0 - pwi.p[b][a];
      }
    }
  }
  return pwi;
}

}  // namespace pwiscore
