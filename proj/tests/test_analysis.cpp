#include <algorithm>
#include <cmath>
#include <random>

#include "analysis.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace pwiscore;

namespace {

// One-criterion function whose single varying coordinate is at `x`.
ValueFunction line_point(double x, const std::string& label) {
  ValueFunction fn;
  fn.label = label;
  fn.marginals = {{0.0, x, 1.0}};
  return fn;
}

ValueFunction random_vf(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ValueFunction fn;
  fn.marginals = {{u(rng), u(rng), u(rng)}, {u(rng), u(rng)}};
  return fn;
}

}  // namespace

TEST_CASE("distance of a function to itself is zero") {
  const ValueFunction u1 = fixtures::published_function();
  CHECK(euclidean_distance(u1, u1) == 0.0);
}

TEST_CASE("a single differing coordinate is its own distance") {
  ValueFunction a = line_point(0.2, "a");
  ValueFunction b = line_point(0.5, "b");
  CHECK(euclidean_distance(a, b) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("two opposite coordinate swings bound the distance from below") {
  // The published second and third functions differ by 0.5858 on the top
  // breakpoints of both varying criteria; those two coordinates alone give
  // sqrt(2) * 0.5858.
  ValueFunction a = fixtures::published_function();
  ValueFunction b = a;
  a.marginals[2][6] = 0.7747;
  a.marginals[4][6] = 0.1369;
  b.marginals[2][6] = 0.1889;
  b.marginals[4][6] = 0.7227;
  CHECK(euclidean_distance(a, b) >= 0.8284);
}

TEST_CASE("distance rejects mismatched shapes") {
  CHECK_THROWS_AS(euclidean_distance(line_point(0.1, "a"), fixtures::published_function()),
                  Error);
}

TEST_CASE("the metric axioms hold on random functions") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const ValueFunction a = random_vf(rng);
    const ValueFunction b = random_vf(rng);
    const ValueFunction c = random_vf(rng);
    CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
    CHECK(euclidean_distance(a, a) == 0.0);
    CHECK(euclidean_distance(a, c) <=
          euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);
  }
}

TEST_CASE("selection on a line keeps the extremes first") {
  const std::vector<ValueFunction> candidates = {line_point(0.0, "f1"), line_point(0.1, "f2"),
                                                 line_point(1.0, "f3")};
  const DispersedSelection two = select_dispersed(candidates, 2);
  CHECK(two.indices == std::vector<int>{0, 2});
  CHECK(two.labels == std::vector<std::string>{"f1", "f3"});

  const DispersedSelection three = select_dispersed(candidates, 3);
  CHECK(three.indices == std::vector<int>{0, 2, 1});  // the pair, then the filler
}

TEST_CASE("selecting everything returns all candidates") {
  const std::vector<ValueFunction> candidates = {line_point(0.3, "f1"), line_point(0.9, "f2")};
  const DispersedSelection all = select_dispersed(candidates, 2);
  CHECK(all.indices.size() == 2);
}

TEST_CASE("selection bounds are enforced") {
  const std::vector<ValueFunction> candidates = {line_point(0.3, "f1"), line_point(0.9, "f2")};
  CHECK_THROWS_AS(select_dispersed(candidates, 3), Error);
  CHECK_THROWS_AS(select_dispersed(candidates, 0), Error);
  CHECK_THROWS_AS(select_dispersed(candidates, 1), Error);  // a pair seeds the rule
  CHECK(select_dispersed({line_point(0.5, "only")}, 1).indices == std::vector<int>{0});
}

TEST_CASE("the worst-case distance of the picks never increases") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ValueFunction> candidates;
    for (int i = 0; i < 8; ++i) {
      candidates.push_back(random_vf(rng));
      candidates.back().label = "f" + std::to_string(i);
    }
    const DispersedSelection sel = select_dispersed(candidates, 6);
    double previous = std::numeric_limits<double>::infinity();
    for (size_t pick = 2; pick < sel.indices.size(); ++pick) {
      double nearest = std::numeric_limits<double>::infinity();
      for (size_t earlier = 0; earlier < pick; ++earlier)
        nearest = std::min(nearest,
                           sel.distances[static_cast<size_t>(sel.indices[pick])]
                                        [static_cast<size_t>(sel.indices[earlier])]);
      CHECK(nearest <= previous + 1e-12);
      previous = nearest;
    }
  }
}

TEST_CASE("with distinct distances the selected set ignores candidate order") {
  std::mt19937_64 rng(83);
  std::vector<ValueFunction> candidates;
  for (int i = 0; i < 7; ++i) {
    candidates.push_back(random_vf(rng));
    candidates.back().label = "f" + std::to_string(i);
  }
  const DispersedSelection reference = select_dispersed(candidates, 4);
  std::vector<std::string> expected = reference.labels;
  std::sort(expected.begin(), expected.end());

  std::vector<ValueFunction> shuffled = candidates;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const DispersedSelection again = select_dispersed(shuffled, 4);
  std::vector<std::string> got = again.labels;
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("plot data lists breakpoint and value pairs in scale order") {
  const auto matrix = fixtures::normalized_matrix();
  const auto scales = build_scales(matrix);
  const auto data = marginal_plot_data(fixtures::published_function(), scales);
  REQUIRE(data.size() == 5);

  const std::vector<std::pair<double, double>> g3 = {
      {0.337, 0.0},  {0.3522, 0.0},  {0.4013, 0.2885}, {0.4924, 0.3419},
      {0.5357, 0.5318}, {0.5596, 0.5318}, {0.8219, 0.5318}};
  REQUIRE(data[2].size() == g3.size());
  for (size_t k = 0; k < g3.size(); ++k) {
    CHECK(data[2][k].first == doctest::Approx(g3[k].first).epsilon(1e-12));
    CHECK(data[2][k].second == doctest::Approx(g3[k].second).epsilon(1e-12));
  }
  for (const auto& [x, u] : data[0]) CHECK(u == 0.0);  // g1 never contributes
}

TEST_CASE("a degenerate scale yields a single plot point") {
  PerformanceMatrix m;
  m.alternatives = {{"a", ""}, {"b", ""}};
  m.criteria = {"c1", "c2"};
  m.values = {{0.5, 0.0}, {0.5, 1.0}};
  const auto scales = build_scales(m);
  ValueFunction fn;
  fn.marginals = {{0.0}, {0.0, 1.0}};
  const auto data = marginal_plot_data(fn, scales);
  CHECK(data[0].size() == 1);
  CHECK(data[1].size() == 2);
}
