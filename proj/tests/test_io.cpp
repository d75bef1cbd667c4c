#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "io.hpp"
#include "json.hpp"
#include "pipeline.hpp"

using namespace pwiscore;

TEST_CASE("matrix CSV round trip preserves every value") {
  const PerformanceMatrix m = fixtures::raw_matrix();
  const std::string csv = io::matrix_to_csv(m, -1);
  const PerformanceMatrix back = io::parse_matrix_csv(csv);
  REQUIRE(back.alternative_count() == m.alternative_count());
  CHECK(back.values == m.values);
  CHECK(back.criteria == m.criteria);
  for (int i = 0; i < m.alternative_count(); ++i) {
    CHECK(back.alternatives[static_cast<size_t>(i)].id == m.alternatives[static_cast<size_t>(i)].id);
    CHECK(back.alternatives[static_cast<size_t>(i)].label == m.alternatives[static_cast<size_t>(i)].label);
  }
}

TEST_CASE("matrices without labels omit the label column") {
  PerformanceMatrix m;
  m.alternatives = {{"a", ""}, {"b", ""}};
  m.criteria = {"c1"};
  m.values = {{1.5}, {2.5}};
  const std::string csv = io::matrix_to_csv(m, -1);
  CHECK(csv.find("label") == std::string::npos);
  CHECK(io::parse_matrix_csv(csv).values == m.values);
}

TEST_CASE("fixed-decimal output rounds to the requested precision") {
  PerformanceMatrix m;
  m.alternatives = {{"a", ""}};
  m.criteria = {"c1", "c2"};
  m.values = {{0.69404224, -0.00004}};
  const std::string csv = io::matrix_to_csv(m, 4);
  CHECK(csv.find("0.6940") != std::string::npos);
  CHECK(csv.find("-0.0000") == std::string::npos);  // negative zero is normalized
}

TEST_CASE("matrix parse errors name the offending cell") {
  CHECK_THROWS_WITH_AS(io::parse_matrix_csv("alt_id,g1\na1,abc\n"),
                       doctest::Contains("line 2, column g1"), Error);
  CHECK_THROWS_WITH_AS(io::parse_matrix_csv("alt_id,g1\n"), doctest::Contains("no data rows"),
                       Error);
  CHECK_THROWS_WITH_AS(io::parse_matrix_csv("id,g1\na1,1\n"),
                       doctest::Contains("alt_id"), Error);
  CHECK_THROWS_WITH_AS(io::parse_matrix_csv("alt_id,g1\na1,1,2\n"),
                       doctest::Contains("expected 2 fields"), Error);
  CHECK_THROWS_AS(io::parse_matrix_csv("alt_id,g1\na1,inf\n"), Error);
}

TEST_CASE("the winning-indices JSON artifact round-trips") {
  io::PwiArtifact artifact;
  artifact.normalized = fixtures::normalized_matrix();
  artifact.pwi = compute_pwi(artifact.normalized, 2000, 7);
  const std::string json = io::pwi_to_json(artifact);
  const io::PwiArtifact back = io::parse_pwi_json(json);
  CHECK(back.normalized.values == artifact.normalized.values);
  CHECK(back.pwi.samples == artifact.pwi.samples);
  CHECK(back.pwi.seed == artifact.pwi.seed);
  // p values are serialized at six decimals.
  for (int a = 0; a < artifact.pwi.size(); ++a)
    for (int b = 0; b < artifact.pwi.size(); ++b)
      CHECK(std::abs(back.pwi.p[static_cast<size_t>(a)][static_cast<size_t>(b)] -
                     artifact.pwi.p[static_cast<size_t>(a)][static_cast<size_t>(b)]) <= 5e-7);
  CHECK_THROWS_AS(io::parse_pwi_json("{"), Error);
  CHECK_THROWS_AS(io::parse_pwi_json("{\"alternatives\": []}"), Error);
}

TEST_CASE("the percent table round-trips the published values exactly") {
  const PWIMatrix pwi = fixtures::published_pwi();
  const std::string csv = io::pwi_to_percent_csv(pwi);
  const PWIMatrix back = io::parse_pwi_percent_csv(csv);
  for (int a = 0; a < pwi.size(); ++a)
    for (int b = 0; b < pwi.size(); ++b)
      CHECK(std::abs(back.p[static_cast<size_t>(a)][static_cast<size_t>(b)] -
                     pwi.p[static_cast<size_t>(a)][static_cast<size_t>(b)]) < 1e-9);
}

TEST_CASE("the percent table parser validates its shape") {
  CHECK_THROWS_AS(io::parse_pwi_percent_csv("p,a,b\na,0,60\n"), Error);  // missing row
  CHECK_THROWS_AS(io::parse_pwi_percent_csv("p,a,b\nb,0,60\na,40,0\n"), Error);  // order
  CHECK_THROWS_AS(io::parse_pwi_percent_csv("p,a,b\na,5,60\nb,40,0\n"), Error);  // diagonal
  CHECK_THROWS_AS(io::parse_pwi_percent_csv("p,a,b\na,0,60\nb,70,0\n"), Error);  // reciprocity
}

TEST_CASE("preferences parse from both accepted JSON shapes") {
  const auto bare = io::parse_preferences_json(
      R"([{"kind":"strict","a":"a1","b":"a2"},{"kind":"indifference","a":"a3","b":"a4"}])");
  REQUIRE(bare.size() == 2);
  CHECK(bare[0].kind == PreferenceKind::Strict);
  CHECK(bare[1].kind == PreferenceKind::Indifference);

  const auto wrapped =
      io::parse_preferences_json(R"({"preferences":[{"kind":"weak","a":"x","b":"y"}]})");
  REQUIRE(wrapped.size() == 1);
  CHECK(wrapped[0].kind == PreferenceKind::Weak);

  CHECK_THROWS_AS(io::parse_preferences_json(R"([{"kind":"sortof","a":"x","b":"y"}])"), Error);
  CHECK_THROWS_AS(io::parse_preferences_json(R"([{"kind":"weak","a":"x","b":"x"}])"), Error);
  CHECK_THROWS_AS(io::parse_preferences_json("not json"), Error);
}

TEST_CASE("the breakpoint table mirrors the published layout") {
  const auto scales = build_scales(fixtures::normalized_matrix());
  const std::string csv = io::function_to_csv(fixtures::published_function(), scales);
  CHECK(csv.rfind("k,x_g1,u_g1,x_g2,u_g2,x_g3,u_g3,x_g4,u_g4,x_g5,u_g5\n", 0) == 0);
  CHECK(csv.find("\n0,0.1793,0,") != std::string::npos);
  CHECK(csv.find("0.5318") != std::string::npos);
  CHECK(csv.find("0.3799") != std::string::npos);
}

TEST_CASE("plot CSV lists criterion, breakpoint and marginal value") {
  const auto scales = build_scales(fixtures::normalized_matrix());
  const std::string csv = io::plot_to_csv(fixtures::published_function(), scales);
  CHECK(csv.rfind("criterion,x,u\n", 0) == 0);
  CHECK(csv.find("g3,0.4013,0.2885\n") != std::string::npos);
  CHECK(csv.find("g5,0.8487,0.3799\n") != std::string::npos);
}

TEST_CASE("the score document carries the full outcome") {
  io::PwiArtifact artifact{fixtures::normalized_matrix(), fixtures::published_pwi()};
  const auto out = pipeline::run_score(artifact, {}, 1e-9);
  const nlohmann::json doc = nlohmann::json::parse(out.json);
  CHECK(doc.at("status") == "compatible");
  CHECK(std::abs(doc.at("eta_star").get<double>() - fixtures::kEtaStar) < 0.005);
  CHECK(doc.at("diagnostics").at("all_contribute").at("feasible") == true);
  CHECK(std::abs(doc.at("diagnostics").at("all_contribute").at("h_star").get<double>()) < 1e-6);
  CHECK(doc.at("utilities").size() == 7);
  CHECK(doc.at("ranking").at(0).at(0) == "a7");
  CHECK(doc.at("function").at("label") == "U1");
  CHECK(doc.at("incompatibility").is_null());
}

TEST_CASE("an incompatible score document explains itself") {
  PerformanceMatrix m;
  m.alternatives = {{"a", ""}, {"b", ""}};
  m.criteria = {"c1", "c2"};
  m.values = {{1.0, 0.0}, {0.0, 1.0}};
  io::PwiArtifact artifact{m, fixtures::neutral_pwi(m)};
  const auto out = pipeline::run_score(
      artifact, {{PreferenceKind::Strict, "a", "b"}, {PreferenceKind::Strict, "b", "a"}}, 1e-9);
  const nlohmann::json doc = nlohmann::json::parse(out.json);
  CHECK(doc.at("status") == "incompatible");
  CHECK(doc.at("eta_star").is_null());
  CHECK(doc.at("function").is_null());
  CHECK(doc.at("incompatibility").at("preference_constraints") == 2);
  CHECK(out.function_csv.empty());
}

TEST_CASE("the enumeration document lists functions and the dispersed picks") {
  io::PwiArtifact artifact{fixtures::three_level_matrix(),
                           fixtures::neutral_pwi(fixtures::three_level_matrix())};
  const auto out = pipeline::run_enumerate(artifact, {}, 0.4, 10.0, 10, 5);
  const nlohmann::json doc = nlohmann::json::parse(out.json);
  CHECK(doc.at("stop_reason") == "infeasible");
  CHECK(doc.at("eta_star").is_null());  // vacuously compatible base
  CHECK(doc.at("functions").size() == 3);
  CHECK(doc.at("functions").at(0).at("label") == "U1");
  CHECK(doc.at("dispersed").at("labels").size() == 2);
  CHECK(out.plot_functions.size() == 3);  // U1 + both extra functions
}

TEST_CASE("the efficiency document flags every fund") {
  const auto out = pipeline::run_dea(fixtures::normalized_matrix());
  const nlohmann::json doc = nlohmann::json::parse(out.json);
  CHECK(doc.at("vacuous") == false);
  REQUIRE(doc.at("results").size() == 7);
  for (const auto& entry : doc.at("results")) {
    CHECK(entry.at("efficient") == true);
    CHECK(std::abs(entry.at("u_star").get<double>() - 1.0) < 1e-6);
  }
}

TEST_CASE("shortest round-trip formatting is exact") {
  for (const double v : {0.1793, 2.051282051282051, 1.0 / 3.0, -0.00004, 123456.789}) {
    const std::string s = io::format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(io::format_double(0.0) == "0");
  CHECK(io::format_fixed(0.641430, 4) == "0.6414");
  CHECK(io::format_fixed(-1e-9, 4) == "0.0000");
}
