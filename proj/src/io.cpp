#include "io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace pwiscore::io {

namespace {

using nlohmann::json;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty() && current.back() == '\r') current.pop_back();
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (const char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  for (std::string& s : cells) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  }
  return cells;
}

double parse_number(const std::string& cell, int line_no, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ", column " + column +
                               ": invalid number '" + cell + "'");
  return value;
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

json function_json(const ValueFunction& function, const std::vector<CriterionScale>& scales) {
  json levels = json::array();
  json values = json::array();
  json criteria = json::array();
  for (size_t j = 0; j < scales.size(); ++j) {
    criteria.push_back(scales[j].criterion);
    levels.push_back(scales[j].levels);
    values.push_back(function.marginals[j]);
  }
  return json{{"criteria", criteria},
              {"label", function.label},
              {"levels", levels},
              {"values", values}};
}

json diagnostic_json(const DiagnosticResult& diag, const std::vector<CriterionScale>& scales) {
  json out;
  out["feasible"] = diag.feasible;
  const char* key =
      diag.kind == DiagnosticResult::Kind::AllContribute ? "h_star" : "epsilon_star";
  if (diag.feasible) {
    out[key] = diag.value;
  } else {
    out[key] = nullptr;
  }
  out["witness"] = diag.witness ? function_json(*diag.witness, scales) : json(nullptr);
  return out;
}

const char* lp0_status_string(Lp0Result::Status status) {
  switch (status) {
    case Lp0Result::Status::Compatible: return "compatible";
    case Lp0Result::Status::VacuouslyCompatible: return "vacuous";
    case Lp0Result::Status::Incompatible: return "incompatible";
  }
  return "incompatible";
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) fail(ErrorCode::Internal, "number formatting failed");
  return std::string(buf, ptr);
}

std::string format_fixed(double value, int decimals) {
  double v = value;
  double half_ulp = 0.5;
  for (int i = 0; i < decimals; ++i) half_ulp /= 10.0;
  if (std::abs(v) < half_ulp) v = 0.0;  // avoid "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

PerformanceMatrix parse_matrix_csv(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::Parse, "empty input");
  const std::vector<std::string> header = split_cells(lines[0]);
  if (header.empty() || header[0] != "alt_id")
    fail(ErrorCode::Parse, "line 1: header must start with 'alt_id'");
  size_t first_criterion = 1;
  bool has_label = false;
  if (header.size() > 1 && header[1] == "label") {
    has_label = true;
    first_criterion = 2;
  }
  if (header.size() <= first_criterion)
    fail(ErrorCode::Parse, "line 1: no criterion columns");

  PerformanceMatrix matrix;
  for (size_t c = first_criterion; c < header.size(); ++c) {
    if (header[c].empty()) fail(ErrorCode::Parse, "line 1: empty criterion id");
    matrix.criteria.push_back(header[c]);
  }

  for (size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    const int line_no = static_cast<int>(row) + 1;
    const std::vector<std::string> cells = split_cells(lines[row]);
    if (cells.size() != header.size())
      fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(header.size()) + " fields, got " +
                                 std::to_string(cells.size()));
    Alternative alt;
    alt.id = cells[0];
    if (alt.id.empty())
      fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": empty alternative id");
    if (has_label) alt.label = cells[1];
    std::vector<double> values;
    values.reserve(matrix.criteria.size());
    for (size_t c = first_criterion; c < cells.size(); ++c)
      values.push_back(
          parse_number(cells[c], line_no, matrix.criteria[c - first_criterion]));
    matrix.alternatives.push_back(std::move(alt));
    matrix.values.push_back(std::move(values));
  }
  if (matrix.alternatives.empty()) fail(ErrorCode::Parse, "no data rows");
  matrix.validate();
  return matrix;
}

std::string matrix_to_csv(const PerformanceMatrix& matrix, int decimals) {
  bool any_label = false;
  for (const Alternative& alt : matrix.alternatives)
    if (!alt.label.empty()) any_label = true;
  std::string out = "alt_id";
  if (any_label) out += ",label";
  for (const std::string& c : matrix.criteria) out += "," + c;
  out += "\n";
  for (size_t i = 0; i < matrix.alternatives.size(); ++i) {
    out += matrix.alternatives[i].id;
    if (any_label) out += "," + matrix.alternatives[i].label;
    for (const double v : matrix.values[i])
      out += "," + (decimals < 0 ? format_double(v) : format_fixed(v, decimals));
    out += "\n";
  }
  return out;
}

std::string pwi_to_json(const PwiArtifact& artifact) {
  std::string out = "{\n  \"alternatives\": [";
  for (size_t i = 0; i < artifact.normalized.alternatives.size(); ++i) {
    const Alternative& alt = artifact.normalized.alternatives[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"id\": \"" + escape_json(alt.id) + "\", \"label\": \"" +
           escape_json(alt.label) + "\"}";
  }
  out += "\n  ],\n  \"criteria\": [";
  for (size_t j = 0; j < artifact.normalized.criteria.size(); ++j) {
    out += j == 0 ? "" : ", ";
    out += "\"" + escape_json(artifact.normalized.criteria[j]) + "\"";
  }
  out += "],\n  \"normalized\": [";
  for (size_t i = 0; i < artifact.normalized.values.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    [";
    for (size_t j = 0; j < artifact.normalized.values[i].size(); ++j) {
      out += j == 0 ? "" : ", ";
      out += format_double(artifact.normalized.values[i][j]);
    }
    out += "]";
  }
  out += "\n  ],\n  \"p\": [";
  for (size_t a = 0; a < artifact.pwi.p.size(); ++a) {
    out += a == 0 ? "\n" : ",\n";
    out += "    [";
    for (size_t b = 0; b < artifact.pwi.p[a].size(); ++b) {
      out += b == 0 ? "" : ", ";
      out += format_fixed(artifact.pwi.p[a][b], 6);
    }
    out += "]";
  }
  out += "\n  ],\n  \"samples\": " + std::to_string(artifact.pwi.samples);
  out += ",\n  \"seed\": " + std::to_string(artifact.pwi.seed);
  out += "\n}\n";
  return out;
}

PwiArtifact parse_pwi_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid PWI JSON: ") + e.what());
  }
  try {
    PwiArtifact artifact;
    for (const auto& alt : doc.at("alternatives"))
      artifact.normalized.alternatives.push_back(
          {alt.at("id").get<std::string>(), alt.value("label", std::string())});
    for (const auto& c : doc.at("criteria"))
      artifact.normalized.criteria.push_back(c.get<std::string>());
    for (const auto& row : doc.at("normalized"))
      artifact.normalized.values.push_back(row.get<std::vector<double>>());
    for (const auto& row : doc.at("p"))
      artifact.pwi.p.push_back(row.get<std::vector<double>>());
    artifact.pwi.samples = doc.at("samples").get<long long>();
    artifact.pwi.seed = doc.at("seed").get<std::uint64_t>();
    for (const Alternative& alt : artifact.normalized.alternatives)
      artifact.pwi.alternative_ids.push_back(alt.id);
    artifact.normalized.validate();
    artifact.pwi.validate();
    return artifact;
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed PWI JSON: ") + e.what());
  }
}

std::string pwi_to_percent_csv(const PWIMatrix& pwi) {
  std::string out = "p";
  for (const std::string& id : pwi.alternative_ids) out += "," + id;
  out += "\n";
  for (size_t a = 0; a < pwi.p.size(); ++a) {
    out += pwi.alternative_ids[a];
    for (size_t b = 0; b < pwi.p[a].size(); ++b)
      out += "," + format_fixed(100.0 * pwi.p[a][b], 4);
    out += "\n";
  }
  return out;
}

PWIMatrix parse_pwi_percent_csv(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::Parse, "empty input");
  const std::vector<std::string> header = split_cells(lines[0]);
  if (header.size() < 2) fail(ErrorCode::Parse, "line 1: no alternative columns");
  PWIMatrix pwi;
  for (size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty()) fail(ErrorCode::Parse, "line 1: empty alternative id");
    pwi.alternative_ids.push_back(header[c]);
  }
  const size_t n = pwi.alternative_ids.size();
  size_t data_row = 0;
  for (size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    const int line_no = static_cast<int>(row) + 1;
    if (data_row >= n)
      fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": too many rows");
    const std::vector<std::string> cells = split_cells(lines[row]);
    if (cells.size() != n + 1)
      fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(n + 1) + " fields, got " +
                                 std::to_string(cells.size()));
    if (cells[0] != pwi.alternative_ids[data_row])
      fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": row id '" + cells[0] +
                                 "' does not match column order");
    std::vector<double> values;
    for (size_t c = 1; c < cells.size(); ++c)
      values.push_back(parse_number(cells[c], line_no, pwi.alternative_ids[c - 1]) / 100.0);
    if (std::abs(values[data_row]) > 1e-9)
      fail(ErrorCode::Parse,
           "line " + std::to_string(line_no) + ": nonzero diagonal entry");
    values[data_row] = 0.0;
    pwi.p.push_back(std::move(values));
    ++data_row;
  }
  if (data_row != n)
    fail(ErrorCode::Parse, "expected " + std::to_string(n) + " data rows, got " +
                               std::to_string(data_row));
  pwi.samples = 0;  // external table: sample count unknown
  pwi.seed = 0;
  pwi.validate();
  return pwi;
}

std::vector<PreferenceStatement> parse_preferences_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid preferences JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("preferences"))
      fail(ErrorCode::Parse, "preferences JSON must be an array or {\"preferences\": [...]}");
    list = &doc.at("preferences");
  }
  if (!list->is_array())
    fail(ErrorCode::Parse, "preferences JSON must be an array or {\"preferences\": [...]}");
  std::vector<PreferenceStatement> prefs;
  for (const auto& item : *list) {
    try {
      PreferenceStatement pref;
      const std::string kind = item.at("kind").get<std::string>();
      if (kind == "strict") {
        pref.kind = PreferenceKind::Strict;
      } else if (kind == "weak") {
        pref.kind = PreferenceKind::Weak;
      } else if (kind == "indifference") {
        pref.kind = PreferenceKind::Indifference;
      } else {
        fail(ErrorCode::Parse, "unknown preference kind '" + kind + "'");
      }
      pref.a = item.at("a").get<std::string>();
      pref.b = item.at("b").get<std::string>();
      if (pref.a == pref.b)
        fail(ErrorCode::Parse, "preference compares '" + pref.a + "' with itself");
      prefs.push_back(std::move(pref));
    } catch (const json::exception& e) {
      fail(ErrorCode::Parse, std::string("malformed preference entry: ") + e.what());
    }
  }
  return prefs;
}

std::string stats_to_json(const StandardizeResult& result) {
  json alternatives = json::array();
  for (const Alternative& alt : result.normalized.alternatives)
    alternatives.push_back({{"id", alt.id}, {"label", alt.label}});
  json stats = json::array();
  for (const ColumnStats& s : result.stats)
    stats.push_back({{"criterion", s.criterion}, {"mean", s.mean}, {"stddev", s.stddev}});
  const json doc{{"alternatives", alternatives},
                 {"criteria", result.normalized.criteria},
                 {"normalized", result.normalized.values},
                 {"stats", stats}};
  return doc.dump(2) + "\n";
}

std::string function_to_csv(const ValueFunction& function,
                            const std::vector<CriterionScale>& scales) {
  if (function.marginals.size() != scales.size())
    fail(ErrorCode::InvalidArgument, "value function and scales have different criterion counts");
  size_t max_levels = 0;
  for (const CriterionScale& s : scales) max_levels = std::max(max_levels, s.levels.size());
  std::string out = "k";
  for (const CriterionScale& s : scales) out += ",x_" + s.criterion + ",u_" + s.criterion;
  out += "\n";
  for (size_t k = 0; k < max_levels; ++k) {
    out += std::to_string(k);
    for (size_t j = 0; j < scales.size(); ++j) {
      if (k < scales[j].levels.size()) {
        out += "," + format_double(scales[j].levels[k]) + "," +
               format_double(function.marginals[j][k]);
      } else {
        out += ",,";
      }
    }
    out += "\n";
  }
  return out;
}

std::string plot_to_csv(const ValueFunction& function,
                        const std::vector<CriterionScale>& scales) {
  const auto data = marginal_plot_data(function, scales);
  std::string out = "criterion,x,u\n";
  for (size_t j = 0; j < data.size(); ++j)
    for (const auto& [x, u] : data[j])
      out += scales[j].criterion + "," + format_double(x) + "," + format_double(u) + "\n";
  return out;
}

std::string function_to_json(const ValueFunction& function,
                             const std::vector<CriterionScale>& scales) {
  return function_json(function, scales).dump(2) + "\n";
}

std::string score_to_json(const ScoreArtifacts& artifacts,
                          const std::vector<CriterionScale>& scales) {
  json doc;
  doc["status"] = lp0_status_string(artifacts.lp0.status);
  doc["eta_star"] = std::isfinite(artifacts.lp0.eta_star) && artifacts.lp0.compatible()
                        ? json(artifacts.lp0.eta_star)
                        : json(nullptr);
  doc["function"] = artifacts.lp0.function
                        ? function_json(*artifacts.lp0.function, scales)
                        : json(nullptr);
  if (artifacts.lp0.report) {
    const IncompatibilityReport& r = *artifacts.lp0.report;
    doc["incompatibility"] = {
        {"system_feasible", r.system_feasible},
        {"eta_star", r.eta_star ? json(*r.eta_star) : json(nullptr)},
        {"pwi_constraints", r.pwi_constraints},
        {"preference_constraints", r.preference_constraints},
        {"message", r.message}};
  } else {
    doc["incompatibility"] = nullptr;
  }
  json diagnostics = json(nullptr);
  if (!artifacts.diagnostics.empty()) {
    diagnostics = json::object();
    for (const DiagnosticResult& diag : artifacts.diagnostics) {
      const char* key = diag.kind == DiagnosticResult::Kind::AllContribute
                            ? "all_contribute"
                            : "all_increasing";
      diagnostics[key] = diagnostic_json(diag, scales);
    }
  }
  doc["diagnostics"] = diagnostics;
  if (!artifacts.utilities.empty()) {
    json utilities = json::object();
    for (const auto& [id, u] : artifacts.utilities) utilities[id] = u;
    doc["utilities"] = utilities;
    doc["ranking"] = artifacts.ranking.groups;
  } else {
    doc["utilities"] = nullptr;
    doc["ranking"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string enumeration_to_json(const EnumerationState& state,
                                const DispersedSelection* dispersed,
                                const std::vector<CriterionScale>& scales) {
  json doc;
  doc["eta_star"] = std::isfinite(state.eta_star) ? json(state.eta_star) : json(nullptr);
  doc["delta"] = state.delta;
  doc["big_m"] = state.big_m;
  doc["cap"] = state.cap;
  switch (state.stop) {
    case EnumerationState::StopReason::ExclusionInfeasible:
      doc["stop_reason"] = "infeasible";
      break;
    case EnumerationState::StopReason::CapReached:
      doc["stop_reason"] = "cap";
      break;
    case EnumerationState::StopReason::SolverFailure:
      doc["stop_reason"] = "solver-failure";
      break;
  }
  doc["failure"] = state.failure.empty() ? json(nullptr) : json(state.failure);
  doc["objective_values"] = state.objective_values;
  json functions = json::array();
  for (const ValueFunction& fn : state.functions) functions.push_back(function_json(fn, scales));
  doc["functions"] = functions;
  if (dispersed) {
    // Indices and the distance matrix refer to the candidate list: every
    // function after the first one, in enumeration order.
    json candidates = json::array();
    for (size_t i = 1; i < state.functions.size(); ++i)
      candidates.push_back(state.functions[i].label);
    doc["dispersed"] = {{"candidates", candidates},
                        {"indices", dispersed->indices},
                        {"labels", dispersed->labels},
                        {"distances", dispersed->distances}};
  } else {
    doc["dispersed"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string dea_to_json(const DeaResult& result, const std::vector<CriterionScale>& scales) {
  json entries = json::array();
  for (const DeaAlternative& alt : result.alternatives) {
    json entry;
    entry["id"] = alt.id;
    if (alt.error.empty()) {
      entry["u_star"] = alt.u_star;
      entry["efficient"] = alt.efficient;
      entry["error"] = nullptr;
    } else {
      entry["u_star"] = nullptr;
      entry["efficient"] = false;
      entry["error"] = alt.error;
    }
    entry["witness"] = alt.witness ? function_json(*alt.witness, scales) : json(nullptr);
    entries.push_back(std::move(entry));
  }
  const json doc{{"results", entries}, {"vacuous", result.vacuous}};
  return doc.dump(2) + "\n";
}

}  // namespace pwiscore::io
