#include "pwiscore.h"

#include <cmath>
#include <cstring>
#include <string>

#include "pipeline.hpp"

struct ps_matrix {
  pwiscore::PerformanceMatrix matrix;
};

struct ps_pwi {
  pwiscore::io::PwiArtifact artifact;
};

struct ps_score {
  pwiscore::pipeline::ScoreOutput output;
};

struct ps_enumeration {
  pwiscore::pipeline::EnumerateOutput output;
};

struct ps_dea {
  pwiscore::pipeline::DeaOutput output;
};

namespace {

thread_local std::string g_last_error;

ps_status status_of(pwiscore::ErrorCode code) {
  switch (code) {
    case pwiscore::ErrorCode::InvalidArgument: return PS_ERR_INVALID_ARGUMENT;
    case pwiscore::ErrorCode::Parse: return PS_ERR_PARSE;
    case pwiscore::ErrorCode::Incompatible: return PS_ERR_INCOMPATIBLE;
    case pwiscore::ErrorCode::Solver: return PS_ERR_SOLVER;
    case pwiscore::ErrorCode::Internal: return PS_ERR_INTERNAL;
  }
  return PS_ERR_INTERNAL;
}

template <typename Fn>
ps_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PS_OK;
  } catch (const pwiscore::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PS_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ps_status require(bool condition, const char* message) {
  if (condition) return PS_OK;
  g_last_error = message;
  return PS_ERR_INVALID_ARGUMENT;
}

std::vector<pwiscore::PreferenceStatement> parse_prefs(const char* preferences_json) {
  if (preferences_json == nullptr || *preferences_json == '\0') return {};
  return pwiscore::io::parse_preferences_json(preferences_json);
}

}  // namespace

extern "C" {

const char* ps_version(void) { return "1.0.0"; }

const char* ps_last_error(void) { return g_last_error.c_str(); }

void ps_string_free(char* text) { delete[] text; }

/* ---- matrices --------------------------------------------------------- */

ps_status ps_matrix_parse_csv(const char* csv_text, ps_matrix** out) {
  if (ps_status s = require(csv_text && out, "null argument"); s != PS_OK) return s;
  return guarded([&] {
    auto handle = new ps_matrix{pwiscore::io::parse_matrix_csv(csv_text)};
    *out = handle;
  });
}

ps_status ps_matrix_to_csv(const ps_matrix* matrix, int decimals, char** out_csv) {
  if (ps_status s = require(matrix && out_csv, "null argument"); s != PS_OK) return s;
  return guarded([&] {
    *out_csv = copy_string(pwiscore::io::matrix_to_csv(matrix->matrix, decimals));
  });
}

int ps_matrix_alternative_count(const ps_matrix* matrix) {
  return matrix ? matrix->matrix.alternative_count() : 0;
}

int ps_matrix_criterion_count(const ps_matrix* matrix) {
  return matrix ? matrix->matrix.criterion_count() : 0;
}

ps_status ps_matrix_standardize(const ps_matrix* matrix, ps_matrix** out_normalized,
                                char** out_stats_json) {
  if (ps_status s = require(matrix && out_normalized, "null argument"); s != PS_OK) return s;
  return guarded([&] {
    const pwiscore::StandardizeResult result = pwiscore::standardize(matrix->matrix);
    if (out_stats_json) *out_stats_json = copy_string(pwiscore::io::stats_to_json(result));
    *out_normalized = new ps_matrix{result.normalized};
  });
}

void ps_matrix_free(ps_matrix* matrix) { delete matrix; }

/* ---- pairwise winning indices ----------------------------------------- */

ps_status ps_pwi_compute(const ps_matrix* normalized, long long samples,
                         unsigned long long seed, int threads, ps_pwi** out) {
  if (ps_status s = require(normalized && out, "null argument"); s != PS_OK) return s;
  return guarded([&] {
    auto handle = new ps_pwi;
    handle->artifact.normalized = normalized->matrix;
    handle->artifact.pwi =
        pwiscore::compute_pwi(normalized->matrix, samples, seed, threads);
    *out = handle;
  });
}

ps_status ps_pwi_parse_json(const char* json_text, ps_pwi** out) {
  if (ps_status s = require(json_text && out, "null argument"); s != PS_OK) return s;
  return guarded([&] { *out = new ps_pwi{pwiscore::io::parse_pwi_json(json_text)}; });
}

ps_status ps_pwi_from_percent_csv(const char* csv_text, const ps_matrix* normalized,
                                  ps_pwi** out) {
  if (ps_status s = require(csv_text && normalized && out, "null argument"); s != PS_OK)
    return s;
  return guarded([&] {
    pwiscore::PWIMatrix pwi = pwiscore::io::parse_pwi_percent_csv(csv_text);
    const auto& alts = normalized->matrix.alternatives;
    if (pwi.size() != static_cast<int>(alts.size()))
      pwiscore::fail(pwiscore::ErrorCode::InvalidArgument,
                     "PWI table and matrix disagree on the number of alternatives");
    for (size_t i = 0; i < alts.size(); ++i) {
      if (pwi.alternative_ids[i] != alts[i].id)
        pwiscore::fail(pwiscore::ErrorCode::InvalidArgument,
                       "PWI table and matrix list different alternatives (or a different "
                       "order)");
    }
    *out = new ps_pwi{{normalized->matrix, std::move(pwi)}};
  });
}

ps_status ps_pwi_to_json(const ps_pwi* pwi, char** out_json) {
  if (ps_status s = require(pwi && out_json, "null argument"); s != PS_OK) return s;
  return guarded([&] { *out_json = copy_string(pwiscore::io::pwi_to_json(pwi->artifact)); });
}

ps_status ps_pwi_to_percent_csv(const ps_pwi* pwi, char** out_csv) {
  if (ps_status s = require(pwi && out_csv, "null argument"); s != PS_OK) return s;
  return guarded(
      [&] { *out_csv = copy_string(pwiscore::io::pwi_to_percent_csv(pwi->artifact.pwi)); });
}

int ps_pwi_size(const ps_pwi* pwi) { return pwi ? pwi->artifact.pwi.size() : 0; }

double ps_pwi_value(const ps_pwi* pwi, int row, int col) {
  if (!pwi || row < 0 || col < 0 || row >= pwi->artifact.pwi.size() ||
      col >= pwi->artifact.pwi.size())
    return std::nan("");
  return pwi->artifact.pwi.p[static_cast<size_t>(row)][static_cast<size_t>(col)];
}

void ps_pwi_free(ps_pwi* pwi) { delete pwi; }

/* ---- scoring ------------------------------------------------------------ */

ps_status ps_score_run(const ps_pwi* pwi, const char* preferences_json, double tie_tol,
                       ps_score** out) {
  if (ps_status s = require(pwi && out, "null argument"); s != PS_OK) return s;
  return guarded([&] {
    *out = new ps_score{pwiscore::pipeline::run_score(pwi->artifact,
                                                      parse_prefs(preferences_json), tie_tol)};
  });
}

int ps_score_compatible(const ps_score* score) {
  return score && score->output.lp0.compatible() ? 1 : 0;
}

int ps_score_vacuous(const ps_score* score) {
  return score &&
                 score->output.lp0.status == pwiscore::Lp0Result::Status::VacuouslyCompatible
             ? 1
             : 0;
}

double ps_score_eta(const ps_score* score) {
  return score ? score->output.lp0.eta_star : std::nan("");
}

double ps_score_h_star(const ps_score* score) {
  if (!score) return std::nan("");
  for (const auto& diag : score->output.diagnostics)
    if (diag.kind == pwiscore::DiagnosticResult::Kind::AllContribute && diag.feasible)
      return diag.value;
  return std::nan("");
}

double ps_score_epsilon_star(const ps_score* score) {
  if (!score) return std::nan("");
  for (const auto& diag : score->output.diagnostics)
    if (diag.kind == pwiscore::DiagnosticResult::Kind::AllIncreasing && diag.feasible)
      return diag.value;
  return std::nan("");
}

ps_status ps_score_to_json(const ps_score* score, char** out_json) {
  if (ps_status s = require(score && out_json, "null argument"); s != PS_OK) return s;
  return guarded([&] { *out_json = copy_string(score->output.json); });
}

ps_status ps_score_function_csv(const ps_score* score, char** out_csv) {
  if (ps_status s = require(score && out_csv, "null argument"); s != PS_OK) return s;
  if (score->output.function_csv.empty()) {
    g_last_error = "no value function: the system is incompatible";
    return PS_ERR_INCOMPATIBLE;
  }
  return guarded([&] { *out_csv = copy_string(score->output.function_csv); });
}

void ps_score_free(ps_score* score) { delete score; }

/* ---- enumeration ---------------------------------------------------------- */

ps_status ps_enumerate_run(const ps_pwi* pwi, const char* preferences_json, double delta,
                           double big_m, int cap, int dispersion_count, ps_enumeration** out) {
  if (ps_status s = require(pwi && out, "null argument"); s != PS_OK) return s;
  return guarded([&] {
    *out = new ps_enumeration{pwiscore::pipeline::run_enumerate(
        pwi->artifact, parse_prefs(preferences_json), delta, big_m, cap, dispersion_count)};
  });
}

int ps_enumeration_count(const ps_enumeration* enumeration) {
  return enumeration ? static_cast<int>(enumeration->output.state.functions.size()) : 0;
}

const char* ps_enumeration_stop_reason(const ps_enumeration* enumeration) {
  if (!enumeration) return "";
  switch (enumeration->output.state.stop) {
    case pwiscore::EnumerationState::StopReason::ExclusionInfeasible: return "infeasible";
    case pwiscore::EnumerationState::StopReason::CapReached: return "cap";
    case pwiscore::EnumerationState::StopReason::SolverFailure: return "solver-failure";
  }
  return "";
}

const char* ps_enumeration_label(const ps_enumeration* enumeration, int index) {
  if (!enumeration || index < 0 ||
      index >= static_cast<int>(enumeration->output.state.functions.size()))
    return "";
  return enumeration->output.state.functions[static_cast<size_t>(index)].label.c_str();
}

int ps_enumeration_plot_count(const ps_enumeration* enumeration) {
  return enumeration ? static_cast<int>(enumeration->output.plot_functions.size()) : 0;
}

int ps_enumeration_plot_index(const ps_enumeration* enumeration, int position) {
  if (!enumeration || position < 0 ||
      position >= static_cast<int>(enumeration->output.plot_functions.size()))
    return -1;
  return enumeration->output.plot_functions[static_cast<size_t>(position)];
}

ps_status ps_enumeration_to_json(const ps_enumeration* enumeration, char** out_json) {
  if (ps_status s = require(enumeration && out_json, "null argument"); s != PS_OK) return s;
  return guarded([&] { *out_json = copy_string(enumeration->output.json); });
}

ps_status ps_enumeration_function_csv(const ps_enumeration* enumeration, int index,
                                      char** out_csv) {
  if (ps_status s = require(enumeration && out_csv, "null argument"); s != PS_OK) return s;
  const auto& fns = enumeration->output.state.functions;
  if (index < 0 || index >= static_cast<int>(fns.size())) {
    g_last_error = "function index out of range";
    return PS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out_csv = copy_string(pwiscore::io::function_to_csv(fns[static_cast<size_t>(index)],
                                                         enumeration->output.scales));
  });
}

ps_status ps_enumeration_plot_csv(const ps_enumeration* enumeration, int index,
                                  char** out_csv) {
  if (ps_status s = require(enumeration && out_csv, "null argument"); s != PS_OK) return s;
  const auto& fns = enumeration->output.state.functions;
  if (index < 0 || index >= static_cast<int>(fns.size())) {
    g_last_error = "function index out of range";
    return PS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out_csv = copy_string(pwiscore::io::plot_to_csv(fns[static_cast<size_t>(index)],
                                                     enumeration->output.scales));
  });
}

void ps_enumeration_free(ps_enumeration* enumeration) { delete enumeration; }

/* ---- efficiency ------------------------------------------------------------ */

ps_status ps_dea_run(const ps_matrix* normalized, ps_dea** out) {
  if (ps_status s = require(normalized && out, "null argument"); s != PS_OK) return s;
  return guarded(
      [&] { *out = new ps_dea{pwiscore::pipeline::run_dea(normalized->matrix)}; });
}

int ps_dea_count(const ps_dea* dea) {
  return dea ? static_cast<int>(dea->output.result.alternatives.size()) : 0;
}

int ps_dea_efficient(const ps_dea* dea, int index) {
  if (!dea || index < 0 ||
      index >= static_cast<int>(dea->output.result.alternatives.size()))
    return 0;
  return dea->output.result.alternatives[static_cast<size_t>(index)].efficient ? 1 : 0;
}

double ps_dea_utility(const ps_dea* dea, int index) {
  if (!dea || index < 0 ||
      index >= static_cast<int>(dea->output.result.alternatives.size()))
    return std::nan("");
  return dea->output.result.alternatives[static_cast<size_t>(index)].u_star;
}

ps_status ps_dea_to_json(const ps_dea* dea, char** out_json) {
  if (ps_status s = require(dea && out_json, "null argument"); s != PS_OK) return s;
  return guarded([&] { *out_json = copy_string(dea->output.json); });
}

void ps_dea_free(ps_dea* dea) { delete dea; }

} /* extern "C" */
