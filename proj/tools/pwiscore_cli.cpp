// Command-line pipeline driver over the pwiscore C API.
//
// Exit codes: 0 success, 2 input error, 3 incompatibility, 4 solver failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pwiscore.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitInput = 2;
constexpr int kExitIncompatible = 3;
constexpr int kExitSolver = 4;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

int exit_code_of(ps_status status) {
  switch (status) {
    case PS_OK: return 0;
    case PS_ERR_PARSE: return kExitInput;
    case PS_ERR_INVALID_ARGUMENT: return kExitInput;
    case PS_ERR_INCOMPATIBLE: return kExitIncompatible;
    case PS_ERR_SOLVER: return kExitSolver;
    case PS_ERR_INTERNAL: return kExitSolver;
  }
  return kExitSolver;
}

void check(ps_status status) {
  if (status != PS_OK) die(exit_code_of(status), ps_last_error());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitInput, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Write-to-temp then rename, so failures never leave partial artifacts.
void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path target = dir / name;
  const fs::path tmp = dir / ("." + name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die(kExitInput, "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.good()) die(kExitInput, "failed writing '" + tmp.string() + "'");
  }
  fs::rename(tmp, target, ec);
  if (ec) die(kExitInput, "cannot rename into '" + target.string() + "'");
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { ps_string_free(text); }
  std::string str() const { return text ? std::string(text) : std::string(); }
};

using MatrixHandle = std::unique_ptr<ps_matrix, decltype(&ps_matrix_free)>;
using PwiHandle = std::unique_ptr<ps_pwi, decltype(&ps_pwi_free)>;

MatrixHandle load_matrix(const fs::path& path) {
  const std::string text = read_file(path);
  ps_matrix* matrix = nullptr;
  check(ps_matrix_parse_csv(text.c_str(), &matrix));
  return MatrixHandle(matrix, &ps_matrix_free);
}

// The winning-indices input is either the self-contained JSON artifact or a
// percent CSV table paired with the normalized matrix it refers to.
PwiHandle load_pwi(const fs::path& input, const std::string& matrix_csv_path) {
  const std::string text = read_file(input);
  ps_pwi* pwi = nullptr;
  if (input.extension() == ".json") {
    check(ps_pwi_parse_json(text.c_str(), &pwi));
  } else {
    if (matrix_csv_path.empty())
      die(kExitInput, "a percent CSV table needs --matrix <normalized.csv>");
    MatrixHandle matrix = load_matrix(matrix_csv_path);
    check(ps_pwi_from_percent_csv(text.c_str(), matrix.get(), &pwi));
  }
  return PwiHandle(pwi, &ps_pwi_free);
}

std::string load_prefs(const std::string& path) {
  return path.empty() ? std::string() : read_file(path);
}

std::vector<double> parse_sweep(const std::string& arg) {
  std::vector<double> deltas;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      deltas.push_back(std::stod(item));
    } catch (const std::exception&) {
      die(kExitInput, "invalid delta '" + item + "' in --delta-sweep");
    }
  }
  if (deltas.empty()) die(kExitInput, "--delta-sweep needs at least one delta");
  return deltas;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pwiscore: additive value functions from pairwise winning indices"};
  app.require_subcommand(1);
  app.fallthrough();  // --out-dir may come before or after the subcommand

  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "Directory for output artifacts")->capture_default_str();

  // normalize
  auto* cmd_normalize = app.add_subcommand(
      "normalize", "Standardize a raw performance matrix onto the common scale");
  std::string normalize_input;
  cmd_normalize->add_option("input", normalize_input, "Raw matrix CSV")->required();

  // pwi
  auto* cmd_pwi = app.add_subcommand(
      "pwi", "Estimate pairwise winning indices by weight sampling");
  std::string pwi_input;
  long long samples = 100000;
  unsigned long long seed = 42;
  cmd_pwi->add_option("input", pwi_input, "Normalized matrix CSV")->required();
  cmd_pwi->add_option("--samples", samples, "Weight vectors to sample")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_pwi->add_option("--seed", seed, "RNG seed")->capture_default_str();

  // score
  auto* cmd_score = app.add_subcommand(
      "score", "Synthesize a compatible value function, diagnose it, rank alternatives");
  std::string score_input, score_matrix, score_prefs;
  double tie_tol = 1e-9;
  cmd_score->add_option("input", score_input, "PWI artifact (.json) or percent table (.csv)")
      ->required();
  cmd_score->add_option("--matrix", score_matrix, "Normalized matrix CSV (with a CSV table)");
  cmd_score->add_option("--prefs", score_prefs, "Preference statements JSON");
  cmd_score->add_option("--tie-tol", tie_tol, "Utility tie tolerance for ranking")
      ->capture_default_str();

  // enumerate
  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "Enumerate delta-distinct compatible value functions");
  std::string enum_input, enum_matrix, enum_prefs, sweep_arg;
  double delta = 0.05, big_m = 10.0;
  int cap = 100, dispersion = 5;
  cmd_enumerate->add_option("input", enum_input, "PWI artifact (.json) or percent table (.csv)")
      ->required();
  cmd_enumerate->add_option("--matrix", enum_matrix, "Normalized matrix CSV (with a CSV table)");
  cmd_enumerate->add_option("--prefs", enum_prefs, "Preference statements JSON");
  cmd_enumerate->add_option("--delta", delta, "Minimum coordinate separation")
      ->capture_default_str();
  cmd_enumerate->add_option("--big-m", big_m, "Big-M constant (at least 1 + delta)")
      ->capture_default_str();
  cmd_enumerate->add_option("--cap", cap, "Maximum number of functions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_enumerate->add_option("--dispersion", dispersion,
                            "How many dispersed functions to select for plotting")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_enumerate->add_option("--delta-sweep", sweep_arg,
                            "Comma-separated deltas; reports the function count per delta");

  // dea
  auto* cmd_dea = app.add_subcommand(
      "dea", "Best-case efficiency of every alternative");
  std::string dea_input;
  cmd_dea->add_option("input", dea_input, "Normalized matrix CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    const fs::path out(out_dir);

    if (cmd_normalize->parsed()) {
      MatrixHandle raw = load_matrix(normalize_input);
      ps_matrix* normalized_raw = nullptr;
      OwnedString stats;
      check(ps_matrix_standardize(raw.get(), &normalized_raw, &stats.text));
      MatrixHandle normalized(normalized_raw, &ps_matrix_free);
      OwnedString csv;
      check(ps_matrix_to_csv(normalized.get(), 4, &csv.text));
      write_file(out, "normalized.csv", csv.str());
      write_file(out, "normalize_stats.json", stats.str());
      std::cout << "normalized " << ps_matrix_alternative_count(normalized.get())
                << " alternatives on " << ps_matrix_criterion_count(normalized.get())
                << " criteria\n";
    }

    if (cmd_pwi->parsed()) {
      MatrixHandle normalized = load_matrix(pwi_input);
      ps_pwi* pwi_raw = nullptr;
      check(ps_pwi_compute(normalized.get(), samples, seed, 0, &pwi_raw));
      PwiHandle pwi(pwi_raw, &ps_pwi_free);
      OwnedString json, csv;
      check(ps_pwi_to_json(pwi.get(), &json.text));
      check(ps_pwi_to_percent_csv(pwi.get(), &csv.text));
      write_file(out, "pwi.json", json.str());
      write_file(out, "pwi_percent.csv", csv.str());
      std::cout << "estimated winning indices for " << ps_pwi_size(pwi.get())
                << " alternatives from " << samples << " samples (seed " << seed << ")\n";
    }

    if (cmd_score->parsed()) {
      PwiHandle pwi = load_pwi(score_input, score_matrix);
      const std::string prefs = load_prefs(score_prefs);
      ps_score* score_raw = nullptr;
      check(ps_score_run(pwi.get(), prefs.empty() ? nullptr : prefs.c_str(), tie_tol,
                         &score_raw));
      std::unique_ptr<ps_score, decltype(&ps_score_free)> score(score_raw, &ps_score_free);
      OwnedString json;
      check(ps_score_to_json(score.get(), &json.text));
      write_file(out, "score.json", json.str());
      if (!ps_score_compatible(score.get())) {
        std::cerr << "incompatible: no additive value function reproduces the inputs\n";
        return kExitIncompatible;
      }
      OwnedString fn_csv;
      check(ps_score_function_csv(score.get(), &fn_csv.text));
      write_file(out, "function_U1.csv", fn_csv.str());
      if (ps_score_vacuous(score.get())) {
        std::cout << "vacuously compatible: no winning-index or strict-preference "
                     "constraints bound the margin\n";
      } else {
        std::cout << "eta* = " << ps_score_eta(score.get())
                  << ", h* = " << ps_score_h_star(score.get())
                  << ", epsilon* = " << ps_score_epsilon_star(score.get()) << "\n";
      }
    }

    if (cmd_enumerate->parsed()) {
      PwiHandle pwi = load_pwi(enum_input, enum_matrix);
      const std::string prefs = load_prefs(enum_prefs);
      const char* prefs_arg = prefs.empty() ? nullptr : prefs.c_str();

      if (!sweep_arg.empty()) {
        std::string sweep_json = "{\n  \"sweep\": [";
        bool first = true;
        for (const double d : parse_sweep(sweep_arg)) {
          ps_enumeration* enum_raw = nullptr;
          check(ps_enumerate_run(pwi.get(), prefs_arg, d, big_m, cap, dispersion, &enum_raw));
          std::unique_ptr<ps_enumeration, decltype(&ps_enumeration_free)> e(
              enum_raw, &ps_enumeration_free);
          char line[160];
          std::snprintf(line, sizeof line,
                        "%s\n    {\"delta\": %.17g, \"count\": %d, \"stop_reason\": \"%s\"}",
                        first ? "" : ",", d, ps_enumeration_count(e.get()),
                        json_escape(ps_enumeration_stop_reason(e.get())).c_str());
          sweep_json += line;
          first = false;
          std::cout << "delta " << d << ": " << ps_enumeration_count(e.get())
                    << " functions (" << ps_enumeration_stop_reason(e.get()) << ")\n";
        }
        sweep_json += "\n  ]\n}\n";
        write_file(out, "delta_sweep.json", sweep_json);
        return 0;
      }

      ps_enumeration* enum_raw = nullptr;
      check(ps_enumerate_run(pwi.get(), prefs_arg, delta, big_m, cap, dispersion, &enum_raw));
      std::unique_ptr<ps_enumeration, decltype(&ps_enumeration_free)> e(enum_raw,
                                                                        &ps_enumeration_free);
      OwnedString json;
      check(ps_enumeration_to_json(e.get(), &json.text));
      write_file(out, "enumeration.json", json.str());
      for (int pos = 0; pos < ps_enumeration_plot_count(e.get()); ++pos) {
        const int index = ps_enumeration_plot_index(e.get(), pos);
        OwnedString plot;
        check(ps_enumeration_plot_csv(e.get(), index, &plot.text));
        write_file(out, std::string("plot_") + ps_enumeration_label(e.get(), index) + ".csv",
                   plot.str());
      }
      const std::string stop = ps_enumeration_stop_reason(e.get());
      std::cout << ps_enumeration_count(e.get()) << " compatible functions (stop: " << stop
                << ")\n";
      if (stop == "solver-failure") return kExitSolver;
    }

    if (cmd_dea->parsed()) {
      MatrixHandle normalized = load_matrix(dea_input);
      ps_dea* dea_raw = nullptr;
      check(ps_dea_run(normalized.get(), &dea_raw));
      std::unique_ptr<ps_dea, decltype(&ps_dea_free)> dea(dea_raw, &ps_dea_free);
      OwnedString json;
      check(ps_dea_to_json(dea.get(), &json.text));
      write_file(out, "dea.json", json.str());
      int efficient = 0;
      for (int i = 0; i < ps_dea_count(dea.get()); ++i)
        efficient += ps_dea_efficient(dea.get(), i);
      std::cout << efficient << " of " << ps_dea_count(dea.get())
                << " alternatives are efficient\n";
    }

    return 0;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}
