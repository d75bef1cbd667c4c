/*
 * pwiscore — scoring of alternatives from pairwise winning indices.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed by the library; every function that can fail returns a
 * ps_status, with a thread-local message available via ps_last_error().
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with ps_string_free().
 */

#ifndef PWISCORE_H
#define PWISCORE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PWISCORE_API __declspec(dllexport)
#else
#define PWISCORE_API __attribute__((visibility("default")))
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_ERR_INVALID_ARGUMENT = 1,
  PS_ERR_PARSE = 2,
  PS_ERR_INCOMPATIBLE = 3,
  PS_ERR_SOLVER = 4,
  PS_ERR_INTERNAL = 5
} ps_status;

typedef struct ps_matrix ps_matrix;           /* performance matrix */
typedef struct ps_pwi ps_pwi;                 /* winning indices + source matrix */
typedef struct ps_score ps_score;             /* value-function synthesis result */
typedef struct ps_enumeration ps_enumeration; /* enumerated compatible functions */
typedef struct ps_dea ps_dea;                 /* per-alternative efficiency */

PWISCORE_API const char* ps_version(void);

/* Message describing the last failure on this thread; empty when none. */
PWISCORE_API const char* ps_last_error(void);

PWISCORE_API void ps_string_free(char* text);

/* ---- performance matrices ------------------------------------------- */

/* CSV with header "alt_id[,label],<criterion>...", one row per alternative. */
PWISCORE_API ps_status ps_matrix_parse_csv(const char* csv_text, ps_matrix** out);

/* decimals < 0 emits shortest round-trip numbers. */
PWISCORE_API ps_status ps_matrix_to_csv(const ps_matrix* matrix, int decimals, char** out_csv);

PWISCORE_API int ps_matrix_alternative_count(const ps_matrix* matrix);
PWISCORE_API int ps_matrix_criterion_count(const ps_matrix* matrix);

/* Column standardization onto the common scale centered at 0.5.
 * out_stats_json may be NULL when the statistics are not needed. */
PWISCORE_API ps_status ps_matrix_standardize(const ps_matrix* matrix,
                                             ps_matrix** out_normalized,
                                             char** out_stats_json);

PWISCORE_API void ps_matrix_free(ps_matrix* matrix);

/* ---- pairwise winning indices --------------------------------------- */

/* Monte-Carlo estimate over weight vectors sampled uniformly on the simplex.
 * Deterministic for a fixed seed regardless of threads; threads <= 0 picks
 * the hardware concurrency. */
PWISCORE_API ps_status ps_pwi_compute(const ps_matrix* normalized, long long samples,
                                      unsigned long long seed, int threads, ps_pwi** out);

PWISCORE_API ps_status ps_pwi_parse_json(const char* json_text, ps_pwi** out);

/* Percent-formatted square table; the normalized matrix supplies evaluations
 * and must list the same alternatives in the same order. */
PWISCORE_API ps_status ps_pwi_from_percent_csv(const char* csv_text,
                                               const ps_matrix* normalized, ps_pwi** out);

PWISCORE_API ps_status ps_pwi_to_json(const ps_pwi* pwi, char** out_json);
PWISCORE_API ps_status ps_pwi_to_percent_csv(const ps_pwi* pwi, char** out_csv);
PWISCORE_API int ps_pwi_size(const ps_pwi* pwi);
PWISCORE_API double ps_pwi_value(const ps_pwi* pwi, int row, int col);
PWISCORE_API void ps_pwi_free(ps_pwi* pwi);

/* ---- scoring --------------------------------------------------------- */

/* Synthesizes the additive value function: maximizes the proportionality
 * margin, runs both diagnostics, scores and ranks the alternatives.
 * preferences_json may be NULL. An incompatible system is a regular result
 * (PS_OK with ps_score_compatible() == 0), not an error. */
PWISCORE_API ps_status ps_score_run(const ps_pwi* pwi, const char* preferences_json,
                                    double tie_tol, ps_score** out);

PWISCORE_API int ps_score_compatible(const ps_score* score);
PWISCORE_API int ps_score_vacuous(const ps_score* score);
PWISCORE_API double ps_score_eta(const ps_score* score); /* +inf when vacuous */
PWISCORE_API double ps_score_h_star(const ps_score* score);
PWISCORE_API double ps_score_epsilon_star(const ps_score* score);
PWISCORE_API ps_status ps_score_to_json(const ps_score* score, char** out_json);

/* Breakpoint table of the synthesized function; fails when incompatible. */
PWISCORE_API ps_status ps_score_function_csv(const ps_score* score, char** out_csv);

PWISCORE_API void ps_score_free(ps_score* score);

/* ---- enumeration of compatible functions ----------------------------- */

/* Iterates the exclusion programs until no further function is delta-distinct
 * or the cap is reached; dispersion_count controls the max-min subset picked
 * for plotting. Fails with PS_ERR_INCOMPATIBLE when no function exists. */
PWISCORE_API ps_status ps_enumerate_run(const ps_pwi* pwi, const char* preferences_json,
                                        double delta, double big_m, int cap,
                                        int dispersion_count, ps_enumeration** out);

PWISCORE_API int ps_enumeration_count(const ps_enumeration* enumeration);

/* "infeasible", "cap" or "solver-failure". */
PWISCORE_API const char* ps_enumeration_stop_reason(const ps_enumeration* enumeration);

PWISCORE_API const char* ps_enumeration_label(const ps_enumeration* enumeration, int index);

/* Functions selected for plotting: U^1 plus the dispersed picks. */
PWISCORE_API int ps_enumeration_plot_count(const ps_enumeration* enumeration);
PWISCORE_API int ps_enumeration_plot_index(const ps_enumeration* enumeration, int position);

PWISCORE_API ps_status ps_enumeration_to_json(const ps_enumeration* enumeration,
                                              char** out_json);
PWISCORE_API ps_status ps_enumeration_function_csv(const ps_enumeration* enumeration,
                                                   int index, char** out_csv);
PWISCORE_API ps_status ps_enumeration_plot_csv(const ps_enumeration* enumeration, int index,
                                               char** out_csv);
PWISCORE_API void ps_enumeration_free(ps_enumeration* enumeration);

/* ---- efficiency ------------------------------------------------------- */

PWISCORE_API ps_status ps_dea_run(const ps_matrix* normalized, ps_dea** out);
PWISCORE_API int ps_dea_count(const ps_dea* dea);
PWISCORE_API int ps_dea_efficient(const ps_dea* dea, int index);
PWISCORE_API double ps_dea_utility(const ps_dea* dea, int index);
PWISCORE_API ps_status ps_dea_to_json(const ps_dea* dea, char** out_json);
PWISCORE_API void ps_dea_free(ps_dea* dea);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PWISCORE_H */
