/*
 * C interface to the asynchronous cognitive MAC toolkit: rate-region bounds
 * (message and codeword cognition), multi-letter region points, the Gaussian
 * closed forms, and the random-coding Monte-Carlo simulator.
 *
 * All functions return ACMAC_OK (0) on success or a nonzero status; the
 * message for the most recent failure on the calling thread is available via
 * acmac_last_error(). Objects are opaque handles released with the matching
 * _free function. Strings returned through char** are released with
 * acmac_string_free().
 */
#ifndef ACMAC_H
#define ACMAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ACMAC_API __declspec(dllexport)
#else
#define ACMAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum acmac_status {
    ACMAC_OK = 0,
    ACMAC_ERR_INVALID = 2,  /* bad input data or misuse */
    ACMAC_ERR_TOO_LARGE = 3, /* an enumeration cap was exceeded */
    ACMAC_ERR_INTERNAL = 4
};

enum acmac_model {
    ACMAC_MODEL_MESSAGE = 0, /* informed encoder knows the message (ACMAC) */
    ACMAC_MODEL_CODEWORD = 1 /* informed encoder knows the codeword (ACC-MAC) */
};

enum acmac_bound {
    ACMAC_BOUND_INNER = 0,
    ACMAC_BOUND_OUTER = 1
};

typedef struct acmac_channel acmac_channel;
typedef struct acmac_region acmac_region;
typedef struct acmac_sim_report acmac_sim_report;

ACMAC_API const char* acmac_version(void);
ACMAC_API const char* acmac_last_error(void);
ACMAC_API void acmac_string_free(char* s);

/* ---- channels ---------------------------------------------------------- */

/* `spec` is a channel JSON file path or "builtin:mod" /
 * "builtin:binary_additive:<p>". */
ACMAC_API int acmac_channel_open(const char* spec, acmac_channel** out);
ACMAC_API int acmac_channel_from_json(const char* json_text, acmac_channel** out);
/* Pass -1 to keep a value from the channel file. */
ACMAC_API int acmac_channel_set_delays(acmac_channel* ch, int d_min, int d_max);
ACMAC_API int acmac_channel_to_json(const acmac_channel* ch, char** out_json);
ACMAC_API int acmac_channel_diagnostics(const acmac_channel* ch, char** out_text);
ACMAC_API int acmac_channel_save(const acmac_channel* ch, const char* path);
ACMAC_API void acmac_channel_free(acmac_channel* ch);

/* ---- rate-region bounds -------------------------------------------------- */

typedef struct acmac_search_config {
    uint64_t seed;
    int restarts;
    int ascent_steps;
    double step_size;
    int n_dirs;
    int threads;
} acmac_search_config;

ACMAC_API void acmac_search_config_init(acmac_search_config* cfg);
/* Loads seed / restarts / ascent_steps / step_size / n_dirs from a JSON file;
 * missing keys keep their defaults. */
ACMAC_API int acmac_search_config_load(const char* path, acmac_search_config* cfg);

ACMAC_API int acmac_compute_region(const acmac_channel* ch, const acmac_search_config* cfg,
                                   int model, int bound, acmac_region** out);
ACMAC_API int acmac_region_vertex_count(const acmac_region* region);
ACMAC_API int acmac_region_vertex(const acmac_region* region, int index, double* r1, double* r2);
ACMAC_API int acmac_region_support(const acmac_region* region, double w1, double w2,
                                   double* out_value);
ACMAC_API int acmac_region_contains_point(const acmac_region* region, double r1, double r2,
                                          double tol, int* out_contains);
ACMAC_API void acmac_region_free(acmac_region* region);

/* Single evaluated parameter point, message-cognition inner bound, with the
 * X2 law shared across windows. Returns sum cap, R2 cap and the R1 cap of
 * the codeword-cognition variant. */
ACMAC_API int acmac_inner_point_product(const acmac_channel* ch, const double* p_x1, int n_x1,
                                        const double* p_x2, int n_x2, double* out_sum_cap,
                                        double* out_r2_cap, double* out_r1_cap);

/* ---- whole commands (used by the CLI) ------------------------------------ */

/* Region command: writes <out_prefix>.csv, .json, .manifest.json. `command`
 * is one of inner / outer / accmac_inner / accmac_outer. */
ACMAC_API int acmac_cmd_region(const char* channel_spec, int d_min, int d_max,
                               const char* command, const acmac_search_config* cfg,
                               const char* out_prefix, char** out_summary);

/* Gaussian bounds: writes <out_prefix>.csv and .manifest.json. */
ACMAC_API int acmac_cmd_gaussian(double p1, double p2, double n0, int rho_steps, int p2_steps,
                                 const char* out_prefix, char** out_summary);

/* Multi-letter region point; law_spec_json like {"kind":"iid_uniform"}.
 * model is acmac_model. Writes <out_prefix>.manifest.json. */
ACMAC_API int acmac_cmd_multiletter(const char* channel_spec, int d_min, int d_max, int n,
                                    const char* law_spec_json, int model,
                                    const char* out_prefix, char** out_summary);

typedef struct acmac_sim_config {
    int n;
    double r1;
    double r2;
    double eps;
    int trials;
    uint64_t seed;
    int delay_fixed; /* 1 = use delay_d, 0 = uniform over the delay set */
    int delay_d;
    int model; /* acmac_model */
    int threads;
} acmac_sim_config;

ACMAC_API void acmac_sim_config_init(acmac_sim_config* cfg);
/* Loads n / r1 / r2 / eps / trials / seed / delay_policy / model from a JSON
 * file; missing keys keep their defaults. */
ACMAC_API int acmac_sim_config_load(const char* path, acmac_sim_config* cfg);

/* Simulation command: writes <out_prefix>.report.json, .report.csv,
 * .manifest.json. params_json may be NULL for uniform parameters. */
ACMAC_API int acmac_cmd_simulate(const char* channel_spec, int d_min, int d_max,
                                 const acmac_sim_config* cfg, const char* params_json,
                                 const char* out_prefix, char** out_summary);

/* Programmatic simulation without file output. */
ACMAC_API int acmac_simulate(const acmac_channel* ch, const acmac_sim_config* cfg,
                             const char* params_json, acmac_sim_report** out);
ACMAC_API int acmac_sim_report_error_rate(const acmac_sim_report* rep, double* out_rate);
ACMAC_API int acmac_sim_report_json(const acmac_sim_report* rep, char** out_json);
ACMAC_API void acmac_sim_report_free(acmac_sim_report* rep);

/* Re-executes the command recorded in a manifest, rewriting its outputs
 * byte-identically. */
ACMAC_API int acmac_cmd_replay(const char* manifest_path, char** out_summary);

/* Channel validation: diagnostics for a channel file. */
ACMAC_API int acmac_cmd_validate(const char* channel_path, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* ACMAC_H */
