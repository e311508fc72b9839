#ifndef APIMEX_APIMEX_H
#define APIMEX_APIMEX_H

/* C interface of the AP IMEX-RK low-Mach Euler solver.
 *
 * Every function returning apimex_status leaves a description of the last
 * failure on the calling thread, readable with apimex_last_error(). Handles
 * are opaque and owned by the caller; destroy functions accept NULL. */

#include <stddef.h>

#if defined(_WIN32)
#define APIMEX_API __declspec(dllexport)
#else
#define APIMEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apimex_status {
  APIMEX_OK = 0,
  APIMEX_ERR_CONFIG = 1,
  APIMEX_ERR_SOLVER = 2,
  APIMEX_ERR_LOOKUP = 3,
  APIMEX_ERR_IO = 4,
  APIMEX_ERR_ARGUMENT = 5,
  APIMEX_ERR_INTERNAL = 6
} apimex_status;

typedef struct apimex_config apimex_config;
typedef struct apimex_solver apimex_solver;

/* Receives one progress line; `user` is passed through unchanged. */
typedef void (*apimex_log_fn)(const char* line, void* user);

APIMEX_API const char* apimex_version(void);

/* Message of the last failure on this thread, "" if none. */
APIMEX_API const char* apimex_last_error(void);

/* Configuration with defaults; see `apimex_cli run --help` for keys. */
APIMEX_API apimex_status apimex_config_create(apimex_config** out);
APIMEX_API void apimex_config_destroy(apimex_config* cfg);
/* Overlays `key = value` lines from a file. */
APIMEX_API apimex_status apimex_config_load_file(apimex_config* cfg, const char* path);
/* Sets one key; `origin` labels error messages and may be NULL. */
APIMEX_API apimex_status apimex_config_set(apimex_config* cfg, const char* key, const char* value,
                                           const char* origin);
/* Copies the value of `key` into buf (NUL-terminated). *needed receives the
 * full length including the terminator; APIMEX_ERR_ARGUMENT if it exceeds
 * size. Either buf or needed may be NULL. */
APIMEX_API apimex_status apimex_config_get(const apimex_config* cfg, const char* key, char* buf,
                                           size_t size, size_t* needed);

/* Subcommands. `log` may be NULL. */
APIMEX_API apimex_status apimex_cmd_run(const apimex_config* cfg, apimex_log_fn log, void* user);
APIMEX_API apimex_status apimex_cmd_convergence(const apimex_config* cfg, apimex_log_fn log,
                                                void* user);
APIMEX_API apimex_status apimex_cmd_ap_sweep(const apimex_config* cfg, apimex_log_fn log,
                                             void* user);
/* Reports the named tableau (every shipped one when `name` is NULL) through
 * `log`; *passed is 1 when all required checks hold. */
APIMEX_API apimex_status apimex_tableau_check(const apimex_config* cfg, const char* name,
                                              apimex_log_fn log, void* user, int* passed);

/* A stepping session on the problem named by the configuration. */
APIMEX_API apimex_status apimex_solver_create(const apimex_config* cfg, apimex_solver** out);
APIMEX_API void apimex_solver_destroy(apimex_solver* solver);
/* Takes `steps` CFL steps. */
APIMEX_API apimex_status apimex_solver_step(apimex_solver* solver, size_t steps);
/* Steps until t_end, landing on it exactly. */
APIMEX_API apimex_status apimex_solver_advance(apimex_solver* solver, double t_end);
APIMEX_API double apimex_solver_time(const apimex_solver* solver);
APIMEX_API size_t apimex_solver_steps_taken(const apimex_solver* solver);
APIMEX_API size_t apimex_solver_cell_count(const apimex_solver* solver);
/* Copies rho, q1, q2 (each cell_count long, x fastest). Any pointer may be
 * NULL to skip that field. */
APIMEX_API apimex_status apimex_solver_copy_fields(const apimex_solver* solver, double* rho,
                                                   double* q1, double* q2);
/* Writes the current state in the field dump format. */
APIMEX_API apimex_status apimex_solver_write_fields(const apimex_solver* solver, const char* path);

#ifdef __cplusplus
}
#endif

#endif
