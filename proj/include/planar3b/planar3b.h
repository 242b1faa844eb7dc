#ifndef PLANAR3B_H
#define PLANAR3B_H

/* C interface of the planar3b library. Every function returns a status code;
 * on failure p3b_last_error() describes the problem (thread-local). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PLANAR3B_BUILDING)
#define P3B_API __attribute__((visibility("default")))
#else
#define P3B_API
#endif

typedef enum {
    P3B_OK = 0,
    P3B_ERR_VALIDATION = 1, /* an acceptance check failed */
    P3B_ERR_CONFIG = 2,
    P3B_ERR_SOLVER = 3,     /* no root / too many failed points / too few levels */
    P3B_ERR_DOMAIN = 4,
    P3B_ERR_IO = 5,
    P3B_ERR_ARG = 6         /* null pointer or bad enum value */
} p3b_status;

typedef struct p3b_config p3b_config;

P3B_API const char* p3b_version(void);
P3B_API const char* p3b_last_error(void);

/* Configuration handle. Defaults when created empty. */
P3B_API p3b_status p3b_config_new(p3b_config** out);
P3B_API p3b_status p3b_config_load(const char* path, p3b_config** out);
P3B_API p3b_status p3b_config_parse(const char* text, p3b_config** out);
P3B_API void p3b_config_free(p3b_config* cfg);
P3B_API p3b_status p3b_config_set_output(p3b_config* cfg, const char* dir);
P3B_API p3b_status p3b_config_hash(const p3b_config* cfg, char* buf, size_t len);
P3B_API p3b_status p3b_config_nu0(const p3b_config* cfg, double* out);

/* Bessel functions: kind 'J', 'Y' or 'K'. */
P3B_API p3b_status p3b_bessel(char kind, int order, double x, double* out);

/* V(R) of one branch ("swave+", "I-", "unified", ...) in natural units.
 * P3B_ERR_SOLVER when the branch has no real root at R. */
P3B_API p3b_status p3b_effective_potential(const p3b_config* cfg, const char* branch, double R, double* out);

P3B_API p3b_status p3b_count_bound_states(double a1, double nu0, double* out);
P3B_API p3b_status p3b_atom_molecule_A0(double a1, double nu0, double* out);

/* Commands. Each writes CSV files into the configured output directory; the
 * branch list is comma separated (NULL: configured branches), n_max <= 0 keeps
 * the configured value, jobs <= 0 uses all cores. Human-readable notes are
 * passed to `message` (may be NULL). */
typedef void (*p3b_message_fn)(const char* line, void* user);

P3B_API p3b_status p3b_run_potentials(const p3b_config* cfg, const char* branches, int jobs, p3b_message_fn message,
                                      void* user);
P3B_API p3b_status p3b_run_spectrum(const p3b_config* cfg, int n_max, int jobs, p3b_message_fn message, void* user);
P3B_API p3b_status p3b_run_resonances(const p3b_config* cfg, int n_max, p3b_message_fn message, void* user);
P3B_API p3b_status p3b_run_wavefunction(const p3b_config* cfg, int jobs, p3b_message_fn message, void* user);

/* Acceptance checks; one line per criterion goes to `line`. `only` selects a
 * module (NULL or "" for all). P3B_ERR_VALIDATION if any check fails. */
P3B_API p3b_status p3b_validate(const p3b_config* cfg, const char* only, int jobs, p3b_message_fn line, void* user);

#ifdef __cplusplus
}
#endif

#endif
