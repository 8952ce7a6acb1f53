/*
 * C interface to the dynmono library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a dm_status; on
 * failure the message is available from dm_last_error() (per thread) until the
 * next failing call on that thread. Strings and id arrays returned through
 * out-parameters are released with dm_string_free / dm_ids_free.
 */
#ifndef DYNMONO_DYNMONO_H
#define DYNMONO_DYNMONO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DYNMONO_BUILDING)
#    define DM_API __declspec(dllexport)
#  else
#    define DM_API __declspec(dllimport)
#  endif
#else
#  define DM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum dm_status {
  DM_OK = 0,
  DM_ERR_INPUT = 1,        /* malformed input, unknown option, I/O failure */
  DM_ERR_PRECONDITION = 2, /* well-formed input outside an operation's domain */
  DM_ERR_SIZE_LIMIT = 3,   /* exact search refused */
  DM_ERR_INTERNAL = 4
} dm_status;

typedef struct dm_graph dm_graph;
typedef struct dm_cascade dm_cascade;

DM_API const char* dm_version(void);
DM_API const char* dm_last_error(void);
DM_API void dm_string_free(char* s);
DM_API void dm_ids_free(uint32_t* ids);

/* ---- graphs ------------------------------------------------------------ */

DM_API dm_status dm_graph_parse(const char* text, dm_graph** out);
DM_API dm_status dm_graph_load(const char* path, dm_graph** out);
/* family: star | path | cycle | complete | petersen | random_tree | random_girth5.
 * p is used by random_girth5, seed by the random families. */
DM_API dm_status dm_graph_generate(const char* family, size_t n, double p, uint64_t seed, dm_graph** out);
DM_API void dm_graph_free(dm_graph* g);

DM_API size_t dm_graph_order(const dm_graph* g);
DM_API size_t dm_graph_size(const dm_graph* g);
DM_API size_t dm_graph_max_degree(const dm_graph* g);
/* Returns 0 when v is out of range. */
DM_API size_t dm_graph_degree(const dm_graph* g, uint32_t v);
DM_API int dm_graph_is_tree(const dm_graph* g);
DM_API int dm_graph_is_connected(const dm_graph* g);
/* *girth is 0 for an acyclic graph. */
DM_API dm_status dm_graph_girth(const dm_graph* g, size_t* girth);
DM_API dm_status dm_graph_serialize(const dm_graph* g, char** text);
DM_API dm_status dm_graph_save(const dm_graph* g, const char* path);

/* ---- parameters -------------------------------------------------------- */

/* Accepts "P/Q" or a decimal string; returns the reduced fraction. */
DM_API dm_status dm_rho_parse(const char* text, uint64_t* num, uint64_t* den);
DM_API dm_status dm_seed_set_parse(const char* text, uint32_t** ids, size_t* len);
DM_API dm_status dm_seed_set_load(const char* path, uint32_t** ids, size_t* len);

/* ---- cascades ---------------------------------------------------------- */

/* Closure of `seed` under thresholds ceil(num/den * degree). */
DM_API dm_status dm_hull(const dm_graph* g, uint64_t num, uint64_t den, const uint32_t* seed, size_t len,
                         dm_cascade** out);
DM_API void dm_cascade_free(dm_cascade* c);
DM_API int dm_cascade_is_monopoly(const dm_cascade* c);
DM_API size_t dm_cascade_active_count(const dm_cascade* c);
/* Activation round of v, or -1 when v is inactive or out of range. */
DM_API int64_t dm_cascade_round(const dm_cascade* c, uint32_t v);
/* {"active": [...], "rounds": {...}, "is_monopoly": bool} */
DM_API dm_status dm_cascade_to_json(const dm_cascade* c, char** json);

DM_API dm_status dm_is_monopoly(const dm_graph* g, uint64_t num, uint64_t den, const uint32_t* seed, size_t len,
                                int* result);

/* ---- exact search and bounds ------------------------------------------- */

/* {"h", "witness", "nodes_explored", "runtime_ms"} */
DM_API dm_status dm_solve(const dm_graph* g, uint64_t num, uint64_t den, size_t limit, int force, char** json);
/* Sum of ceil(rho d)/(d+1) as "a/b" and as a double. */
DM_API dm_status dm_abw_bound(const dm_graph* g, uint64_t num, uint64_t den, char** exact, double* value);

/* ---- constructions ----------------------------------------------------- */

typedef struct dm_construct_options {
  const char* method; /* abw | girth5 | tree | v2 */
  double delta;       /* girth5; <= 0 selects 0.5, or the delta derived from epsilon */
  double epsilon;     /* girth5; <= 0 means unset */
  uint64_t rng_seed;
  size_t max_rounds;  /* girth5; 0 selects the default round count */
  int max_rounds_set; /* nonzero: use max_rounds even when it is 0 */
  size_t max_restarts;
  int allow_low_girth;
} dm_construct_options;

DM_API void dm_construct_options_init(dm_construct_options* opts);
/* MonopolySeed record: method, parameters, seed, size, verified[, trace]. */
DM_API dm_status dm_construct(const dm_graph* g, uint64_t num, uint64_t den, const dm_construct_options* opts,
                              char** json);

/* {"epsilon", "delta", "rho_max", "p2", "slack"} */
DM_API dm_status dm_params(double epsilon, char** json);

/* ---- benchmark --------------------------------------------------------- */

/* Runs a bench config (JSON text). Relative instance paths resolve against
 * base_dir (may be NULL). Either output pointer may be NULL. */
DM_API dm_status dm_bench(const char* config_json, const char* base_dir, char** csv, char** summary_json);
DM_API dm_status dm_bench_file(const char* config_path, char** csv, char** summary_json, char** output_path);

#ifdef __cplusplus
}
#endif

#endif /* DYNMONO_DYNMONO_H */
