/*
 * potgraph: potentially K_m - C_4-graphic degree sequences.
 *
 * C interface to the core library. All objects are opaque handles created by
 * a *_new / *_parse / query function and released with the matching *_free.
 * Every function that can fail returns a potgraph_status; on failure the
 * message is available from potgraph_last_error() on the same thread.
 */
#ifndef POTGRAPH_POTGRAPH_H
#define POTGRAPH_POTGRAPH_H

#include <stddef.h>

#if defined(POTGRAPH_BUILDING)
#define POTGRAPH_API __attribute__((visibility("default")))
#else
#define POTGRAPH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum potgraph_status {
    POTGRAPH_OK = 0,
    POTGRAPH_INPUT_ERROR = 1,
    POTGRAPH_PARSE_ERROR = 2,
    POTGRAPH_CONTRACT_ERROR = 3,
    POTGRAPH_RESOURCE_ERROR = 4,
    POTGRAPH_INTERNAL_ERROR = 5
} potgraph_status;

/* Outcome carried by a report. */
typedef enum potgraph_verdict {
    POTGRAPH_VERDICT_PASS = 0,
    POTGRAPH_VERDICT_FAIL = 1,
    POTGRAPH_VERDICT_INCONCLUSIVE = 3
} potgraph_verdict;

typedef struct potgraph_config potgraph_config;
typedef struct potgraph_sequence potgraph_sequence;
typedef struct potgraph_graph potgraph_graph;
typedef struct potgraph_report potgraph_report;

typedef void (*potgraph_progress_fn)(const char* line, void* user);

POTGRAPH_API const char* potgraph_version(void);
POTGRAPH_API const char* potgraph_last_error(void);
POTGRAPH_API const char* potgraph_status_name(potgraph_status status);

/* Strings returned through char** out-parameters are freed with this. */
POTGRAPH_API void potgraph_string_free(char* s);

/* ---- run configuration ---- */

/* Defaults: vertex limit 12, no budget, one worker, seed 0. */
POTGRAPH_API potgraph_config* potgraph_config_new(void);
POTGRAPH_API void potgraph_config_free(potgraph_config* cfg);
/* 1 <= limit <= 32 */
POTGRAPH_API potgraph_status potgraph_config_set_vertex_limit(potgraph_config* cfg, int limit);
POTGRAPH_API int potgraph_config_vertex_limit(const potgraph_config* cfg);
/* Caps realization classes per decision; a negative value removes the cap. */
POTGRAPH_API potgraph_status potgraph_config_set_budget(potgraph_config* cfg, long long budget);
POTGRAPH_API potgraph_status potgraph_config_set_parallelism(potgraph_config* cfg, int workers);
POTGRAPH_API potgraph_status potgraph_config_set_seed(potgraph_config* cfg, unsigned long long seed);
/* Called with one line per finished sweep level; fn may be NULL. */
POTGRAPH_API potgraph_status potgraph_config_set_progress(potgraph_config* cfg, potgraph_progress_fn fn,
                                                          void* user);

/* ---- degree sequences ---- */

/* "5,3,3,3,3,3" or "5^1,3^5". */
POTGRAPH_API potgraph_status potgraph_sequence_parse(const char* text, potgraph_sequence** out);
POTGRAPH_API potgraph_status potgraph_sequence_from_array(const int* values, size_t count,
                                                          potgraph_sequence** out);
POTGRAPH_API void potgraph_sequence_free(potgraph_sequence* seq);
POTGRAPH_API size_t potgraph_sequence_length(const potgraph_sequence* seq);
/* Terms are stored nonincreasing. Returns -1 when index is out of range. */
POTGRAPH_API int potgraph_sequence_term(const potgraph_sequence* seq, size_t index);
POTGRAPH_API long long potgraph_sequence_sum(const potgraph_sequence* seq);
POTGRAPH_API int potgraph_sequence_is_graphical(const potgraph_sequence* seq);
/* powers != 0 selects the "5^1,3^5" form. */
POTGRAPH_API potgraph_status potgraph_sequence_format(const potgraph_sequence* seq, int powers, char** out);

/* ---- graphs ---- */

POTGRAPH_API potgraph_status potgraph_graph_from_graph6(const char* text, potgraph_graph** out);
/* "0-1,1-2"; order < 0 infers the vertex count. */
POTGRAPH_API potgraph_status potgraph_graph_from_edge_list(const char* text, int order, potgraph_graph** out);
POTGRAPH_API void potgraph_graph_free(potgraph_graph* g);
POTGRAPH_API int potgraph_graph_order(const potgraph_graph* g);
POTGRAPH_API int potgraph_graph_size(const potgraph_graph* g);
POTGRAPH_API int potgraph_graph_has_edge(const potgraph_graph* g, int u, int v);
POTGRAPH_API potgraph_status potgraph_graph_to_graph6(const potgraph_graph* g, char** out);
POTGRAPH_API potgraph_status potgraph_graph_degree_sequence(const potgraph_graph* g, potgraph_sequence** out);
/* Sets *out to 1 when g contains K_m - C_4 as a subgraph. */
POTGRAPH_API potgraph_status potgraph_graph_contains_pattern(const potgraph_graph* g, int m, int* out);
POTGRAPH_API potgraph_status potgraph_realize(const potgraph_sequence* seq, potgraph_graph** out);

/* ---- reports ----
 * Each query produces a report holding a verdict, a JSON rendering and a
 * text rendering. The replay report's JSON is one object per line.
 */

POTGRAPH_API potgraph_status potgraph_query_graphical(const potgraph_sequence* seq, potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_query_realize(const potgraph_sequence* seq, potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_query_potential(const potgraph_config* cfg, const potgraph_sequence* seq,
                                                      int m, potgraph_report** out);
/* exact == 0 reports only the lower bound. */
POTGRAPH_API potgraph_status potgraph_query_sigma(const potgraph_config* cfg, int m, int n, int exact,
                                                  potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_query_witness(const potgraph_config* cfg, int m, int n,
                                                    potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_verify_theorem1(const potgraph_config* cfg, int m, int n_max,
                                                      potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_verify_theorem2(const potgraph_config* cfg, int n_max, potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_verify_conjecture(const potgraph_config* cfg, int m, int n_first, int n_last,
                                                        potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_verify_base_cases(const potgraph_config* cfg, int family_max,
                                                        potgraph_report** out);
POTGRAPH_API potgraph_status potgraph_replay(const potgraph_config* cfg, const potgraph_sequence* seq,
                                             potgraph_report** out);

POTGRAPH_API void potgraph_report_free(potgraph_report* report);
POTGRAPH_API potgraph_verdict potgraph_report_verdict(const potgraph_report* report);
/* Owned by the report. */
POTGRAPH_API const char* potgraph_report_json(const potgraph_report* report);
POTGRAPH_API const char* potgraph_report_text(const potgraph_report* report);

#ifdef __cplusplus
}
#endif

#endif /* POTGRAPH_POTGRAPH_H */
