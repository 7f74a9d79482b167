/* C interface to the bipartite-Ramsey laboratory.
 *
 * Conventions:
 *   - every function returns a status: 0 success, 1 verified-negative
 *     (absent cycle, good coloring, pipeline stage failure), 3 budget
 *     exhausted, negative = error (see bram_last_error for the message);
 *   - structured results come back as heap JSON strings the caller frees
 *     with bram_string_free;
 *   - graphs travel either as opaque handles or in the bcg text format
 *     ("bcg <n1> <n2> <r>" header plus n1 rows of n2 color ids, 0 = absent);
 *   - budgets: max_nodes < 0 means unlimited (deterministic), max_ms < 0
 *     disables the wall-clock cap.
 */
#ifndef BRAMSEY_H
#define BRAMSEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BRAMSEY_API __declspec(dllexport)
#else
#define BRAMSEY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bram_graph bram_graph;

#define BRAM_OK 0
#define BRAM_NEGATIVE 1
#define BRAM_BUDGET 3
#define BRAM_EINVAL (-1)
#define BRAM_EIO (-2)
#define BRAM_EINTERNAL (-3)

BRAMSEY_API const char* bram_version(void);
/* thread-local message describing the most recent error */
BRAMSEY_API const char* bram_last_error(void);
BRAMSEY_API void bram_string_free(char* s);
BRAMSEY_API void bram_graph_free(bram_graph* g);

/* ---- graphs -------------------------------------------------------- */

BRAMSEY_API int bram_graph_from_text(const char* text, bram_graph** out);
BRAMSEY_API int bram_graph_from_file(const char* path, bram_graph** out);
BRAMSEY_API int bram_graph_to_text(const bram_graph* g, char** out_text);
BRAMSEY_API int bram_graph_save(const bram_graph* g, const char* path);
/* triples = x,y,color repeated n_triples times; unlisted pairs absent */
BRAMSEY_API int bram_graph_build(int n1, int n2, int r, const int* triples, size_t n_triples,
                                 bram_graph** out);
BRAMSEY_API int bram_graph_dims(const bram_graph* g, int* n1, int* n2, int* r, int* complete);
/* colors_csv: "" or NULL = all colors, else e.g. "1" or "1,3" */
BRAMSEY_API int bram_graph_min_degree(const bram_graph* g, const char* colors_csv, int* out);
BRAMSEY_API int bram_components_json(const bram_graph* g, const char* colors_csv,
                                     char** out_json);
/* complete K_{n,n} with independent uniform colors 1..r (seeded) */
BRAMSEY_API int bram_graph_random_complete(int n, int r, uint64_t seed, bram_graph** out);

/* ---- constructions -------------------------------------------------- */

BRAMSEY_API int bram_construct_lower_bound(const char* lengths_csv, bram_graph** out);
BRAMSEY_API int bram_construct_h_tilde(int n, bram_graph** out);

/* ---- cycles ---------------------------------------------------------- */

/* 0 = found (json is the certificate {color, vertices, length}),
 * 1 = absent, 3 = unknown within budget */
BRAMSEY_API int bram_cycle_find(const bram_graph* g, int color, int length, long long max_nodes,
                                double max_ms, char** out_json);
/* 0 = certificate valid, 1 = invalid (json carries the first failure) */
BRAMSEY_API int bram_cycle_verify(const bram_graph* g, const char* certificate_json,
                                  char** out_json);
BRAMSEY_API int bram_circumference(const bram_graph* g, int color, int* out_length);

/* ---- matchings and decompositions ----------------------------------- */

BRAMSEY_API int bram_matching_best(const bram_graph* g, char** out_json);
BRAMSEY_API int bram_matching_max(const bram_graph* g, const char* colors_csv, char** out_json);
/* json kind is "matching" (saturates >= alpha) or "tutte_decomposition" */
BRAMSEY_API int bram_tutte(const bram_graph* g, int color, long long alpha, char** out_json);

/* ---- regularity ------------------------------------------------------ */

/* xs_csv / ys_csv: vertex indices of the two sets */
BRAMSEY_API int bram_density(const bram_graph* g, const char* colors_csv, const char* xs_csv,
                             const char* ys_csv, char** out_json);
/* eps / d accept "0.05", "1/20" or integers; exact mode is chosen
 * automatically when cluster sizes allow full enumeration */
BRAMSEY_API int bram_regularity_check(const bram_graph* g, const char* partition_text,
                                      const char* eps, uint64_t seed, char** out_json);
/* rule: "degree-form" or "majority" */
BRAMSEY_API int bram_reduced_graph(const bram_graph* g, const char* partition_text,
                                   const char* rule, const char* eps, const char* d,
                                   char** out_json);
BRAMSEY_API int bram_partition_uniform(int n, int k, char** out_text);
BRAMSEY_API int bram_partition_random(int n, int k, uint64_t seed, char** out_text);

/* ---- embedding pipeline ---------------------------------------------- */

/* alphas_csv = "1,1"; explicit_n <= 0 derives n from N. Returns 0 with the
 * run report on success, 1 with the diagnostic report on stage failure. */
BRAMSEY_API int bram_pipeline_run(const bram_graph* g, const char* alphas_csv, const char* xi,
                                  int clusters, uint64_t seed, int min_degree_flag,
                                  int explicit_n, long long max_nodes, double max_ms,
                                  char** out_json);

/* ---- ramsey solver ---------------------------------------------------- */

/* 0 = every coloring hits, 1 = good coloring found, 3 = budget exhausted
 * (json carries a resume cursor) */
BRAMSEY_API int bram_ramsey_decide(int N, const char* lengths_csv, long long max_nodes,
                                   double max_ms, const char* resume_state, int jobs,
                                   char** out_json);
/* 0 = exact value, 3 = bracketing interval */
BRAMSEY_API int bram_ramsey_value(const char* lengths_csv, int nmax, long long max_nodes,
                                  double max_ms, int jobs, char** out_json);

/* ---- reports ---------------------------------------------------------- */

/* aggregates the .json/.jsonl artifacts under run_dir into CSV tables plus
 * summary.txt in out_dir */
BRAMSEY_API int bram_report_build(const char* run_dir, const char* out_dir,
                                  char** out_summary);

#ifdef __cplusplus
}
#endif

#endif
