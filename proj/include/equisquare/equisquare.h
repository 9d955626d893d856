/* equisquare: exact counting, simulation and algebra of equi-n-squares.
 *
 * C API over the C++ core. All functions returning esq_status set a
 * thread-local message retrievable with esq_last_error() on failure.
 * Strings handed out through char** are heap-allocated; release them
 * with esq_free_string().
 */
#ifndef EQUISQUARE_H
#define EQUISQUARE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ESQ_OK = 0,
  ESQ_ERR_COMPUTE = 1, /* computation failed / invalid input data */
  ESQ_ERR_USAGE = 2,   /* bad argument values */
  ESQ_ERR_GUARD = 3    /* enumeration guard tripped (see esq_census_json) */
} esq_status;

typedef struct esq_square esq_square; /* an equi-n-square, immutable */
typedef struct esq_table esq_table;   /* a Cayley table, immutable */

const char* esq_version(void);

/* Message for the most recent failure on this thread. */
const char* esq_last_error(void);

void esq_free_string(char* s);

/* ---- squares ---------------------------------------------------- */

/* Text format: first line n, then n rows of n space-separated symbols. */
esq_status esq_square_parse(const char* text, esq_square** out);

/* Uniform sample from Omega_n; deterministic per (n, seed, index). */
esq_status esq_square_sample(int n, uint64_t seed, uint64_t index,
                             esq_square** out);

void esq_square_free(esq_square* s);
int esq_square_order(const esq_square* s);
esq_status esq_square_format(const esq_square* s, char** out_text);

/* JSON: {"x", "consecutive_rows":[{"index","orientation"}...],
 *        "consecutive_cols":[...], "is_latin", "permutation_lines"} */
esq_status esq_square_statistic_json(const esq_square* s, char** out_json);

/* ---- counting reports ------------------------------------------- */

/* format: "table", "csv" or "json". breakdown != 0 adds the
 * intermediate counts. digits controls decimal renderings (>= 1). */
esq_status esq_count_report(int n, int breakdown, int digits,
                            const char* format, char** out);
esq_status esq_pmf_report(int n, int digits, const char* format, char** out);

/* CSV reproductions of the reference probability and count tables. */
esq_status esq_tables_csv(char** out);

/* ---- exhaustive census ------------------------------------------ */

/* Canonical sorted-key JSON, counts as decimal strings. Guarded at n > 3
 * unless force is nonzero (or EQUISQUARE_GUARD_N raises the limit):
 * n = 4 means about 6.3e10 squares. */
esq_status esq_census_json(int n, int force, char** out_json);

/* ---- Monte Carlo ------------------------------------------------- */

/* Summary JSON with tallies and confidence-band checks. Identical
 * (n, iterations, seed, workers) give byte-identical output; the tallies
 * are also independent of the worker count. trace_resolution > 0 with a
 * non-NULL trace_path writes a running-probability CSV. */
esq_status esq_simulate_json(int n, uint64_t iterations, uint64_t seed,
                             int workers, int digits,
                             const char* trace_path,
                             uint64_t trace_resolution, char** out_json);

/* ---- algebra ------------------------------------------------------ */

esq_status esq_table_parse(const char* text, esq_table** out);
esq_status esq_table_cyclic(int order, esq_table** out);

/* Rees matrix semigroup M(G; I, Lambda; P). group must validate as a
 * group. sandwich holds lambda_size*i_size 1-based elements of G,
 * row-major by lambda; NULL means all-identity. */
esq_status esq_table_rees(const esq_table* group, int i_size, int lambda_size,
                          const int* sandwich, esq_table** out);

void esq_table_free(esq_table* t);
int esq_table_order(const esq_table* t);
esq_status esq_table_format(const esq_table* t, char** out_text);

/* JSON: {"is_equi_n_square","is_latin","is_associative",
 *        "left_identity_like","right_identity_like",
 *        "reverse_identity_like","fiber_sizes"} */
esq_status esq_table_analyze_json(const esq_table* t, char** out_json);

/* 1 if reversing composed with multiplication by element is the identity
 * (row side, or column side if column_side != 0); 0 if not; -1 on error. */
int esq_table_reverse_identity(const esq_table* t, int element,
                               int column_side);

#ifdef __cplusplus
}
#endif

#endif /* EQUISQUARE_H */
