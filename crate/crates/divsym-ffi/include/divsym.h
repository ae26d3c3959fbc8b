/* C interface to the divsym library. Generated by cbindgen; do not edit. */

#ifndef DIVSYM_H
#define DIVSYM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes; nonzero values match the CLI exit-code taxonomy where a
// counterpart exists.
typedef enum DivsymStatus {
  DIVSYM_STATUS_OK = 0,
  // Unreadable or malformed input.
  DIVSYM_STATUS_INPUT_ERROR = 2,
  // Structurally valid input violating an operation precondition.
  DIVSYM_STATUS_PRECONDITION_VIOLATION = 3,
  // A safety cap was exceeded.
  DIVSYM_STATUS_CAP_EXCEEDED = 4,
  // A cross-check between two computation paths failed.
  DIVSYM_STATUS_VERIFICATION_FAILED = 5,
  // A required pointer argument was null.
  DIVSYM_STATUS_NULL_POINTER = 6,
  // Invalid UTF-8 in a string argument.
  DIVSYM_STATUS_INVALID_UTF8 = 7,
  // An internal panic was caught at the boundary.
  DIVSYM_STATUS_INTERNAL_ERROR = 8,
} DivsymStatus;

// Opaque graph handle.
typedef struct DivsymGraph DivsymGraph;

// Opaque polynomial handle.
typedef struct DivsymPolynomial DivsymPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *divsym_version(void);

// Message for the most recent failure on this thread; do not free. Valid
// until the next failing call on the same thread.
const char *divsym_last_error_message(void);

// Release a string returned by this library.
void divsym_string_free(char *s);

// Parse a polynomial from its JSON form:
// `{"format":1,"m":3,"terms":[{"coef":["1","1"],"exp":[2,0,0]}]}`.
enum DivsymStatus divsym_polynomial_from_json(const char *json, struct DivsymPolynomial **out);

void divsym_polynomial_free(struct DivsymPolynomial *p);

// Parse a graph from its JSON form: `{"format":1,"m":3,"edges":[[0,1],[1,2]]}`.
enum DivsymStatus divsym_graph_from_json(const char *json, struct DivsymGraph **out);

// The path graph on m vertices.
enum DivsymStatus divsym_graph_path(size_t m, struct DivsymGraph **out);

// The cycle graph on m >= 3 vertices.
enum DivsymStatus divsym_graph_cycle(size_t m, struct DivsymGraph **out);

void divsym_graph_free(struct DivsymGraph *g);

// Divided symmetrization of `poly` over `graph`, requiring `deg f <= |E|`.
// The result is written as a `"numerator/denominator"` string (denominator
// omitted when 1). `verify_point != 0` re-evaluates at a second generic
// point; `max_m` caps the permutation count at `max_m!` (pass 0 for the
// default of 10).
enum DivsymStatus divsym_ds_constant(const struct DivsymPolynomial *poly,
                                     const struct DivsymGraph *graph,
                                     int32_t verify_point,
                                     size_t max_m,
                                     char **out_value);

// Sign times acceptable-permutation count for a weighted tree, as a decimal
// string. `graph` must be a tree; `weights` holds one entry per vertex,
// each >= -1, summing to -1.
enum DivsymStatus divsym_tree_tau(const struct DivsymGraph *graph,
                                  const int64_t *weights,
                                  size_t weights_len,
                                  char **out_value);

// Exact absorption distribution of the coin-robbing process.
//
// `config_json` is `{"format":1,"counts":[2,0,0]}`; `policy` is `lowest`,
// `highest`, or `seeded:<u64>`; `max_states` caps the reachable state count
// (0 for the default of 100000). The result is the JSON array
// `[{"final":[...],"prob":["num","den"]}, ...]`.
enum DivsymStatus divsym_sandpile_solve(const char *config_json,
                                        const char *policy,
                                        size_t max_states,
                                        char **out_json);

// Seeded Monte Carlo estimate of the absorption distribution. The result is
// the JSON array `[{"final":[...],"count":...,"freq":...,"stderr":...,
// "trials":...}, ...]`; identical inputs give identical output.
enum DivsymStatus divsym_sandpile_simulate(const char *config_json,
                                           const char *policy,
                                           uint64_t seed,
                                           uint64_t trials,
                                           char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIVSYM_H */
