/* C interface of the ideal2d shared library.
 *
 * All functions return a status code; results are written through out
 * parameters. Strings returned through char** are heap-allocated and must
 * be released with ideal2d_string_free; ideals must be released with
 * ideal2d_ideal_free. On any non-OK status the out parameters are left
 * untouched and ideal2d_last_error() describes the failure for the calling
 * thread. Unbounded integers are rendered as decimal strings.
 */
#ifndef IDEAL2D_H
#define IDEAL2D_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ideal2d_status {
  IDEAL2D_OK = 0,
  IDEAL2D_EPARSE = 1,   /* malformed input text */
  IDEAL2D_EDOMAIN = 2,  /* arguments outside the operation's domain */
  IDEAL2D_ELIMIT = 3,   /* a configured cap was exhausted */
  IDEAL2D_EINTERNAL = 4 /* internal invariant violated */,
  IDEAL2D_EARG = 5      /* null pointer or invalid argument value */
} ideal2d_status;

/* An ideal of k[[x, y]]: either a monomial ideal in canonical staircase
 * form or an ideal given by polynomial generators. */
typedef struct ideal2d_ideal ideal2d_ideal;

const char* ideal2d_version(void);

/* Message describing the most recent failure on this thread. */
const char* ideal2d_last_error(void);

void ideal2d_string_free(char* s);
void ideal2d_ideal_free(ideal2d_ideal* a);

/* Parses a comma-separated list of polynomial generators, e.g.
 * "x^2,x*y,y^3" or "x*y+3*y^4,x^5". */
ideal2d_status ideal2d_ideal_parse(const char* text, ideal2d_ideal** out);

ideal2d_status ideal2d_ideal_to_string(const ideal2d_ideal* a, char** out);

/* Writes 1 when the ideal is stored as a monomial ideal, else 0. */
ideal2d_status ideal2d_ideal_is_monomial(const ideal2d_ideal* a, int* out);

/* Integral closure of a monomial ideal. */
ideal2d_status ideal2d_closure(const ideal2d_ideal* a, ideal2d_ideal** out);

/* Adjoint of a monomial ideal. */
ideal2d_status ideal2d_adjoint(const ideal2d_ideal* a, ideal2d_ideal** out);

/* Core of a complete m-primary monomial ideal. */
ideal2d_status ideal2d_core(const ideal2d_ideal* a, ideal2d_ideal** out);

/* Colength dim_k R/a. Monomial ideals are handled exactly from the
 * staircase; polynomial ideals through truncation certificates with the
 * given cap (pass 0 for the default cap). */
ideal2d_status ideal2d_colength(const ideal2d_ideal* a, int64_t cap,
                                char** out);

/* Multiplicity e(a) of an m-primary monomial ideal. */
ideal2d_status ideal2d_multiplicity(const ideal2d_ideal* a, char** out);

/* Mixed multiplicity e_1(a | b) of two m-primary monomial ideals. */
ideal2d_status ideal2d_mixed_e1(const ideal2d_ideal* a, const ideal2d_ideal* b,
                                char** out);

/* Point-basis tree of an m-primary monomial ideal, rendered as indented
 * text or as JSON. */
ideal2d_status ideal2d_point_basis_render(const ideal2d_ideal* a, int as_json,
                                          char** out);

/* Reconciliation of the point-basis sums of a complete monomial ideal with
 * its colength, multiplicity, and first Hilbert coefficient. */
ideal2d_status ideal2d_verify_hd(const ideal2d_ideal* a, int as_json,
                                 char** out, int* all_passed);

/* Adjoint identities ("sec3") or core identities ("sec4") for a pair of
 * complete m-primary monomial ideals. elem_a and elem_b optionally give a
 * joint-reduction pair as polynomial text (pass NULL for neither); r_max,
 * s_max bound the power grid; cap bounds truncation certificates (0 for
 * the default). */
ideal2d_status ideal2d_verify_pair_suite(const char* suite,
                                         const ideal2d_ideal* a,
                                         const ideal2d_ideal* b,
                                         const char* elem_a,
                                         const char* elem_b, int64_t r_max,
                                         int64_t s_max, int64_t cap,
                                         int as_json, char** out,
                                         int* all_passed);

/* Worked example families "ex51" and "ex52"; u is only read for ex52. */
ideal2d_status ideal2d_verify_example(const char* example, int64_t u,
                                      int64_t r_max, int64_t s_max,
                                      int64_t n_max, int64_t cap, int as_json,
                                      char** out, int* all_passed);

/* Randomized corpus run: `count` complete ideals from `seed`, the first
 * 2*pair_count of them paired up. certify_threshold bounds the mixed
 * multiplicity up to which joint-reduction certificates are attempted. */
ideal2d_status ideal2d_verify_corpus(uint64_t seed, int64_t count,
                                     int64_t pair_count, int64_t r_max,
                                     int64_t s_max, int64_t cap,
                                     int64_t certify_threshold, int as_json,
                                     char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* IDEAL2D_H */
