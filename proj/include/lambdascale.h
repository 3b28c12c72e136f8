/* lambdascale — C interface to the scaled lambda calculus engine.
 *
 * All functions that can fail return an lsc_status; LSC_OK means success.
 * On failure a human-readable message is stored per thread and can be read
 * with lsc_last_error() until the next failing call on the same thread.
 *
 * Strings returned through char** out-parameters are heap-allocated; release
 * them with lsc_string_free. Terms returned through lsc_term** are owned by
 * the caller and released with lsc_term_free. Out-parameters are written
 * only on LSC_OK. Optional out-parameters may be NULL.
 */
#ifndef LAMBDASCALE_H
#define LAMBDASCALE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lsc_term lsc_term; /* opaque immutable term handle */

typedef enum lsc_status {
  LSC_OK = 0,
  LSC_ERR_SYNTAX = 1,         /* malformed input text */
  LSC_ERR_UNBALANCED = 2,     /* unbalanced parentheses */
  LSC_ERR_BAD_SCALE = 3,      /* malformed scale literal */
  LSC_ERR_POSITION = 4,       /* position does not address a subterm */
  LSC_ERR_RULE = 5,           /* rewrite rule not applicable there */
  LSC_ERR_VARIABLE_CLASH = 6, /* relative variable collides with the base */
  LSC_ERR_NOT_T1 = 7,         /* term carries a non-neutral scale */
  LSC_ERR_OVERFLOW = 8,       /* scale exponent arithmetic overflowed */
  LSC_ERR_BAD_ARGUMENT = 9,   /* NULL pointer or out-of-range argument */
  LSC_ERR_INTERNAL = 10       /* engine invariant violated (a bug) */
} lsc_status;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
const char* lsc_version(void);

/* Stable name for a status code, e.g. "syntax_error". Static storage. */
const char* lsc_status_name(lsc_status s);

/* Message of the most recent failure on the calling thread ("" if none). */
const char* lsc_last_error(void);

/* Release a string returned through a char** out-parameter. NULL is ok. */
void lsc_string_free(char* s);

/* ---- terms ---------------------------------------------------------- */

/* Parse source text:  x | (x \ B) | (A {scale} B) | (A B) | dil{s}(B, A). */
lsc_status lsc_term_parse(const char* src, lsc_term** out);

void lsc_term_free(lsc_term* t);

/* Canonical fully parenthesized text; lsc_term_parse inverts it exactly. */
lsc_status lsc_term_print(const lsc_term* t, char** out);

/* Graphviz DOT rendering of the syntax tree. Byte-deterministic. */
lsc_status lsc_term_to_dot(const lsc_term* t, char** out);

/* *out = 1 if the terms are alpha-equivalent, else 0. */
lsc_status lsc_term_alpha_eq(const lsc_term* a, const lsc_term* b, int* out);

/* Canonical form of a scale literal, e.g. "m^0*e*e" -> "e^2". */
lsc_status lsc_scale_canonical(const char* src, char** out);

/* ---- rewriting ------------------------------------------------------ */

/* Reduce t with the oriented rules under a step budget (budget < 0 uses the
 * library default of 1000). *normal is 1 when a normal form was reached and
 * 0 when the budget ran out; both are successful outcomes. If trace is not
 * NULL it receives one line per applied step. */
lsc_status lsc_normalize(const lsc_term* t, long budget, lsc_term** result,
                         char** trace, int* normal);

/* Search for a proof that a and b are convertible. *verdict is 0 when a
 * proof was found (trace receives the validated step chain) and 1 when the
 * search budget (< 0 uses the default of 5000) was exhausted first — the
 * relation is only semi-decidable, so "unknown" is not a disproof. */
lsc_status lsc_equiv(const lsc_term* a, const lsc_term* b, long budget,
                     int* verdict, char** trace);

/* ---- relative terms -------------------------------------------------- */

/* Translate a relative term (same syntax as ordinary terms) against the
 * observation context given by base term text and scale text. simplified=0
 * uses the clause-by-clause translation; simplified=1 requires rel_src to be
 * an abstraction and uses the shortcut one-binder form. Fails with
 * LSC_ERR_VARIABLE_CLASH when a relative variable is free in the base. */
lsc_status lsc_translate(const char* base, const char* scale,
                         const char* rel_src, int simplified, char** out);

/* ---- batch checks ---------------------------------------------------- */

/* Run a generated instance suite; kind is "irq" (dilation laws plus the two
 * bridge properties), "lambda" (engine vs classical oracle on neutral-scale
 * combinators; seed/count/depth ignored), or "relative" (substitution lemma,
 * shortcut form and transported rule families for the context base/scale —
 * both may be NULL for "irq"/"lambda"). report receives one line per checked
 * instance; *all_proved is 1 when every instance was proved. budget < 0 uses
 * the default of 5000. */
lsc_status lsc_check(const char* kind, const char* base, const char* scale,
                     uint64_t seed, int count, int depth, long budget,
                     char** report, int* all_proved);

#ifdef __cplusplus
}
#endif

#endif /* LAMBDASCALE_H */
