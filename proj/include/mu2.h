/* C interface to the 2-CNF minimal-unsatisfiability classifier.
 *
 * All functions returning int yield MU2_OK or an error code; the message
 * for the most recent failure on the calling thread is available through
 * mu2_last_error.  Strings handed out through char** parameters are
 * malloc'd and must be released with mu2_string_free.
 */
#ifndef MU2_H
#define MU2_H

#ifdef __cplusplus
extern "C" {
#endif

#define MU2_OK 0
#define MU2_ERR_PARSE 1    /* malformed DIMACS input */
#define MU2_ERR_INVALID 2  /* arguments outside the supported domain */
#define MU2_ERR_NOT_MU 3   /* formula is not minimally unsatisfiable */
#define MU2_ERR_CAP 4      /* a work guard tripped */
#define MU2_ERR_INTERNAL 5 /* invariant violation; please report */

typedef struct mu2_formula mu2_formula;

/* Parses DIMACS CNF text with clauses of width at most 2. */
int mu2_parse(const char* dimacs, mu2_formula** out);
void mu2_formula_free(mu2_formula* f);

/* Degree/satisfiability report as JSON; works for any parsed formula. */
int mu2_check(const mu2_formula* f, char** json_out);

/* Classification of a minimally unsatisfiable formula as JSON.  A nonzero
 * brute flag re-derives the answer with brute-force checkers and fails
 * with MU2_ERR_INTERNAL on any disagreement. */
int mu2_classify(const mu2_formula* f, int brute, char** json_out);

/* Canonical representative of the isomorphism class, as DIMACS text. */
int mu2_canonical(const mu2_formula* f, char** dimacs_out);

/* Sets *iso_out to 1 or 0. */
int mu2_isomorphic(const mu2_formula* f, const mu2_formula* g, int brute,
                   int* iso_out);

/* Automorphism group of the formula (literal maps) as JSON. */
int mu2_automorphisms(const mu2_formula* f, int brute, char** json_out);

/* DOT renderings: the implication digraph, and the smoothed multigraph
 * variant of the implication graph. */
int mu2_implication_dot(const mu2_formula* f, char** dot_out);
int mu2_smooth_dot(const mu2_formula* f, char** dot_out);

/* Isomorphism classes of deficiency k with exactly n variables, as JSON
 * {k, n, count, formulas}.  k = 1 draws from the closed classification;
 * k >= 2 enumerates.  A nonzero force flag lifts the enumeration range
 * caps. */
int mu2_generate(int k, int n, int force, char** json_out);
int mu2_count(int k, int n, int force, long* count_out);

/* Closed-form class count for deficiency 1. */
int mu2_count_d1(int n, long* count_out);

/* Message for the most recent failure on this thread ("" if none). */
const char* mu2_last_error(void);
void mu2_string_free(char* s);

/* Cycle-enumeration guard; 0 restores the default (ten per vertex). */
void mu2_set_cycle_cap(long cap);

#ifdef __cplusplus
}
#endif

#endif /* MU2_H */
