/*
 * posat — SAT solver with partial-order backtracking over decision levels.
 *
 * C interface to the solver library. Objects are opaque handles; functions
 * return a posat_status and report details through posat_last_error(),
 * which is thread-local.
 *
 * Typical use:
 *
 *   posat_formula *f = NULL;
 *   if (posat_formula_read_file("problem.cnf", &f) != POSAT_OK) { ... }
 *   posat_solver *s = posat_solver_new(f);
 *   posat_solver_set_option(s, "order", "partial");
 *   posat_solver_set_option(s, "heuristic", "most-deps");
 *   int verdict = posat_solver_solve(s);          // 10 SAT, 20 UNSAT, 0 unknown
 *   const char *stats = posat_solver_stats_json(s);
 *   posat_solver_free(s);
 *   posat_formula_free(f);
 */

#ifndef POSAT_H
#define POSAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum posat_status {
    POSAT_OK = 0,
    POSAT_ERR_PARSE = 1,
    POSAT_ERR_IO = 2,
    POSAT_ERR_INVALID_ARG = 3,
    POSAT_ERR_INTERNAL = 4
} posat_status;

/* Verdict values double as the conventional process exit codes. */
typedef enum posat_verdict {
    POSAT_UNKNOWN = 0,
    POSAT_SAT = 10,
    POSAT_UNSAT = 20
} posat_verdict;

typedef struct posat_formula posat_formula;
typedef struct posat_solver posat_solver;

const char *posat_version(void);

/* Message describing the most recent failure on this thread. */
const char *posat_last_error(void);

/* ---- formulas ---------------------------------------------------------- */

posat_status posat_formula_read_file(const char *path, posat_formula **out);
posat_status posat_formula_read_string(const char *text, size_t len, posat_formula **out);
void posat_formula_free(posat_formula *f);

int posat_formula_num_vars(const posat_formula *f);
int posat_formula_num_clauses(const posat_formula *f);

/* Parser warnings (e.g. a clause count differing from the header), one per
 * index; returns NULL once i is past the last warning. */
const char *posat_formula_warning(const posat_formula *f, size_t i);

/* ---- solvers ----------------------------------------------------------- */

/* The formula may be freed independently; the solver keeps it alive. */
posat_solver *posat_solver_new(const posat_formula *f);
void posat_solver_free(posat_solver *s);

/* Options (set before solving):
 *   order            total | partial                        (default partial)
 *   heuristic        chrono | least-undos | most-undos |
 *                    least-deps | most-deps                  (default chrono)
 *   phase-saving     on | off                                (default off)
 *   matrix-threshold <N>                                     (default 4096)
 *   restarts         lbd | luby                              (default lbd)
 *   minimize         on | off                                (default on)
 *   deps-count       closure | direct                        (default closure)
 *   seed             <N>                                     (default 0)
 *   conflict-budget  <N>                                     (default none)
 *   check-invariants on | off                                (default off)
 */
posat_status posat_solver_set_option(posat_solver *s, const char *name, const char *value);

posat_verdict posat_solver_solve(posat_solver *s);

/* After POSAT_SAT: +1/-1 for a true/false variable (1-based DIMACS index),
 * 0 when unavailable. */
int posat_solver_model_value(const posat_solver *s, int var);

/* Re-checks the model against the original formula by direct scan.
 * Returns 1 if it satisfies every clause, 0 otherwise. */
int posat_solver_verify_model(const posat_solver *s);

/* Unknown verdicts only: 1 if the conflict budget ran out, 2 if the solve
 * was interrupted, 0 otherwise. */
int posat_solver_unknown_reason(const posat_solver *s);

/* Safe to call from another thread while solve() runs; the search stops at
 * the next conflict boundary. */
void posat_solver_interrupt(posat_solver *s);

/* Statistics of the last solve as a flat JSON object (one key per counter).
 * The string is owned by the solver and valid until the next call or free. */
const char *posat_solver_stats_json(posat_solver *s);

/* Result block in SAT-competition format ("s ..."/"v ..." lines). Owned by
 * the solver, same lifetime as stats_json. */
const char *posat_solver_result_text(posat_solver *s);

#ifdef __cplusplus
}
#endif

#endif /* POSAT_H */
