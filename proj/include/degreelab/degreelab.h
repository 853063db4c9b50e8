/* Copyright 2026 The degreelab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the degreelab engine.
 *
 * The engine computes graded invariants of homogeneous ideals over a prime
 * field (Groebner bases, generic initial ideals, Hilbert data, regularity,
 * the extremal degree bdeg, Macaulay-representation bounds) and invariants
 * of finite-length modules presented by matrices of linear forms (length,
 * socle, Matlis duals, Dilworth numbers).
 *
 * Every dl_run_* call produces a single JSON document with a stable schema:
 * keys are sorted, all numbers are exact integers, and identical inputs plus
 * identical options produce byte-identical output.  Strings returned through
 * `char **` out-parameters are heap-allocated and must be released with
 * dl_string_free().
 */

#ifndef DEGREELAB_DEGREELAB_H
#define DEGREELAB_DEGREELAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DEGREELAB_API __declspec(dllexport)
#else
#define DEGREELAB_API __attribute__((visibility("default")))
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_ERR_PARSE = 1,      /* malformed input text */
  DL_ERR_DOMAIN = 2,     /* parameter outside the documented range */
  DL_ERR_GENERICITY = 3, /* randomized protocol failed to reach agreement */
  DL_ERR_CHECK = 4,      /* an internal cross-check or invariant failed */
  DL_ERR_BUDGET = 5,     /* enumeration budget exceeded */
  DL_ERR_INTERNAL = 6    /* unexpected condition; please report */
} dl_status;

/* Opaque handle for a parsed homogeneous ideal (ring + generators). */
typedef struct dl_ideal dl_ideal;

/* Opaque handle for a parsed pencil of scalar matrices A_1..A_n, i.e. the
 * matrix of linear forms sum_i x_i * A_i. */
typedef struct dl_pencil dl_pencil;

/* Options shared by the runners.  Zero-initialise via dl_options_default().
 * `degree_cap` <= 0 selects the default cap (max generator degree of the
 * reduced basis + number of variables). */
typedef struct dl_options {
  uint64_t seed;
  int32_t trials;     /* max gin trials, default 12 */
  int32_t agreement;  /* consecutive agreements required, default 3 */
  int32_t degree_cap; /* Hilbert table cap, default 0 = automatic */
  int32_t jobs;       /* corpus worker threads, default 1 */
  int32_t item;       /* corpus: replay only this item, default -1 = all */
} dl_options;

DEGREELAB_API dl_options dl_options_default(void);

DEGREELAB_API const char *dl_version(void);

/* Releases a string returned by any dl_* call.  NULL is allowed. */
DEGREELAB_API void dl_string_free(char *s);

/* Parses the ideal file format:
 *   ring n=<int> char=<prime> vars=<name>,<name>,...
 *   gens:
 *   <one polynomial per line, e.g. x^2+3*x*y>
 * On failure returns DL_ERR_PARSE and, if `err` is non-NULL, stores a
 * diagnostic with line and column. */
DEGREELAB_API dl_status dl_ideal_parse(const char *text, dl_ideal **out,
                                       char **err);
DEGREELAB_API void dl_ideal_free(dl_ideal *ideal);

/* Parses the pencil file format:
 *   pencil n=<vars> char=<prime> rows=<d> cols=<m>
 *   matrix:
 *   <rows x cols integer entries, one row per line>   (n times)
 */
DEGREELAB_API dl_status dl_pencil_parse(const char *text, dl_pencil **out,
                                        char **err);
DEGREELAB_API void dl_pencil_free(dl_pencil *pencil);

/* Ideal-valued commands.  Each writes a JSON report to *json_out. */
DEGREELAB_API dl_status dl_run_gb(const dl_ideal *ideal,
                                  const dl_options *opts, char **json_out,
                                  char **err);
DEGREELAB_API dl_status dl_run_initial(const dl_ideal *ideal,
                                       const dl_options *opts, char **json_out,
                                       char **err);
DEGREELAB_API dl_status dl_run_sat(const dl_ideal *ideal,
                                   const dl_options *opts, char **json_out,
                                   char **err);
DEGREELAB_API dl_status dl_run_nilpotency(const dl_ideal *ideal,
                                          const dl_options *opts,
                                          char **json_out, char **err);
DEGREELAB_API dl_status dl_run_gin(const dl_ideal *ideal,
                                   const dl_options *opts, char **json_out,
                                   char **err);
DEGREELAB_API dl_status dl_run_hilbert(const dl_ideal *ideal,
                                       const dl_options *opts, char **json_out,
                                       char **err);
DEGREELAB_API dl_status dl_run_betti(const dl_ideal *ideal,
                                     const dl_options *opts, char **json_out,
                                     char **err);
DEGREELAB_API dl_status dl_run_reg(const dl_ideal *ideal,
                                   const dl_options *opts, char **json_out,
                                   char **err);
DEGREELAB_API dl_status dl_run_depth(const dl_ideal *ideal,
                                     const dl_options *opts, char **json_out,
                                     char **err);
DEGREELAB_API dl_status dl_run_standard(const dl_ideal *ideal,
                                        const dl_options *opts,
                                        char **json_out, char **err);
DEGREELAB_API dl_status dl_run_bdeg(const dl_ideal *ideal,
                                    const dl_options *opts, char **json_out,
                                    char **err);
DEGREELAB_API dl_status dl_run_rednum(const dl_ideal *ideal,
                                      const dl_options *opts, char **json_out,
                                      char **err);

/* Macaulay representation of e at level r, optionally shifted by d >= 0. */
DEGREELAB_API dl_status dl_run_macaulay(int64_t e, int64_t r, int64_t d,
                                        char **json_out, char **err);

/* Formula evaluators.  `kind` is one of:
 *   "homog"    params: n, e, r, d, g
 *   "gen-a"    params: deg_r (deg R), deg_ri (deg R/I), Deg_ri, d, g, r
 *   "gen-b"    params: Deg, s, d
 *   "gen-c"    params: Deg, d
 *   "nu-deg", "type-deg"  params: Deg
 *   "embcod"   params: n (embdim), d (dim)
 * Unused params are ignored; pass 0. */
typedef struct dl_bound_params {
  int64_t n, e, r, d, g, s;
  int64_t deg_r, deg_ri, Deg;
} dl_bound_params;

DEGREELAB_API dl_status dl_run_bound(const char *kind,
                                     const dl_bound_params *params,
                                     char **json_out, char **err);

/* Builds the Borel-fixed ideal attaining the homog bound for the given
 * parameters and reports its invariants. */
DEGREELAB_API dl_status dl_run_extremal(int64_t n, int64_t c, int64_t r,
                                        int64_t e, char **json_out,
                                        char **err);

/* Pencil commands; `what` is one of "length", "finlen", "dil", "dual",
 * "socle". */
DEGREELAB_API dl_status dl_run_pencil(const dl_pencil *pencil, const char *what,
                                      const dl_options *opts, char **json_out,
                                      char **err);

/* Randomized corpus run; `profile` is "small" or "medium". */
DEGREELAB_API dl_status dl_run_corpus(const char *profile,
                                      const dl_options *opts, char **json_out,
                                      char **err);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DEGREELAB_DEGREELAB_H */
