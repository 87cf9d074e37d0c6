/*
   Copyright 2026 The ffmult Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#ifndef FFMULT_FFMULT_H
#define FFMULT_FFMULT_H

#include <stddef.h>
#include <stdint.h>

#if defined(FFMULT_BUILDING)
#define FFMULT_API __attribute__((visibility("default")))
#else
#define FFMULT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns one of these. Details of the last failure on the
 * calling thread are available from ffmult_last_error(). */
typedef enum ffmult_status {
  FFMULT_OK = 0,
  FFMULT_INVALID = 1,  /* bad argument or config */
  FFMULT_BUDGET = 2,   /* refused: estimated cost above the budget */
  FFMULT_INTERNAL = 3
} ffmult_status;

typedef struct ffmult_context ffmult_context;
typedef struct ffmult_function ffmult_function;

typedef struct ffmult_budgets {
  double enumeration;
  double evaluation;
  double group_size;
  uint64_t memo_entries;
} ffmult_budgets;

FFMULT_API const char* ffmult_version(void);
FFMULT_API const char* ffmult_last_error(void);
/* Frees strings returned through char** out-parameters. */
FFMULT_API void ffmult_string_free(char* s);

FFMULT_API void ffmult_default_budgets(ffmult_budgets* out);

/* GF(p^r) with monic irreducibles cached up to cache_degree (0 picks the
 * default). budgets may be NULL. */
FFMULT_API ffmult_status ffmult_context_create(uint32_t p, int r, int cache_degree, const ffmult_budgets* budgets,
                                               ffmult_context** out);
FFMULT_API void ffmult_context_free(ffmult_context* ctx);
FFMULT_API uint32_t ffmult_context_q(const ffmult_context* ctx);
FFMULT_API int ffmult_context_cache_degree(const ffmult_context* ctx);

/* A builtin name ("moebius", "liouville", "one") or a JSON descriptor. */
FFMULT_API ffmult_status ffmult_function_create(const ffmult_context* ctx, const char* descriptor,
                                                ffmult_function** out);
FFMULT_API void ffmult_function_free(ffmult_function* f);

/* f(g) for g = sum coeffs[j] x^j, each coefficient a field element code
 * in [0, q). */
FFMULT_API ffmult_status ffmult_function_eval(const ffmult_function* f, const uint32_t* coeffs, size_t len,
                                              double* re, double* im);

/* f on G_n indexed by polynomial code; re and im hold len = q^n slots. */
FFMULT_API ffmult_status ffmult_function_tabulate(const ffmult_function* f, int n, double* re, double* im,
                                                  size_t len);

/* E over the domain ("all", "nonzero", "monic") of f(g) t(g), where t is a
 * test descriptor: {"type": "one" | "phase" | "character", ...}. */
FFMULT_API ffmult_status ffmult_correlate(const ffmult_function* f, const char* test, int n, const char* domain,
                                          double* re, double* im);

FFMULT_API ffmult_status ffmult_distance(const ffmult_function* f, const ffmult_function* g, int N, int window_low,
                                         double* out);

FFMULT_API ffmult_status ffmult_halasz_product(const ffmult_function* f, int n, double* re, double* im);

/* domain is "monic" (degree exactly n) or "all" (G_n). */
FFMULT_API ffmult_status ffmult_mean_value(const ffmult_function* f, int n, const char* domain, double* re,
                                           double* im);

/* Gowers U^k norm of a function on G_n given by q^n values. */
FFMULT_API ffmult_status ffmult_gowers_norm(const ffmult_context* ctx, int n, const double* re, const double* im,
                                            size_t len, int k, double* out);
FFMULT_API ffmult_status ffmult_u2_fourier(const ffmult_context* ctx, int n, const double* re, const double* im,
                                           size_t len, double* out);

/* Validates config text. On success *normalized receives the normalized
 * JSON; on failure *diagnostics receives "source:line: error: ..." lines.
 * Either out-parameter may be NULL. */
FFMULT_API ffmult_status ffmult_config_validate(const char* text, const char* source, char** normalized,
                                                char** diagnostics);

/* Applies a "a.b.c=value" override to config text. */
FFMULT_API ffmult_status ffmult_config_override(const char* text, const char* assignment, char** out);

/* Validates and runs. With an empty output.path the table is returned in
 * *output; otherwise it is written to that path and *output is NULL. */
FFMULT_API ffmult_status ffmult_config_run(const char* text, const char* source, char** output,
                                           char** diagnostics);

/* JSON listing builtin functions, descriptor types and experiment kinds. */
FFMULT_API char* ffmult_list_builtins(void);

#ifdef __cplusplus
}
#endif

#endif /* FFMULT_FFMULT_H */
