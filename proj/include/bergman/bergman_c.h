/*
 * Copyright 2026 The Bergman Kernels Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the bergman library. All functions return a bk_status; on
 * failure bk_last_error() describes the most recent error on the calling
 * thread. Domains are named "d1".."d4" or "ball<n>". */
#ifndef BERGMAN_C_H_
#define BERGMAN_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(BERGMAN_BUILDING_LIBRARY)
#define BK_API __attribute__((visibility("default")))
#else
#define BK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_PRECONDITION_VIOLATION = 1,
  BK_DIVERGENT_INPUT = 2,
  BK_NON_CONVERGENCE = 3,
  BK_BRANCH_CUT = 4,
  BK_SINGULAR_INPUT = 5,
  BK_DIVISION_BY_ZERO = 6,
  BK_DEGENERATE_INPUT = 7,
  BK_INVALID_INDEX = 8,
  BK_DIMENSION_MISMATCH = 9,
  BK_SAMPLER_STALL = 10,
  BK_PARSE_ERROR = 11,
  BK_INVALID_ARGUMENT = 12, /* null pointer, buffer too small */
  BK_INTERNAL_ERROR = 13
} bk_status;

typedef struct bk_complex {
  double re;
  double im;
} bk_complex;

/* Opaque JSON report produced by scans and verification suites. */
typedef struct bk_report bk_report_t;

typedef enum bk_volume_method {
  BK_VOLUME_FORMULA = 0,
  BK_VOLUME_QUADRATURE = 1,
  BK_VOLUME_MONTE_CARLO = 2
} bk_volume_method;

typedef struct bk_verify_options {
  uint64_t samples; /* 0: suite default */
  uint64_t seed;
  double tol;         /* 0: suite default */
  const char* domain; /* NULL: all domains the suite covers */
} bk_verify_options;

BK_API const char* bk_version(void);
BK_API const char* bk_last_error(void);
BK_API const char* bk_status_name(bk_status status);

/* Parsing helpers (complex literal grammar: a, bi, a+bi, a-bi). */
BK_API bk_status bk_parse_point(const char* text, bk_complex* out, size_t capacity, size_t* count);
BK_API bk_status bk_parse_index(const char* text, int* out, size_t capacity, size_t* count);
BK_API bk_status bk_domain_dim(const char* domain, size_t* dim);

BK_API bk_status bk_contains(const char* domain, const bk_complex* z, size_t n, int* inside);

/* Closed-form kernel. With allow_series != 0 a degenerate closed form falls
 * back to the series oracle; *used_series (optional) reports whether it did. */
BK_API bk_status bk_kernel(const char* domain, const bk_complex* z, const bk_complex* w, size_t n,
                           int allow_series, bk_complex* out, int* used_series);
/* Orthonormal-series oracle. max_degree <= 0 and tol <= 0 select defaults. */
BK_API bk_status bk_kernel_series(const char* domain, const bk_complex* z, const bk_complex* w,
                                  size_t n, int max_degree, double tol, bk_complex* out,
                                  double* tail_estimate, int* terms_used);

BK_API bk_status bk_monomial_norm(const char* domain, const int* alpha, size_t n, double* out);
BK_API bk_status bk_monomial_norm_quadrature(const char* domain, const int* alpha, size_t n,
                                             int nodes, double* out);
BK_API bk_status bk_volume(const char* domain, bk_volume_method method, uint64_t samples,
                           uint64_t seed, double* value, double* std_error);

BK_API bk_status bk_biholomorphism_check(const bk_complex* z, const bk_complex* w, double* residual);
BK_API bk_status bk_proof_inequality_check(const bk_complex* z, const bk_complex* w, int* holds);

BK_API bk_status bk_zero_scan(const char* domain, uint64_t pairs, uint64_t seed,
                              double zero_threshold, bk_report_t** out);
BK_API bk_status bk_verify(const char* suite, const bk_verify_options* options, bk_report_t** out);

/* Canonical JSON text of the report; valid until bk_report_free. */
BK_API const char* bk_report_json(const bk_report_t* report);
/* 1 when every check passed (scan: no zero hits and no symmetry or positivity
 * violations), else 0. */
BK_API int bk_report_passed(const bk_report_t* report);
BK_API void bk_report_free(bk_report_t* report);

#ifdef __cplusplus
}
#endif

#endif /* BERGMAN_C_H_ */
