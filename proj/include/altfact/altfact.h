/*
 * Copyright (c) 2026 The altfact Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the altfact shared library: evaluation of the alternating
 * factorial continuation A(z), its companion A1(z), their residues and
 * principal values at the integer poles, the library constants, and the
 * built-in consistency suites.
 *
 * All functions return AF_OK (0) on success or a nonzero AF_E* status.
 * af_last_error() describes the most recent failure on the calling thread.
 */

#ifndef ALTFACT_H
#define ALTFACT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AF_API __declspec(dllexport)
#else
#define AF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* status codes */
#define AF_OK 0
#define AF_EUSAGE 1     /* invalid arguments / configuration */
#define AF_EDOMAIN 2    /* outside the mathematical domain */
#define AF_EPOLE 3      /* inside the guard disc of a pole */
#define AF_ENOCONV 4    /* iteration budget exhausted */
#define AF_EOVERFLOW 5  /* result does not fit a double */
#define AF_EINTERNAL 6

/* functions */
#define AF_FUNC_A 0
#define AF_FUNC_A1 1
#define AF_FUNC_GAMMA 2

/* evaluation methods */
#define AF_METHOD_AUTO 0
#define AF_METHOD_INTEGRAL 1
#define AF_METHOD_RECURRENCE 2
#define AF_METHOD_SERIES 3
#define AF_METHOD_CLOSED 4
#define AF_METHOD_SLAVIC 5

/* Opaque evaluation configuration. NULL everywhere means defaults. */
typedef struct af_config af_config;

AF_API af_config* af_config_new(void);
AF_API void af_config_free(af_config* cfg);
AF_API int af_config_set_tol(af_config* cfg, double tol_rel, double tol_abs);
AF_API int af_config_set_max_terms(af_config* cfg, int max_terms);
AF_API int af_config_set_quad_max_panels(af_config* cfg, int panels);
AF_API int af_config_set_pole_guard(af_config* cfg, double radius);

typedef struct af_result {
  double value_re;
  double value_im;
  double err_est;   /* estimated absolute error */
  int method;       /* AF_METHOD_* that produced the value (never AUTO) */
  long work;        /* series terms / quadrature panels / fraction steps */
} af_result;

/* Evaluate A or A1 at z = z_re + i z_im with the requested method. */
AF_API int af_eval(int func, int method, double z_re, double z_im,
                   const af_config* cfg, af_result* out);

typedef struct af_singularity {
  long long location;
  int order;          /* 0 regular point, 1 simple pole */
  double residue_re;
  double residue_im;
  double pv_re;       /* principal value (= value at regular points) */
  double pv_im;
} af_singularity;

/* Closed-form order/residue/principal value of A, A1 or Gamma at integer m. */
AF_API int af_singularity_info(int func, long long m, af_singularity* out);

typedef struct af_constant {
  char name[32];
  double value;
  char definition[128];
  char source[64];
} af_constant;

AF_API int af_constant_count(void);
AF_API int af_constant_get(int index, af_constant* out);

/* The three independent routes to L2 and the two routes to the Gompertz
 * constant; route agreement is part of the library's acceptance surface. */
AF_API int af_l2_routes(double out[3]);
AF_API int af_gompertz_routes(double out[2]);

typedef struct af_check_report {
  char name[48];
  long samples;
  double max_abs_residual;
  double max_rel_residual;
  int passed;
} af_check_report;

/* Run a consistency suite: "fe", "repr", "pv", "identities" or "all".
 * samples <= 0 selects per-suite defaults. Returns the number of reports
 * written (<= capacity), or a negative AF_E* status. Deterministic for a
 * fixed seed. */
AF_API int af_check_run(const char* suite, long samples, uint64_t seed,
                        const af_config* cfg, af_check_report* out,
                        int capacity);

/* Nearest integer to re(z) and the distance |z - m|. */
AF_API int af_nearest_integer(double z_re, double z_im, long long* m,
                              double* dist);

AF_API const char* af_status_str(int status);
AF_API const char* af_last_error(void);
AF_API const char* af_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ALTFACT_H */
