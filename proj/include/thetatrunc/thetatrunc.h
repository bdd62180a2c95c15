/*
 * C interface to libthetatrunc.
 *
 * Series are returned as opaque tt_series handles owned by the caller and
 * released with tt_series_free. Every fallible call returns a tt_status; on
 * failure a human-readable message for the calling thread is available from
 * tt_last_error_message() until the next failing call on that thread.
 *
 * Theta parameters a and c may be half-integers, so they cross the boundary
 * as twice their value (a_twice = 9 means a = 9/2).
 */
#ifndef THETATRUNC_H
#define THETATRUNC_H

#include <stddef.h>

#if defined(_WIN32)
#define TT_API __declspec(dllexport)
#else
#define TT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tt_status {
  TT_OK = 0,
  TT_E_INVALID_ARGUMENT = 1,
  TT_E_NON_UNIT_CONSTANT_TERM = 2,
  TT_E_NON_INTEGRAL_EXPONENT = 3,
  TT_E_INSUFFICIENT_RANGE = 4,
  TT_E_UNSUPPORTED_ORDER = 5,
  TT_E_SECTOR_VIOLATION = 6,
  TT_E_MAIN_ARC_VIOLATION = 7,
  TT_E_BANDWIDTH_TOO_SMALL = 8,
  TT_E_RANGE_VIOLATION = 9,
  TT_E_BUFFER_TOO_SMALL = 10,
  TT_E_INTERNAL = 11
} tt_status;

typedef enum tt_family {
  TT_FAMILY_C = 0,
  TT_FAMILY_CPRIME = 1,
  TT_FAMILY_D = 2,
  TT_FAMILY_DPRIME = 3
} tt_family;

typedef enum tt_form { TT_FORM_BESSEL = 0, TT_FORM_ELEMENTARY = 1 } tt_form;

/* B: pair denominator, circle radius from 3RN. BPRIME: triple, from 2RN. */
typedef enum tt_kind { TT_KIND_B = 0, TT_KIND_BPRIME = 1 } tt_kind;

typedef struct tt_theta_params {
  long a_twice;
  long c_twice;
  long d;
} tt_theta_params;

typedef struct tt_logvalue {
  int sign;
  double lnmag;
} tt_logvalue;

typedef struct tt_arc_split {
  double main_re, main_im;
  double error_re, error_im;
  double ratio;
} tt_arc_split;

typedef struct tt_series tt_series;

TT_API const char* tt_status_string(tt_status status);
TT_API const char* tt_last_error_message(void);

/* ---- exact series ------------------------------------------------------ */

TT_API tt_status tt_family_validate(tt_family family, long R, long S, long k);

/* via_decomposition != 0 assembles the series from its four theta blocks. */
TT_API tt_status tt_family_series(tt_family family, long R, long S, long k, long order,
                                  int via_decomposition, tt_series** out);

TT_API tt_status tt_block_series(const tt_theta_params* p, long R, long S, tt_kind kind,
                                 long order, tt_series** out);

TT_API void tt_series_free(tt_series* s);
TT_API long tt_series_order(const tt_series* s);

/* Writes the decimal coefficient of q^n with a trailing NUL. *len receives the
 * string length; TT_E_BUFFER_TOO_SMALL when cap <= *len. buf may be NULL to query. */
TT_API tt_status tt_series_coeff_string(const tt_series* s, long n, char* buf, size_t cap,
                                        size_t* len);
TT_API tt_status tt_series_coeff_sign(const tt_series* s, long n, int* sign);
TT_API tt_status tt_series_coeff_log(const tt_series* s, long n, tt_logvalue* out);

/* Lowest differing exponent, or -1 when equal up to the common order. */
TT_API long tt_series_first_mismatch(const tt_series* a, const tt_series* b);

/* ---- exact identities (mismatch = -1 on agreement) --------------------- */

TT_API tt_status tt_identity_pentagonal(long order, long* mismatch);
TT_API tt_status tt_identity_truncated_pentagonal(long k, long order, long* mismatch);
TT_API tt_status tt_identity_quintuple(long R, long S, long order, long* mismatch);

/* Definition versus decomposition. first_term_offset shifts the d-value of the
 * first theta block (fault injection); pass 0 for the real check. */
TT_API tt_status tt_identity_decomposition(tt_family family, long R, long S, long k, long order,
                                           long first_term_offset, long* mismatch);

/* ---- main terms -------------------------------------------------------- */

TT_API tt_status tt_mainterm_family(tt_family family, long R, long S, long k, long N,
                                    tt_form form, tt_logvalue* out);
TT_API tt_status tt_mainterm_block(const tt_theta_params* p, long R, long S, tt_kind kind, long N,
                                   tt_logvalue* out);

/* ---- circle method ----------------------------------------------------- */

TT_API tt_status tt_minimal_samples(long R, tt_kind kind, long N, long* samples);
TT_API tt_status tt_wright_coefficient(const tt_theta_params* p, long R, long S, tt_kind kind,
                                       long N, long samples, double* value);
TT_API tt_status tt_arc_split_diagnostic(const tt_theta_params* p, long R, long S, tt_kind kind,
                                         long N, long samples, tt_arc_split* out);

#ifdef __cplusplus
}
#endif

#endif /* THETATRUNC_H */
