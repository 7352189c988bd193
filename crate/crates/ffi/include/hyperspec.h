#ifndef HYPERSPEC_H
#define HYPERSPEC_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Table cap used by the command-line tool unless overridden.
 */
#define HS_DEFAULT_MAX_TABLE_N 26

typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_NULL_POINTER = 1,
  /**
   * The requested table exceeds the cap passed in `max_table_n`.
   */
  HS_STATUS_RESOURCE_LIMIT = 2,
  HS_STATUS_INVALID_ARGUMENT = 3,
  HS_STATUS_PARSE_ERROR = 4,
  /**
   * A caller buffer is shorter than the table.
   */
  HS_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * A bug inside the library; the message has details.
   */
  HS_STATUS_INTERNAL = 6,
} HsStatus;

/**
 * Result of a certification run.
 */
typedef struct HsCertificate HsCertificate;

/**
 * Complex-valued function on `{-1, 1}^n`.
 */
typedef struct HsFunction HsFunction;

/**
 * Parameter sequence `a_1..a_n`, each in `(0, 1]`.
 */
typedef struct HsParams HsParams;

/**
 * Fourier-Walsh coefficients of a function.
 */
typedef struct HsSpectrum HsSpectrum;

typedef struct HsStats {
  double l2_norm;
  double linf_norm;
  double influence;
  double entropy;
  double total_weight;
} HsStats;

/**
 * Closed-form statistics of the unnormalized `P_n`.
 */
typedef struct HsClosedForm {
  size_t n;
  double log2_norm_sq;
  double l2_norm;
  double linf_lower;
  double linf_upper;
  double influence;
  double log2_influence;
  double entropy;
  double log2_entropy;
  double total_mass;
} HsClosedForm;

/**
 * Closed-form statistics of the unit-norm `P_n / ||P_n||_2`.
 */
typedef struct HsNormalizedClosedForm {
  double influence;
  double entropy;
  double entropy_lower_bound;
} HsNormalizedClosedForm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL if none.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *hs_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hs_string_free(char *s);

/**
 * Parameter sequence from `len` values in `(0, 1]`.
 *
 * # Safety
 * `a` must point to `len` doubles (it may be NULL when `len` is 0).
 */
enum HsStatus hs_params_new(const double *a, size_t len, struct HsParams **out);

/**
 * `a_i = 1/sqrt(n)` for `n >= 1`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_params_theorem(size_t n, struct HsParams **out);

/**
 * `a_i = sqrt(a/n)` for `1 < a < n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_params_remark3(size_t n, double a, struct HsParams **out);

/**
 * Number of parameters, or 0 for NULL.
 *
 * # Safety
 * `params` must be NULL or a live handle.
 */
size_t hs_params_len(const struct HsParams *params);

/**
 * # Safety
 * `params` must be NULL or a live handle; it is invalid afterwards.
 */
void hs_params_free(struct HsParams *params);

/**
 * Function of dimension `n` from `len = 2^n` values. `im` may be NULL for a
 * real function.
 *
 * # Safety
 * `re` (and `im` unless NULL) must point to `len` doubles.
 */
enum HsStatus hs_function_from_values(size_t n,
                                      const double *re,
                                      const double *im,
                                      size_t len,
                                      struct HsFunction **out);

/**
 * Dimension `n`, or 0 for NULL.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
size_t hs_function_n(const struct HsFunction *f);

/**
 * Table length `2^n`, or 0 for NULL.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
size_t hs_function_len(const struct HsFunction *f);

/**
 * Copies the value table. `im` may be NULL to skip imaginary parts.
 *
 * # Safety
 * `re` (and `im` unless NULL) must have room for `len` doubles.
 */
enum HsStatus hs_function_values(const struct HsFunction *f, double *re, double *im, size_t len);

/**
 * # Safety
 * `f` must be NULL or a live handle; it is invalid afterwards.
 */
void hs_function_free(struct HsFunction *f);

/**
 * Both recursion tables `P_n` and `Q_n`.
 *
 * # Safety
 * Pointers must be valid; `params` must be a live handle.
 */
enum HsStatus hs_build_pq(const struct HsParams *params,
                          uint32_t max_table_n,
                          struct HsFunction **p_out,
                          struct HsFunction **q_out);

/**
 * Real unit-norm `P_n / ||P_n||_2`.
 *
 * # Safety
 * Pointers must be valid; `params` must be a live handle.
 */
enum HsStatus hs_normalized_real(const struct HsParams *params,
                                 uint32_t max_table_n,
                                 struct HsFunction **out);

/**
 * Modulus-one `(P_n + i Q_n) / (sqrt 2 ||P_n||_2)`.
 *
 * # Safety
 * Pointers must be valid; `params` must be a live handle.
 */
enum HsStatus hs_unimodular_complex(const struct HsParams *params,
                                    uint32_t max_table_n,
                                    struct HsFunction **out);

/**
 * Classical Rudin-Shapiro function `2^{-n/2} P_n` (all `a_i = 1`).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_classical_normalized(size_t n, uint32_t max_table_n, struct HsFunction **out);

/**
 * `n^{-1/2} sum eps_i`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_normalized_sum(size_t n, uint32_t max_table_n, struct HsFunction **out);

/**
 * `n^{-1/2} sum eps_i` clamped to `[-c, c]`, divided by its L2 norm when
 * `normalize` is set.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_neeman_function(size_t n,
                                 double c,
                                 bool normalize,
                                 uint32_t max_table_n,
                                 struct HsFunction **out);

/**
 * `(P_n(x), Q_n(x))` at the point whose bit `i-1` set means `eps_i = -1`,
 * without building a table. Needs `n <= 64`.
 *
 * # Safety
 * Pointers must be valid; `params` must be a live handle.
 */
enum HsStatus hs_evaluate_at(const struct HsParams *params, uint64_t x, double *p, double *q);

/**
 * `f^(A) = 2^{-n} sum_x f(x) W_A(x)` for every subset mask `A`.
 *
 * # Safety
 * Pointers must be valid; `f` must be a live handle.
 */
enum HsStatus hs_walsh_transform(const struct HsFunction *f,
                                 uint32_t max_table_n,
                                 struct HsSpectrum **out);

/**
 * Rebuilds the function from its coefficients.
 *
 * # Safety
 * Pointers must be valid; `s` must be a live handle.
 */
enum HsStatus hs_inverse_transform(const struct HsSpectrum *s,
                                   uint32_t max_table_n,
                                   struct HsFunction **out);

/**
 * Number of coefficients `2^n`, or 0 for NULL.
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
size_t hs_spectrum_len(const struct HsSpectrum *s);

/**
 * Copies the coefficients. `im` may be NULL to skip imaginary parts.
 *
 * # Safety
 * `re` (and `im` unless NULL) must have room for `len` doubles.
 */
enum HsStatus hs_spectrum_coeffs(const struct HsSpectrum *s, double *re, double *im, size_t len);

/**
 * `sum_A |f^(A)|^2 |A|`.
 *
 * # Safety
 * `s` must be a live handle and `out` valid.
 */
enum HsStatus hs_spectrum_influence(const struct HsSpectrum *s, double *out);

/**
 * Base-2 entropy of the squared coefficient magnitudes.
 *
 * # Safety
 * `s` must be a live handle and `out` valid.
 */
enum HsStatus hs_spectrum_entropy(const struct HsSpectrum *s, double *out);

/**
 * # Safety
 * `s` must be NULL or a live handle; it is invalid afterwards.
 */
void hs_spectrum_free(struct HsSpectrum *s);

/**
 * Norms, influence and entropy of `f` by brute force.
 *
 * # Safety
 * `f` must be a live handle and `out` valid.
 */
enum HsStatus hs_stats(const struct HsFunction *f, uint32_t max_table_n, struct HsStats *out);

/**
 * Closed-form statistics of `P_n`; no table is built.
 *
 * # Safety
 * `params` must be a live handle and `out` valid.
 */
enum HsStatus hs_closed_form(const struct HsParams *params, struct HsClosedForm *out);

/**
 * Closed-form influence and entropy of `P_n / ||P_n||_2`.
 *
 * # Safety
 * `params` must be a live handle and `out` valid.
 */
enum HsStatus hs_normalized_closed_form(const struct HsParams *params,
                                        struct HsNormalizedClosedForm *out);

/**
 * Real unit-norm function with `I < 1` and `H > (n/(n+1)) log2 n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_certify_theorem1(size_t n, uint32_t max_table_n, struct HsCertificate **out);

/**
 * Modulus-one function with the same bounds.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_certify_theorem2(size_t n, uint32_t max_table_n, struct HsCertificate **out);

/**
 * Modulus-one bounds from the closed form plus a sampled modulus check;
 * works beyond the table cap.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_certify_theorem2_sampled(size_t n,
                                          size_t samples,
                                          uint64_t seed,
                                          struct HsCertificate **out);

/**
 * `a/2 < I < a` and `H > (a/2)(log2 n - log2 a)`, brute-forced when `n`
 * fits the cap.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_certify_remark3(size_t n,
                                 double a,
                                 uint32_t max_table_n,
                                 struct HsCertificate **out);

/**
 * Zero-mean lift `eps_{n+1} f` of the theorem-1 function.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_certify_remark2(size_t n, uint32_t max_table_n, struct HsCertificate **out);

/**
 * Classical Rudin-Shapiro properties.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_certify_classical_rs(size_t n, uint32_t max_table_n, struct HsCertificate **out);

/**
 * True when every check passed; false for NULL.
 *
 * # Safety
 * `cert` must be NULL or a live handle.
 */
bool hs_certificate_passed(const struct HsCertificate *cert);

/**
 * Number of checks, or 0 for NULL.
 *
 * # Safety
 * `cert` must be NULL or a live handle.
 */
size_t hs_certificate_check_count(const struct HsCertificate *cert);

/**
 * JSON rendering; free the result with [`hs_string_free`].
 *
 * # Safety
 * `cert` must be a live handle and `out` valid.
 */
enum HsStatus hs_certificate_to_json(const struct HsCertificate *cert, char **out);

/**
 * Key-value text rendering, one check per line; free with [`hs_string_free`].
 *
 * # Safety
 * `cert` must be a live handle and `out` valid.
 */
enum HsStatus hs_certificate_to_text(const struct HsCertificate *cert, char **out);

/**
 * # Safety
 * `cert` must be NULL or a live handle; it is invalid afterwards.
 */
void hs_certificate_free(struct HsCertificate *cert);

/**
 * Table file text (`n=<n> kind=<real|complex>` header, one row per point).
 *
 * # Safety
 * `f` must be a live handle and `out` valid.
 */
enum HsStatus hs_function_to_text(const struct HsFunction *f, char **out);

/**
 * Spectrum file text (`kind=spectrum`, two columns).
 *
 * # Safety
 * `s` must be a live handle and `out` valid.
 */
enum HsStatus hs_spectrum_to_text(const struct HsSpectrum *s, char **out);

/**
 * Parses a `real` or `complex` table file.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid.
 */
enum HsStatus hs_function_from_text(const char *text,
                                    uint32_t max_table_n,
                                    struct HsFunction **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERSPEC_H */
