#ifndef POLYCAUCHY_H
#define POLYCAUCHY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_ARGUMENT = 2,
  PC_STATUS_DOMAIN_ERROR = 3,
  PC_STATUS_PANIC = 4,
} PcStatus;

// A polynomial with rational coefficients.
typedef struct PcPolynomial PcPolynomial;

// The outcome of a verification run.
typedef struct PcReport PcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the most recent failure on this thread, or NULL.
// Release with `pc_string_free`.
char *pc_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library.
void pc_string_free(char *s);

// Computes `Ã_n^{(r,k)}(x)`.
//
// # Safety
// `out` must be valid for writes.
enum PcStatus pc_mixed_oracle(size_t n, size_t r, int64_t k, struct PcPolynomial **out);

// Computes `Ã_n^{(r,k)}(x0)` for `x0` given as `"p"` or `"p/q"`.
//
// # Safety
// `x` must be a NUL-terminated string and `out` valid for writes.
enum PcStatus pc_mixed_value(size_t n, size_t r, int64_t k, const char *x, char **out);

// Degree of `p`, or -1 for the zero polynomial.
//
// # Safety
// `p` must be a live handle and `out` valid for writes.
enum PcStatus pc_polynomial_degree(const struct PcPolynomial *p, int64_t *out);

// Coefficient of `x^j` in `p`.
//
// # Safety
// `p` must be a live handle and `out` valid for writes.
enum PcStatus pc_polynomial_coeff(const struct PcPolynomial *p, size_t j, char **out);

// Evaluates `p` at `x`.
//
// # Safety
// `p` must be a live handle, `x` a NUL-terminated string and `out` valid
// for writes.
enum PcStatus pc_polynomial_eval(const struct PcPolynomial *p, const char *x, char **out);

// Ascending coefficients as a JSON array of strings.
//
// # Safety
// `p` must be a live handle and `out` valid for writes.
enum PcStatus pc_polynomial_to_json(const struct PcPolynomial *p, char **out);

// # Safety
// `p` must be NULL or a handle not yet freed.
void pc_polynomial_free(struct PcPolynomial *p);

// Runs the default grid with `n <= n_max`. `identities` is a
// comma-separated list of identity keys, or NULL for all of them.
//
// # Safety
// `identities` must be NULL or a NUL-terminated string; `out` must be valid
// for writes.
enum PcStatus pc_verify(size_t n_max, const char *identities, struct PcReport **out);

// # Safety
// `report` must be NULL or a live handle.
size_t pc_report_pass(const struct PcReport *report);

// # Safety
// `report` must be NULL or a live handle.
size_t pc_report_fail(const struct PcReport *report);

// # Safety
// `report` must be NULL or a live handle.
size_t pc_report_skipped(const struct PcReport *report);

// # Safety
// `report` must be a live handle and `out` valid for writes.
enum PcStatus pc_report_to_json(const struct PcReport *report, char **out);

// # Safety
// `report` must be NULL or a handle not yet freed.
void pc_report_free(struct PcReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYCAUCHY_H */
