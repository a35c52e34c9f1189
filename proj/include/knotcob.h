/* knotcob: exact cobordism invariants of algebraic knots attached to
 * weighted homogeneous and Brieskorn polynomials.
 *
 * C interface over the C++ core.  All functions return kc_status; KC_OK
 * means success and any other value leaves outputs untouched.  A message
 * for the most recent failure on the calling thread is available from
 * kc_last_error().  Strings returned through char** are heap-allocated and
 * must be released with kc_string_free(); handles must be released with
 * their matching *_free function.  All handles are immutable after
 * creation and may be shared across threads.
 */

#ifndef KNOTCOB_H
#define KNOTCOB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_PARSE,
  KC_ERR_VALIDATION,
  KC_ERR_NOT_DIVISIBLE,
  KC_ERR_DENOMINATOR_MISMATCH,
  KC_ERR_NOT_COPRIME,
  KC_ERR_NON_INTEGRAL_COEFFICIENT,
  KC_ERR_NOT_GALOIS_INVARIANT,
  KC_ERR_NEGATIVE_MULTIPLICITY,
  KC_ERR_NOT_POLYNOMIAL,
  KC_ERR_NEGATIVE_COEFFICIENT,
  KC_ERR_NON_INTEGRAL_MILNOR_NUMBER,
  KC_ERR_PARITY,
  KC_ERR_VARIABLE_COUNT_MISMATCH,
  KC_ERR_INCONSISTENT,
  KC_ERR_INVALID_ARGUMENT,
  KC_ERR_INTERNAL
} kc_status;

/* Stable name of a status value, e.g. "NotDivisible". */
const char* kc_status_name(kc_status status);

/* Message for the most recent failure on this thread ("" when none). */
const char* kc_last_error(void);

void kc_string_free(char* text);

/* ---- inputs: exponent tuples ("2,3,7") or weight systems ("5/2,3") ---- */

typedef struct kc_input kc_input;

kc_status kc_input_parse(const char* text, kc_input** out);
void kc_input_free(kc_input* input);
kc_status kc_input_render(const kc_input* input, char** out);
/* 1 when every entry is an integer exponent, else 0. */
kc_status kc_input_is_integral(const kc_input* input, int32_t* out);
kc_status kc_input_variable_count(const kc_input* input, int32_t* out);
/* Appends one quadratic variable. */
kc_status kc_input_stabilize(const kc_input* input, kc_input** out);

/* ---- weight polynomial P_f and scalar invariants ---- */

typedef struct kc_poly kc_poly;

kc_status kc_pf_polynomial(const kc_input* input, kc_poly** out);
void kc_poly_free(kc_poly* poly);
kc_status kc_poly_parse(const char* text, kc_poly** out);
/* "t^(5/6) + t^(7/6)" */
kc_status kc_poly_render(const kc_poly* poly, char** out);
kc_status kc_poly_equal(const kc_poly* a, const kc_poly* b, int32_t* out);
/* Coefficient sum as a decimal string (the Milnor number for P_f). */
kc_status kc_poly_eval_at_one(const kc_poly* poly, char** decimal_out);
/* prod (w_j - 1) as a decimal string. */
kc_status kc_milnor_number(const kc_input* input, char** decimal_out);
/* JSON document describing P_f of the input. */
kc_status kc_pf_document(const kc_input* input, char** json_out);

/* ---- characteristic polynomial divisor ---- */

typedef struct kc_divisor kc_divisor;

kc_status kc_char_divisor(const kc_input* input, kc_divisor** out);
void kc_divisor_free(kc_divisor* divisor);
kc_status kc_divisor_render(const kc_divisor* divisor, char** out);
kc_status kc_divisor_equal(const kc_divisor* a, const kc_divisor* b,
                           int32_t* out);
kc_status kc_divisor_mod2(const kc_divisor* divisor, kc_divisor** out);
kc_status kc_delta_document(const kc_input* input, char** json_out);
kc_status kc_delta_text(const kc_input* input, char** out);

/* ---- equivariant signatures ---- */

/* Signature table of the input (stabilized once internally when the
 * variable count is even); text lines or a JSON document. */
kc_status kc_sig_document(const kc_input* input, char** json_out);
kc_status kc_sig_text(const kc_input* input, char** out);
/* Total signature as a decimal string. */
kc_status kc_total_signature(const kc_input* input, char** decimal_out);

/* ---- pairwise criteria ---- */

/* verdict: 1 = Witt equivalent over R, 0 = not. */
kc_status kc_witt(const kc_input* a, const kc_input* b, int32_t* verdict);
kc_status kc_witt_document(const kc_input* a, const kc_input* b,
                           char** json_out);
/* Numeric cotangent cross-check; inputs must be integer exponent tuples. */
kc_status kc_cot(const kc_input* a, const kc_input* b, double tolerance,
                 int32_t* verdict);
kc_status kc_cot_document(const kc_input* a, const kc_input* b,
                          double tolerance, char** json_out);
kc_status kc_rigidity_hypothesis(const kc_input* a, const kc_input* b,
                                 int32_t* holds);

/* Full criterion report for a pair of integer exponent tuples. */
typedef struct kc_report kc_report;

typedef enum kc_verdict {
  KC_VERDICT_COBORDANT = 0,
  KC_VERDICT_NOT_COBORDANT = 1,
  KC_VERDICT_UNKNOWN_HYPOTHESIS_NOT_MET = 2
} kc_verdict;

kc_status kc_report_run(const kc_input* a, const kc_input* b, double tolerance,
                        kc_report** out);
void kc_report_free(kc_report* report);
kc_status kc_report_verdict(const kc_report* report, kc_verdict* out);
kc_status kc_report_json(const kc_report* report, char** out);
kc_status kc_report_text(const kc_report* report, char** out);
kc_status kc_report_csv(const kc_report* report, char** out);

/* ---- exponent recovery ---- */

/* Recovers `count` exponents from the mod-2 characteristic divisor of the
 * input tuple (count <= 0 means the input's variable count) and reports
 * whether the round trip reproduced the input. */
kc_status kc_recover_document(const kc_input* exponents, int64_t count,
                              char** json_out);
kc_status kc_recover_text(const kc_input* exponents, int64_t count,
                          char** out);
/* round_trip: 1 when recovery reproduced the sorted input exponents. */
kc_status kc_recover_round_trip(const kc_input* exponents, int64_t count,
                                int32_t* round_trip);

/* ---- verification harness ---- */

typedef struct kc_verification kc_verification;

typedef struct kc_verify_config {
  /* one of: theorem2, twovar, threevar, necessity, equivalence, example3,
   * suite */
  const char* check;
  int32_t variables;
  int64_t max_exponent;
  /* one of: none, nomultiple, distinct */
  const char* filter;
  uint64_t seed;
  int32_t trials;
  int32_t jobs;
} kc_verify_config;

kc_status kc_verify(const kc_verify_config* config, kc_verification** out);
/* The (p..., 8,8,4,4) vs (p..., 6,6,6,6) family for one prefix tuple. */
kc_status kc_example3(int32_t n, const int64_t* ps, int32_t ps_len,
                      kc_verification** out);
void kc_verification_free(kc_verification* verification);
kc_status kc_verification_pass(const kc_verification* verification,
                               int32_t* pass);
kc_status kc_verification_json(const kc_verification* verification,
                               char** out);
kc_status kc_verification_text(const kc_verification* verification,
                               char** out);
kc_status kc_verification_csv(const kc_verification* verification, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KNOTCOB_H */
