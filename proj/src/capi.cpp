#include "knotcob.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "core/criteria.hpp"
#include "core/harness.hpp"
#include "core/invariants.hpp"
#include "core/serialize.hpp"

using namespace knotcob;

struct kc_input {
  ParsedInput value;
};
struct kc_poly {
  FracExpPoly value;
};
struct kc_divisor {
  Divisor value;
};
struct kc_report {
  CriterionReport value;
};
struct kc_verification {
  VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

kc_status status_of(errc code) {
  switch (code) {
    case errc::none: return KC_OK;
    case errc::parse_error: return KC_ERR_PARSE;
    case errc::validation_error: return KC_ERR_VALIDATION;
    case errc::not_divisible: return KC_ERR_NOT_DIVISIBLE;
    case errc::denominator_mismatch: return KC_ERR_DENOMINATOR_MISMATCH;
    case errc::not_coprime: return KC_ERR_NOT_COPRIME;
    case errc::non_integral_coefficient:
      return KC_ERR_NON_INTEGRAL_COEFFICIENT;
    case errc::not_galois_invariant: return KC_ERR_NOT_GALOIS_INVARIANT;
    case errc::negative_multiplicity: return KC_ERR_NEGATIVE_MULTIPLICITY;
    case errc::not_polynomial: return KC_ERR_NOT_POLYNOMIAL;
    case errc::negative_coefficient: return KC_ERR_NEGATIVE_COEFFICIENT;
    case errc::non_integral_milnor_number:
      return KC_ERR_NON_INTEGRAL_MILNOR_NUMBER;
    case errc::parity_error: return KC_ERR_PARITY;
    case errc::variable_count_mismatch:
      return KC_ERR_VARIABLE_COUNT_MISMATCH;
    case errc::inconsistent: return KC_ERR_INCONSISTENT;
    case errc::invalid_argument: return KC_ERR_INVALID_ARGUMENT;
    case errc::internal_error: return KC_ERR_INTERNAL;
  }
  return KC_ERR_INTERNAL;
}

template <typename F>
kc_status wrap(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return KC_OK;
  } catch (const error& e) {
    g_last_error = e.message();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return KC_ERR_INTERNAL;
  }
}

void check_pointer(const void* p, const char* what) {
  require(p != nullptr, errc::invalid_argument,
          std::string(what) + " must not be null");
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit(char** out, const std::string& text) {
  check_pointer(out, "output pointer");
  *out = copy_string(text);
}

// Exponent view of an input; fails for genuine weight systems.
const BrieskornExponents& exponents_of(const kc_input* input,
                                       const char* operation) {
  const BrieskornExponents* e = input_exponents(input->value);
  require(e != nullptr, errc::validation_error,
          std::string(operation) + " needs integer exponents, got weights " +
              render_input(input->value));
  return *e;
}

RecoveredExponents run_recovery(const kc_input* exponents, int64_t& count,
                                const BrieskornExponents** source) {
  *source = &exponents_of(exponents, "exponent recovery");
  if (count <= 0)
    count = static_cast<int64_t>((*source)->variable_count());
  return recover_exponents(mod2(char_divisor_brieskorn(**source)), count);
}

SearchConfig config_of(const kc_verify_config* config) {
  check_pointer(config, "config");
  check_pointer(config->check, "config->check");
  SearchConfig cfg;
  cfg.check = parse_check(config->check);
  cfg.variables = config->variables;
  cfg.max_exponent = config->max_exponent;
  cfg.filter = config->filter == nullptr ? HypothesisFilter::None
                                         : parse_filter(config->filter);
  cfg.seed = config->seed;
  cfg.trials = config->trials;
  cfg.jobs = config->jobs;
  return cfg;
}

}  // namespace

extern "C" {

const char* kc_status_name(kc_status status) {
  switch (status) {
    case KC_OK: return "ok";
    case KC_ERR_PARSE: return "ParseError";
    case KC_ERR_VALIDATION: return "ValidationError";
    case KC_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case KC_ERR_DENOMINATOR_MISMATCH: return "DenominatorMismatch";
    case KC_ERR_NOT_COPRIME: return "NotCoprime";
    case KC_ERR_NON_INTEGRAL_COEFFICIENT: return "NonIntegralCoefficient";
    case KC_ERR_NOT_GALOIS_INVARIANT: return "NotGaloisInvariant";
    case KC_ERR_NEGATIVE_MULTIPLICITY: return "NegativeMultiplicity";
    case KC_ERR_NOT_POLYNOMIAL: return "NotPolynomial";
    case KC_ERR_NEGATIVE_COEFFICIENT: return "NegativeCoefficient";
    case KC_ERR_NON_INTEGRAL_MILNOR_NUMBER: return "NonIntegralMilnorNumber";
    case KC_ERR_PARITY: return "ParityError";
    case KC_ERR_VARIABLE_COUNT_MISMATCH: return "VariableCountMismatch";
    case KC_ERR_INCONSISTENT: return "Inconsistent";
    case KC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case KC_ERR_INTERNAL: return "InternalError";
  }
  return "InternalError";
}

const char* kc_last_error(void) { return g_last_error.c_str(); }

void kc_string_free(char* text) { delete[] text; }

kc_status kc_input_parse(const char* text, kc_input** out) {
  return wrap([&] {
    check_pointer(text, "text");
    check_pointer(out, "output pointer");
    *out = new kc_input{parse_input(text)};
  });
}

void kc_input_free(kc_input* input) { delete input; }

kc_status kc_input_render(const kc_input* input, char** out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(out, render_input(input->value));
  });
}

kc_status kc_input_is_integral(const kc_input* input, int32_t* out) {
  return wrap([&] {
    check_pointer(input, "input");
    check_pointer(out, "output pointer");
    *out = input_exponents(input->value) != nullptr ? 1 : 0;
  });
}

kc_status kc_input_variable_count(const kc_input* input, int32_t* out) {
  return wrap([&] {
    check_pointer(input, "input");
    check_pointer(out, "output pointer");
    *out =
        static_cast<int32_t>(input_weights(input->value).variable_count());
  });
}

kc_status kc_input_stabilize(const kc_input* input, kc_input** out) {
  return wrap([&] {
    check_pointer(input, "input");
    check_pointer(out, "output pointer");
    if (const BrieskornExponents* e = input_exponents(input->value))
      *out = new kc_input{ParsedInput(stabilize(*e))};
    else
      *out = new kc_input{
          ParsedInput(stabilize(std::get<WeightSystem>(input->value)))};
  });
}

kc_status kc_pf_polynomial(const kc_input* input, kc_poly** out) {
  return wrap([&] {
    check_pointer(input, "input");
    check_pointer(out, "output pointer");
    *out = new kc_poly{pf_polynomial(input_weights(input->value))};
  });
}

void kc_poly_free(kc_poly* poly) { delete poly; }

kc_status kc_poly_parse(const char* text, kc_poly** out) {
  return wrap([&] {
    check_pointer(text, "text");
    check_pointer(out, "output pointer");
    *out = new kc_poly{parse_fracpoly(text)};
  });
}

kc_status kc_poly_render(const kc_poly* poly, char** out) {
  return wrap([&] {
    check_pointer(poly, "poly");
    emit(out, to_string(poly->value));
  });
}

kc_status kc_poly_equal(const kc_poly* a, const kc_poly* b, int32_t* out) {
  return wrap([&] {
    check_pointer(a, "poly a");
    check_pointer(b, "poly b");
    check_pointer(out, "output pointer");
    *out = a->value == b->value ? 1 : 0;
  });
}

kc_status kc_poly_eval_at_one(const kc_poly* poly, char** decimal_out) {
  return wrap([&] {
    check_pointer(poly, "poly");
    emit(decimal_out, eval_at_one(poly->value).str());
  });
}

kc_status kc_milnor_number(const kc_input* input, char** decimal_out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(decimal_out, milnor_number(input_weights(input->value)).str());
  });
}

kc_status kc_pf_document(const kc_input* input, char** json_out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(json_out,
         pf_document(input->value, pf_polynomial(input_weights(input->value))));
  });
}

kc_status kc_char_divisor(const kc_input* input, kc_divisor** out) {
  return wrap([&] {
    check_pointer(input, "input");
    check_pointer(out, "output pointer");
    *out = new kc_divisor{char_divisor(input_weights(input->value))};
  });
}

void kc_divisor_free(kc_divisor* divisor) { delete divisor; }

kc_status kc_divisor_render(const kc_divisor* divisor, char** out) {
  return wrap([&] {
    check_pointer(divisor, "divisor");
    emit(out, to_string(divisor->value));
  });
}

kc_status kc_divisor_equal(const kc_divisor* a, const kc_divisor* b,
                           int32_t* out) {
  return wrap([&] {
    check_pointer(a, "divisor a");
    check_pointer(b, "divisor b");
    check_pointer(out, "output pointer");
    *out = a->value == b->value ? 1 : 0;
  });
}

kc_status kc_divisor_mod2(const kc_divisor* divisor, kc_divisor** out) {
  return wrap([&] {
    check_pointer(divisor, "divisor");
    check_pointer(out, "output pointer");
    *out = new kc_divisor{mod2(divisor->value)};
  });
}

kc_status kc_delta_document(const kc_input* input, char** json_out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(json_out, delta_document(input->value,
                                  char_divisor(input_weights(input->value))));
  });
}

kc_status kc_delta_text(const kc_input* input, char** out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(out,
         delta_text(input->value, char_divisor(input_weights(input->value))));
  });
}

kc_status kc_sig_document(const kc_input* input, char** json_out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(json_out, sig_document(signature_report(input_weights(input->value))));
  });
}

kc_status kc_sig_text(const kc_input* input, char** out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(out, sig_text(signature_report(input_weights(input->value))));
  });
}

kc_status kc_total_signature(const kc_input* input, char** decimal_out) {
  return wrap([&] {
    check_pointer(input, "input");
    emit(decimal_out,
         signature_report(input_weights(input->value)).total.str());
  });
}

kc_status kc_witt(const kc_input* a, const kc_input* b, int32_t* verdict) {
  return wrap([&] {
    check_pointer(a, "input a");
    check_pointer(b, "input b");
    check_pointer(verdict, "output pointer");
    *verdict = witt_equivalent_over_R(input_weights(a->value),
                                      input_weights(b->value))
                   ? 1
                   : 0;
  });
}

kc_status kc_witt_document(const kc_input* a, const kc_input* b,
                           char** json_out) {
  return wrap([&] {
    check_pointer(a, "input a");
    check_pointer(b, "input b");
    bool verdict = witt_equivalent_over_R(input_weights(a->value),
                                          input_weights(b->value));
    emit(json_out, witt_document(a->value, b->value, verdict));
  });
}

kc_status kc_cot(const kc_input* a, const kc_input* b, double tolerance,
                 int32_t* verdict) {
  return wrap([&] {
    check_pointer(a, "input a");
    check_pointer(b, "input b");
    check_pointer(verdict, "output pointer");
    *verdict = cot_product_test(exponents_of(a, "cotangent test"),
                                exponents_of(b, "cotangent test"), tolerance)
                   ? 1
                   : 0;
  });
}

kc_status kc_cot_document(const kc_input* a, const kc_input* b,
                          double tolerance, char** json_out) {
  return wrap([&] {
    check_pointer(a, "input a");
    check_pointer(b, "input b");
    const BrieskornExponents& ea = exponents_of(a, "cotangent test");
    const BrieskornExponents& eb = exponents_of(b, "cotangent test");
    emit(json_out,
         cot_document(ea, eb, tolerance, cot_product_test(ea, eb, tolerance)));
  });
}

kc_status kc_rigidity_hypothesis(const kc_input* a, const kc_input* b,
                                 int32_t* holds) {
  return wrap([&] {
    check_pointer(a, "input a");
    check_pointer(b, "input b");
    check_pointer(holds, "output pointer");
    *holds = weight_rigidity_hypothesis(input_weights(a->value),
                                        input_weights(b->value))
                 ? 1
                 : 0;
  });
}

kc_status kc_report_run(const kc_input* a, const kc_input* b, double tolerance,
                        kc_report** out) {
  return wrap([&] {
    check_pointer(a, "input a");
    check_pointer(b, "input b");
    check_pointer(out, "output pointer");
    *out = new kc_report{decide_brieskorn_cobordism(
        exponents_of(a, "cobordism report"),
        exponents_of(b, "cobordism report"), tolerance)};
  });
}

void kc_report_free(kc_report* report) { delete report; }

kc_status kc_report_verdict(const kc_report* report, kc_verdict* out) {
  return wrap([&] {
    check_pointer(report, "report");
    check_pointer(out, "output pointer");
    switch (report->value.verdict) {
      case Verdict::Cobordant: *out = KC_VERDICT_COBORDANT; break;
      case Verdict::NotCobordant: *out = KC_VERDICT_NOT_COBORDANT; break;
      case Verdict::UnknownHypothesisNotMet:
        *out = KC_VERDICT_UNKNOWN_HYPOTHESIS_NOT_MET;
        break;
    }
  });
}

kc_status kc_report_json(const kc_report* report, char** out) {
  return wrap([&] {
    check_pointer(report, "report");
    emit(out, report_document(report->value));
  });
}

kc_status kc_report_text(const kc_report* report, char** out) {
  return wrap([&] {
    check_pointer(report, "report");
    emit(out, report_text(report->value));
  });
}

kc_status kc_report_csv(const kc_report* report, char** out) {
  return wrap([&] {
    check_pointer(report, "report");
    emit(out, report_csv(report->value));
  });
}

kc_status kc_recover_document(const kc_input* exponents, int64_t count,
                              char** json_out) {
  return wrap([&] {
    check_pointer(exponents, "input");
    const BrieskornExponents* source = nullptr;
    RecoveredExponents rec = run_recovery(exponents, count, &source);
    emit(json_out, recovery_document(*source, count, rec,
                                     rec.exponents ==
                                         source->sorted_exponents()));
  });
}

kc_status kc_recover_text(const kc_input* exponents, int64_t count,
                          char** out) {
  return wrap([&] {
    check_pointer(exponents, "input");
    const BrieskornExponents* source = nullptr;
    RecoveredExponents rec = run_recovery(exponents, count, &source);
    emit(out, recovery_text(*source, count, rec,
                            rec.exponents == source->sorted_exponents()));
  });
}

kc_status kc_recover_round_trip(const kc_input* exponents, int64_t count,
                                int32_t* round_trip) {
  return wrap([&] {
    check_pointer(exponents, "input");
    check_pointer(round_trip, "output pointer");
    const BrieskornExponents* source = nullptr;
    RecoveredExponents rec = run_recovery(exponents, count, &source);
    *round_trip = rec.exponents == source->sorted_exponents() ? 1 : 0;
  });
}

kc_status kc_verify(const kc_verify_config* config, kc_verification** out) {
  return wrap([&] {
    check_pointer(out, "output pointer");
    *out = new kc_verification{run_check(config_of(config))};
  });
}

kc_status kc_example3(int32_t n, const int64_t* ps, int32_t ps_len,
                      kc_verification** out) {
  return wrap([&] {
    check_pointer(out, "output pointer");
    require(ps_len == 0 || ps != nullptr, errc::invalid_argument,
            "ps must not be null when ps_len > 0");
    std::vector<std::int64_t> prefix(ps, ps + ps_len);
    *out = new kc_verification{reproduce_example3(n, prefix)};
  });
}

void kc_verification_free(kc_verification* verification) {
  delete verification;
}

kc_status kc_verification_pass(const kc_verification* verification,
                               int32_t* pass) {
  return wrap([&] {
    check_pointer(verification, "verification");
    check_pointer(pass, "output pointer");
    *pass = verification->value.pass ? 1 : 0;
  });
}

kc_status kc_verification_json(const kc_verification* verification,
                               char** out) {
  return wrap([&] {
    check_pointer(verification, "verification");
    emit(out, verification_document(verification->value));
  });
}

kc_status kc_verification_text(const kc_verification* verification,
                               char** out) {
  return wrap([&] {
    check_pointer(verification, "verification");
    emit(out, verification_text(verification->value));
  });
}

kc_status kc_verification_csv(const kc_verification* verification,
                              char** out) {
  return wrap([&] {
    check_pointer(verification, "verification");
    emit(out, verification_csv(verification->value));
  });
}

}  // extern "C"
