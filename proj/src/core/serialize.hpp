#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "core/criteria.hpp"
#include "core/harness.hpp"
#include "core/invariants.hpp"

namespace knotcob {

inline constexpr int schema_version = 1;

// CLI inputs: "2,3,7" is an exponent tuple, "5/2,3" a weight system.
using ParsedInput = std::variant<BrieskornExponents, WeightSystem>;

ParsedInput parse_input(const std::string& text);
WeightSystem input_weights(const ParsedInput& in);
// Null when the input is a genuine weight system (some weight not integral).
const BrieskornExponents* input_exponents(const ParsedInput& in);
std::string render_input(const ParsedInput& in);

// JSON documents, one kind per CLI surface.  Every document carries
// schema_version and kind and validates against schemas/<kind>.schema.json.
std::string pf_document(const ParsedInput& in, const FracExpPoly& p);
std::string delta_document(const ParsedInput& in, const Divisor& d);
std::string sig_document(const SignatureReport& r);
std::string witt_document(const ParsedInput& a, const ParsedInput& b,
                          bool verdict);
std::string cot_document(const BrieskornExponents& a,
                         const BrieskornExponents& b, double tolerance,
                         bool verdict);
std::string report_document(const CriterionReport& report);
std::string recovery_document(const BrieskornExponents& source,
                              std::int64_t count,
                              const RecoveredExponents& recovered,
                              bool round_trip);
std::string verification_document(const VerificationReport& report);

// Plain-text renderings for --format text.
std::string pf_text(const FracExpPoly& p);
std::string delta_text(const ParsedInput& in, const Divisor& d);
std::string sig_text(const SignatureReport& r);
std::string report_text(const CriterionReport& report);
std::string recovery_text(const BrieskornExponents& source, std::int64_t count,
                          const RecoveredExponents& recovered, bool round_trip);
std::string verification_text(const VerificationReport& report);

// CSV: criterion reports use the column set
// input_a,input_b,witt,cot,mod2,odd_sets,fox_milnor,verdict; verification
// reports serialize their violation table.
std::string report_csv(const CriterionReport& report);
std::string verification_csv(const VerificationReport& report);

}  // namespace knotcob
