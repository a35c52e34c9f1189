#include "core/errors.hpp"

namespace knotcob {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::none: return "ok";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::not_divisible: return "NotDivisible";
    case errc::denominator_mismatch: return "DenominatorMismatch";
    case errc::not_coprime: return "NotCoprime";
    case errc::non_integral_coefficient: return "NonIntegralCoefficient";
    case errc::not_galois_invariant: return "NotGaloisInvariant";
    case errc::negative_multiplicity: return "NegativeMultiplicity";
    case errc::not_polynomial: return "NotPolynomial";
    case errc::negative_coefficient: return "NegativeCoefficient";
    case errc::non_integral_milnor_number: return "NonIntegralMilnorNumber";
    case errc::parity_error: return "ParityError";
    case errc::variable_count_mismatch: return "VariableCountMismatch";
    case errc::inconsistent: return "Inconsistent";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace knotcob
