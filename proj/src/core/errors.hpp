#pragma once

#include <stdexcept>
#include <string>

namespace knotcob {

enum class errc {
  none = 0,
  parse_error,
  validation_error,
  not_divisible,
  denominator_mismatch,
  not_coprime,
  non_integral_coefficient,
  not_galois_invariant,
  negative_multiplicity,
  not_polynomial,
  negative_coefficient,
  non_integral_milnor_number,
  parity_error,
  variable_count_mismatch,
  inconsistent,
  invalid_argument,
  internal_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  errc code() const noexcept { return code_; }

  // The description alone, without the code-name prefix what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool ok, errc code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace knotcob
