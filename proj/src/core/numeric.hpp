#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

#include "core/errors.hpp"

namespace knotcob {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept {
  return std::gcd(a, b);
}

// lcm with overflow detection; exponents and denominators stay in int64 range
// for every supported input, so hitting this is a caller bug or absurd input.
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  std::int64_t q = a / g;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &out))
    fail(errc::invalid_argument, "lcm overflows 64-bit range");
  return out;
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }

inline std::string to_decimal(const Int& v) { return v.str(); }
inline std::string to_decimal(const Rat& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace knotcob
