#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "core/numeric.hpp"

namespace knotcob {

// Element of Z[t^(1/m)]: finitely many terms c * t^(k/m) with integer c != 0
// and k >= 0, held in canonical form so that equal elements compare equal:
// gcd(m, k_1, ..., k_r) == 1, and the zero element has m == 1.
class FracExpPoly {
 public:
  using Terms = std::map<std::int64_t, Int>;

  FracExpPoly() = default;  // zero

  // Canonicalizes: drops zero coefficients, divides out the common factor of
  // the denominator and all exponent numerators.
  static FracExpPoly from_terms(std::int64_t denom, Terms terms);
  static FracExpPoly constant(Int value);
  // coeff * t^(exp_num / exp_den)
  static FracExpPoly term(Int coeff, std::int64_t exp_num, std::int64_t exp_den);
  static FracExpPoly one() { return constant(1); }

  std::int64_t denom() const noexcept { return denom_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  FracExpPoly operator-() const;
  friend FracExpPoly operator+(const FracExpPoly& a, const FracExpPoly& b);
  friend FracExpPoly operator-(const FracExpPoly& a, const FracExpPoly& b);
  friend FracExpPoly operator*(const FracExpPoly& a, const FracExpPoly& b);

  bool operator==(const FracExpPoly&) const = default;

 private:
  std::int64_t denom_ = 1;
  Terms terms_;
};

// Exact quotient num / den in Z[t^(1/m)].  Throws NotDivisible when the
// division leaves a remainder or a fractional coefficient, InvalidArgument
// when den is zero.
FracExpPoly exact_div(const FracExpPoly& num, const FracExpPoly& den);

// Image of p under s^m = -1 where s = t^(1/m): every term c * s^K becomes
// (-1)^floor(K/m) * c * s^(K mod m).  m must be a positive multiple of
// p.denom() (DenominatorMismatch otherwise).  The result is zero exactly
// when (t^(1/m))^m + 1 divides p.
FracExpPoly reduce_mod_t_plus_1(const FracExpPoly& p, std::int64_t m);

// Evaluation at t^(1/m) = exp(i*pi*ell/m) for integer ell.
std::complex<double> eval_unit(const FracExpPoly& p, std::int64_t ell);

// Evaluation at t = 1, i.e. the coefficient sum.
Int eval_at_one(const FracExpPoly& p);

// Rendering: terms in ascending exponent order, e.g. "t^(5/6) + t^(7/6)",
// "2*t + t^3", "0".  parse_fracpoly accepts exactly this shape (plus
// optional whitespace and an optional leading sign) and round-trips
// to_string output.
std::string to_string(const FracExpPoly& p);
FracExpPoly parse_fracpoly(const std::string& text);

}  // namespace knotcob
