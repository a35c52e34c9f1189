#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/numeric.hpp"

namespace knotcob {

// Rotation number: a reduced fraction num/den in [0, 1) standing for the
// root of unity exp(2*pi*i*num/den).  Addition is mod 1.
struct Rot {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rot make(std::int64_t n, std::int64_t d);

  friend Rot operator+(Rot a, Rot b);
  std::strong_ordering operator<=>(const Rot& o) const {
    __int128 lhs = static_cast<__int128>(num) * o.den;
    __int128 rhs = static_cast<__int128>(o.num) * den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Rot&) const = default;
};

std::string to_string(Rot q);

// Element of the rational group ring supported on roots of unity: a finite
// formal sum of <q> terms with nonzero rational coefficients.
class Divisor {
 public:
  using Entries = std::map<Rot, Rat>;

  Divisor() = default;  // zero
  static Divisor from_entries(Entries entries);  // drops zero coefficients
  static Divisor unit();                         // <0>, the multiplicative unit

  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  Rat coefficient(Rot q) const;
  Rat mass() const;  // coefficient sum; for characteristic divisors this is mu

  Divisor operator-() const;
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  // Convolution: <q1> * <q2> = <q1 + q2 mod 1> extended bilinearly.
  friend Divisor operator*(const Divisor& a, const Divisor& b);

  bool operator==(const Divisor&) const = default;

 private:
  Entries entries_;
};

Divisor d_scale(const Divisor& x, const Rat& r);

// Lambda_a: the divisor of t^a - 1, coefficient 1 at every k/a.
Divisor lambda_divisor(std::int64_t a);
// (1/v) * Lambda_u; u and v must be coprime (NotCoprime otherwise).
Divisor scaled_lambda(std::int64_t u, std::int64_t v);

// Coefficients reduced into {0,1}; requires integral coefficients
// (NonIntegralCoefficient otherwise).
Divisor mod2(const Divisor& x);

// Presentation of a Galois-invariant nonnegative integral divisor as a
// product of cyclotomic polynomials: d -> multiplicity of Phi_d.
struct CyclotomicProduct {
  std::map<std::int64_t, Int> multiplicities;
  bool operator==(const CyclotomicProduct&) const = default;
};

// Requires every primitive class to be complete with one common nonnegative
// integer coefficient: NotGaloisInvariant when a class is incomplete or
// uneven, NonIntegralCoefficient / NegativeMultiplicity on bad coefficients.
CyclotomicProduct to_cyclotomic(const Divisor& x);

// Coefficients of prod Phi_d^{e_d} in ascending degree; {} -> [1].
std::vector<Int> cyclotomic_expand(const CyclotomicProduct& c);

// Coefficients of Phi_n itself, ascending degree (exact, cached).
std::vector<Int> cyclotomic_coefficients(std::int64_t n);

// Unique expansion of a Galois-invariant divisor as sum r_a * Lambda_a
// (Moebius inversion over the divisor-closed support).  Zero coefficients
// are dropped.  NotGaloisInvariant when no expansion exists.
std::map<std::int64_t, Rat> lambda_combination(const Divisor& x);

std::int64_t euler_totient(std::int64_t n);

// "Lambda_6 - Lambda_3 - Lambda_2 + Lambda_1" when x is a Lambda
// combination, otherwise "<1/6> + <5/6>" term form.
std::string to_string(const Divisor& x);
std::string to_string(const CyclotomicProduct& c);

}  // namespace knotcob
