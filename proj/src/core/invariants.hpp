#pragma once

#include <cstdint>
#include <vector>

#include "core/divisor.hpp"
#include "core/fracpoly.hpp"
#include "core/numeric.hpp"

namespace knotcob {

// One weight u/v, reduced, with u/v >= 2 (Saito normalization).
struct Weight {
  std::int64_t num = 2;
  std::int64_t den = 1;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight& o) const {
    return static_cast<__int128>(num) * o.den <=>
           static_cast<__int128>(o.num) * den;
  }
};

class BrieskornExponents;

// Ordered list of n+1 >= 1 validated weights.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<Weight> weights);  // reduces + validates
  static WeightSystem from_exponents(const BrieskornExponents& exps);

  const std::vector<Weight>& weights() const noexcept { return weights_; }
  std::size_t variable_count() const noexcept { return weights_.size(); }
  std::vector<Weight> sorted_weights() const;

  bool operator==(const WeightSystem&) const = default;

 private:
  std::vector<Weight> weights_;
};

// Ordered list of n+1 >= 1 integer exponents a_j >= 2.
class BrieskornExponents {
 public:
  explicit BrieskornExponents(std::vector<std::int64_t> exponents);

  const std::vector<std::int64_t>& exponents() const noexcept {
    return exponents_;
  }
  std::size_t variable_count() const noexcept { return exponents_.size(); }
  std::vector<std::int64_t> sorted_exponents() const;
  // No exponent is a (possibly equal) multiple of another one.
  bool no_multiple_hypothesis() const;
  bool pairwise_distinct() const;

  bool operator==(const BrieskornExponents&) const = default;

 private:
  std::vector<std::int64_t> exponents_;
};

// P_f(t) = prod (t - t^{1/w_j}) / (t^{1/w_j} - 1), a polynomial in t^{1/m}
// with m = lcm(u_j) and nonnegative integer coefficients.  NotPolynomial
// when the single exact division leaves a remainder, NegativeCoefficient
// when the quotient has a negative coefficient.
FracExpPoly pf_polynomial(const WeightSystem& ws);
FracExpPoly pf_polynomial(const BrieskornExponents& exps);

// mu = prod (w_j - 1); NonIntegralMilnorNumber when the product is not an
// integer.  Always equals eval_at_one(pf_polynomial(ws)) when both exist.
Int milnor_number(const WeightSystem& ws);

// Divisor of the characteristic polynomial: prod ((1/v_j) Lambda_{u_j} - 1),
// with an integrality assertion on the result (NonIntegralCoefficient).
Divisor char_divisor(const WeightSystem& ws);
// Same via the integer-exponent product prod (Lambda_{a_j} - 1).
Divisor char_divisor_brieskorn(const BrieskornExponents& exps);

// to_cyclotomic(char_divisor(ws)).
CyclotomicProduct char_polynomial(const WeightSystem& ws);

// Appends one quadratic variable; pf_polynomial of the result equals
// t^{1/2} * pf_polynomial of the input.
WeightSystem stabilize(const WeightSystem& ws);
BrieskornExponents stabilize(const BrieskornExponents& exps);

std::string render(const WeightSystem& ws);       // "5/2,3"
std::string render(const BrieskornExponents& e);  // "2,3,7"

}  // namespace knotcob
