#include "core/invariants.hpp"

#include <algorithm>

namespace knotcob {

WeightSystem::WeightSystem(std::vector<Weight> weights) {
  require(!weights.empty(), errc::validation_error,
          "a weight system needs at least one weight");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    Weight& w = weights[j];
    require(w.den >= 1 && w.num >= 1, errc::validation_error,
            "weight " + std::to_string(j + 1) + " must be positive");
    std::int64_t g = gcd64(w.num, w.den);
    w.num /= g;
    w.den /= g;
    if (w.num < 2 * w.den)
      fail(errc::validation_error,
           "weight " + std::to_string(j + 1) + " (" + std::to_string(w.num) +
               "/" + std::to_string(w.den) + ") is below 2");
  }
  weights_ = std::move(weights);
}

WeightSystem WeightSystem::from_exponents(const BrieskornExponents& exps) {
  std::vector<Weight> w;
  w.reserve(exps.variable_count());
  for (std::int64_t a : exps.exponents()) w.push_back(Weight{a, 1});
  return WeightSystem(std::move(w));
}

std::vector<Weight> WeightSystem::sorted_weights() const {
  std::vector<Weight> out = weights_;
  std::sort(out.begin(), out.end());
  return out;
}

BrieskornExponents::BrieskornExponents(std::vector<std::int64_t> exponents) {
  require(!exponents.empty(), errc::validation_error,
          "an exponent tuple needs at least one entry");
  for (std::size_t j = 0; j < exponents.size(); ++j)
    require(exponents[j] >= 2, errc::validation_error,
            "exponent " + std::to_string(j + 1) + " (" +
                std::to_string(exponents[j]) + ") is below 2");
  exponents_ = std::move(exponents);
}

std::vector<std::int64_t> BrieskornExponents::sorted_exponents() const {
  std::vector<std::int64_t> out = exponents_;
  std::sort(out.begin(), out.end());
  return out;
}

bool BrieskornExponents::no_multiple_hypothesis() const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    for (std::size_t j = 0; j < exponents_.size(); ++j)
      if (i != j && exponents_[j] % exponents_[i] == 0) return false;
  return true;
}

bool BrieskornExponents::pairwise_distinct() const {
  std::vector<std::int64_t> s = sorted_exponents();
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

FracExpPoly pf_polynomial(const WeightSystem& ws) {
  std::int64_t m = 1;
  for (const Weight& w : ws.weights()) m = lcm64(m, w.num);
  FracExpPoly num = FracExpPoly::one();
  FracExpPoly den = FracExpPoly::one();
  for (const Weight& w : ws.weights()) {
    std::int64_t e = m / w.num * w.den;  // m / w_j
    num = num * (FracExpPoly::term(1, m, m) - FracExpPoly::term(1, e, m));
    den = den * (FracExpPoly::term(1, e, m) - FracExpPoly::one());
  }
  FracExpPoly p;
  try {
    p = exact_div(num, den);
  } catch (const error& e) {
    if (e.code() != errc::not_divisible) throw;
    fail(errc::not_polynomial,
         "weight polynomial of (" + render(ws) + ") is not a polynomial in t^(1/" +
             std::to_string(m) + ")");
  }
  for (const auto& [k, c] : p.terms())
    if (c < 0)
      fail(errc::negative_coefficient,
           "weight polynomial of (" + render(ws) +
               ") has a negative coefficient");
  return p;
}

FracExpPoly pf_polynomial(const BrieskornExponents& exps) {
  return pf_polynomial(WeightSystem::from_exponents(exps));
}

Int milnor_number(const WeightSystem& ws) {
  Rat mu = 1;
  for (const Weight& w : ws.weights()) mu *= Rat(w.num - w.den, w.den);
  if (boost::multiprecision::denominator(mu) != 1)
    fail(errc::non_integral_milnor_number,
         "product of (w_j - 1) for (" + render(ws) + ") is " + to_decimal(mu));
  return boost::multiprecision::numerator(mu);
}

Divisor char_divisor(const WeightSystem& ws) {
  Divisor acc = Divisor::unit();
  for (const Weight& w : ws.weights())
    acc = acc * (scaled_lambda(w.num, w.den) - Divisor::unit());
  for (const auto& [q, c] : acc.entries())
    if (boost::multiprecision::denominator(c) != 1)
      fail(errc::non_integral_coefficient,
           "characteristic divisor of (" + render(ws) +
               ") has non-integral coefficient " + to_decimal(c) + " at <" +
               to_string(q) + ">");
  return acc;
}

Divisor char_divisor_brieskorn(const BrieskornExponents& exps) {
  Divisor acc = Divisor::unit();
  for (std::int64_t a : exps.exponents())
    acc = acc * (lambda_divisor(a) - Divisor::unit());
  return acc;
}

CyclotomicProduct char_polynomial(const WeightSystem& ws) {
  return to_cyclotomic(char_divisor(ws));
}

WeightSystem stabilize(const WeightSystem& ws) {
  std::vector<Weight> w = ws.weights();
  w.push_back(Weight{2, 1});
  return WeightSystem(std::move(w));
}

BrieskornExponents stabilize(const BrieskornExponents& exps) {
  std::vector<std::int64_t> a = exps.exponents();
  a.push_back(2);
  return BrieskornExponents(std::move(a));
}

std::string render(const WeightSystem& ws) {
  std::string out;
  for (const Weight& w : ws.weights()) {
    if (!out.empty()) out += ',';
    out += std::to_string(w.num);
    if (w.den != 1) out += "/" + std::to_string(w.den);
  }
  return out;
}

std::string render(const BrieskornExponents& e) {
  std::string out;
  for (std::int64_t a : e.exponents()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a);
  }
  return out;
}

}  // namespace knotcob
