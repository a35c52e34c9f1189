#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "core/errors.hpp"
#include "core/fracpoly.hpp"

using namespace knotcob;

namespace {

template <typename F>
errc thrown_code(F&& body) {
  try {
    body();
  } catch (const error& e) {
    return e.code();
  }
  return errc::none;
}

FracExpPoly P(const std::string& text) { return parse_fracpoly(text); }

// Independent product oracle: plain term-by-term convolution after moving
// both operands onto the common denominator.
FracExpPoly naive_mul(const FracExpPoly& a, const FracExpPoly& b) {
  std::int64_t m = std::lcm(a.denom(), b.denom());
  FracExpPoly::Terms terms;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      terms[ka * (m / a.denom()) + kb * (m / b.denom())] += ca * cb;
  return FracExpPoly::from_terms(m, std::move(terms));
}

FracExpPoly random_poly(std::mt19937_64& gen, bool nonzero = false) {
  std::int64_t denom = 1 + static_cast<std::int64_t>(gen() % 12);
  FracExpPoly::Terms terms;
  std::size_t count = 1 + gen() % 5;
  for (std::size_t i = 0; i < count; ++i) {
    std::int64_t key = static_cast<std::int64_t>(gen() % 61);
    Int coeff = static_cast<std::int64_t>(gen() % 11) - 5;
    terms[key] += coeff;
  }
  FracExpPoly p = FracExpPoly::from_terms(denom, std::move(terms));
  if (nonzero && p.is_zero()) return FracExpPoly::one();
  return p;
}

}  // namespace

TEST_CASE("canonical form and equality") {
  // gcd of denominator and keys is always divided out.
  FracExpPoly a = FracExpPoly::from_terms(12, {{10, 2}, {2, 4}});
  FracExpPoly b = FracExpPoly::from_terms(6, {{5, 2}, {1, 4}});
  CHECK(a == b);
  CHECK(a.denom() == 6);

  // t^{6/6} collapses to t.
  FracExpPoly c = FracExpPoly::from_terms(6, {{6, 1}});
  CHECK(c.denom() == 1);
  CHECK(c == FracExpPoly::term(1, 1, 1));

  // Zero coefficients are dropped; the zero element has denominator 1.
  FracExpPoly z = FracExpPoly::from_terms(10, {{3, 1}, {7, 0}}) -
                  FracExpPoly::term(1, 3, 10);
  CHECK(z.is_zero());
  CHECK(z.denom() == 1);
  CHECK(z == FracExpPoly());

  CHECK(FracExpPoly::constant(0).is_zero());
  CHECK(FracExpPoly::one() == FracExpPoly::constant(1));

  CHECK(thrown_code([] { FracExpPoly::from_terms(0, {{1, 1}}); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([] { FracExpPoly::from_terms(2, {{-1, 1}}); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([] { FracExpPoly::term(1, 1, 0); }) ==
        errc::invalid_argument);
}

TEST_CASE("rendering and parsing") {
  CHECK(to_string(FracExpPoly()) == "0");
  CHECK(to_string(FracExpPoly::constant(-7)) == "-7");
  CHECK(to_string(FracExpPoly::from_terms(6, {{5, 1}, {7, 1}})) ==
        "t^(5/6) + t^(7/6)");
  CHECK(to_string(FracExpPoly::from_terms(1, {{1, 2}, {3, 1}})) ==
        "2*t + t^3");
  CHECK(to_string(FracExpPoly::from_terms(2, {{1, -1}, {0, 1}})) ==
        "1 - t^(1/2)");
  CHECK(to_string(FracExpPoly::term(-2, 5, 6)) == "-2*t^(5/6)");

  CHECK(P("t^(5/6) + t^(7/6)") == FracExpPoly::from_terms(6, {{5, 1}, {7, 1}}));
  CHECK(P("0") == FracExpPoly());
  CHECK(P("  -3*t^2+ t ") ==
        FracExpPoly::from_terms(1, {{2, -3}, {1, 1}}));
  CHECK(P("t^(2/4)") == FracExpPoly::term(1, 1, 2));  // exponent reduced

  // Round-trip on a batch of random polynomials.
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    FracExpPoly p = random_poly(gen);
    CHECK(parse_fracpoly(to_string(p)) == p);
  }

  CHECK(thrown_code([] { P(""); }) == errc::parse_error);
  CHECK(thrown_code([] { P("t^"); }) == errc::parse_error);
  CHECK(thrown_code([] { P("t^(1/)"); }) == errc::parse_error);
  CHECK(thrown_code([] { P("t^(1/0)"); }) == errc::parse_error);
  CHECK(thrown_code([] { P("2**t"); }) == errc::parse_error);
  CHECK(thrown_code([] { P("t + "); }) == errc::parse_error);
  CHECK(thrown_code([] { P("x^2"); }) == errc::parse_error);
  // Exponents are machine integers; coefficients are unbounded.
  CHECK(thrown_code([] { P("t^99999999999999999999"); }) == errc::parse_error);
  CHECK(eval_at_one(P("99999999999999999999*t")) ==
        Int("99999999999999999999"));
}

TEST_CASE("ring operations: pinned examples") {
  // (t^{2/3}+t^{1/3})^2 = t^{4/3}+2t+t^{2/3}.
  FracExpPoly f = P("t^(1/3) + t^(2/3)");
  CHECK(f * f == P("t^(2/3) + 2*t + t^(4/3)"));
  CHECK(f * FracExpPoly::one() == f);
  CHECK(f + FracExpPoly() == f);
  CHECK(f - f == FracExpPoly());
  CHECK(-f == FracExpPoly() - f);

  // Mixed denominators: t^{1/2} * t^{1/3} = t^{5/6}.
  CHECK(FracExpPoly::term(1, 1, 2) * FracExpPoly::term(1, 1, 3) ==
        FracExpPoly::term(1, 5, 6));
}

TEST_CASE("ring laws on 1000 random triples") {
  std::mt19937_64 gen(42);
  for (int i = 0; i < 1000; ++i) {
    FracExpPoly a = random_poly(gen);
    FracExpPoly b = random_poly(gen);
    FracExpPoly c = random_poly(gen);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == naive_mul(a, b));
  }
}

TEST_CASE("exact division: pinned examples") {
  // (s^6-1)/(s^2-1) = s^4+s^2+1 with s = t^(1/6).
  FracExpPoly s6 = FracExpPoly::from_terms(6, {{6, 1}, {0, -1}});
  FracExpPoly s2 = FracExpPoly::from_terms(6, {{2, 1}, {0, -1}});
  CHECK(exact_div(s6, s2) ==
        FracExpPoly::from_terms(6, {{4, 1}, {2, 1}, {0, 1}}));

  // (t - t^{1/2})/(t^{1/2} - 1) = t^{1/2}.
  CHECK(exact_div(P("t - t^(1/2)"), P("t^(1/2) - 1")) == P("t^(1/2)"));

  // (s^3-1)/(s^2-1) leaves a remainder.
  FracExpPoly s3 = FracExpPoly::from_terms(6, {{3, 1}, {0, -1}});
  CHECK(thrown_code([&] { exact_div(s3, s2); }) == errc::not_divisible);

  // Fractional quotient coefficient: (t) / (2t) = 1/2 is not in the ring.
  CHECK(thrown_code([] { exact_div(P("t"), P("2*t")); }) ==
        errc::not_divisible);

  CHECK(thrown_code([] { exact_div(P("t"), FracExpPoly()); }) ==
        errc::invalid_argument);
  CHECK(exact_div(FracExpPoly(), P("t - 1")) == FracExpPoly());
}

TEST_CASE("exact division inverts multiplication (randomized)") {
  std::mt19937_64 gen(1234);
  for (int i = 0; i < 400; ++i) {
    FracExpPoly a = random_poly(gen);
    FracExpPoly b = random_poly(gen, /*nonzero=*/true);
    REQUIRE(exact_div(a * b, b) == a);
  }
}

TEST_CASE("reduction modulo t + 1") {
  // s^7 with m=6 -> -s.
  CHECK(reduce_mod_t_plus_1(FracExpPoly::term(1, 7, 6), 6) ==
        FracExpPoly::term(-1, 1, 6));
  // s^5 + s^7 with m=6 -> s^5 - s.
  CHECK(reduce_mod_t_plus_1(FracExpPoly::from_terms(6, {{5, 1}, {7, 1}}), 6) ==
        FracExpPoly::from_terms(6, {{5, 1}, {1, -1}}));
  // Keys below m are untouched.
  FracExpPoly small = FracExpPoly::from_terms(6, {{1, 2}, {5, -3}});
  CHECK(reduce_mod_t_plus_1(small, 6) == small);
  // Two wraparounds flip the sign twice: t^2 == +1 mod (t+1) at m=1.
  CHECK(reduce_mod_t_plus_1(P("t^2"), 1) == FracExpPoly::one());
  CHECK(reduce_mod_t_plus_1(P("t^3"), 1) == P("-1"));
  // t + 1 reduces to zero.
  CHECK(reduce_mod_t_plus_1(P("t + 1"), 1).is_zero());
  // m may be a proper multiple of the denominator.
  CHECK(reduce_mod_t_plus_1(P("t^(3/2)"), 4) ==
        FracExpPoly::term(-1, 1, 2));

  CHECK(thrown_code([] { reduce_mod_t_plus_1(P("t^(1/2)"), 3); }) ==
        errc::denominator_mismatch);
  CHECK(thrown_code([] { reduce_mod_t_plus_1(P("t"), 0); }) ==
        errc::invalid_argument);
}

TEST_CASE("reduction is a ring homomorphism (randomized)") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 300; ++i) {
    FracExpPoly a = random_poly(gen);
    FracExpPoly b = random_poly(gen);
    std::int64_t m = std::lcm(a.denom(), b.denom());
    FracExpPoly ra = reduce_mod_t_plus_1(a, m);
    FracExpPoly rb = reduce_mod_t_plus_1(b, m);
    REQUIRE(reduce_mod_t_plus_1(a + b, m) ==
            reduce_mod_t_plus_1(ra + rb, m));
    REQUIRE(reduce_mod_t_plus_1(a * b, m) ==
            reduce_mod_t_plus_1(ra * rb, m));
  }
}

TEST_CASE("evaluation") {
  CHECK(eval_at_one(P("t^(5/6) + t^(7/6)")) == 2);
  CHECK(eval_at_one(FracExpPoly()) == 0);
  CHECK(eval_at_one(P("t^(2/3) + 2*t + t^(4/3)")) == 4);

  // Constant 1 evaluates to 1 everywhere.
  CHECK(std::abs(eval_unit(FracExpPoly::one(), 5) - std::complex<double>(1)) <
        1e-12);
  // s with m=1 at ell=1 is exp(i*pi) = -1.
  CHECK(std::abs(eval_unit(P("t"), 1) - std::complex<double>(-1)) < 1e-12);
  // t^{5/6}+t^{7/6} at ell=1: exp(5i*pi/6)+exp(7i*pi/6) = -sqrt(3).
  CHECK(std::abs(eval_unit(P("t^(5/6) + t^(7/6)"), 1) -
                 std::complex<double>(-std::sqrt(3.0))) < 1e-9);
}

TEST_CASE("evaluation agrees with reduction at odd ell (randomized)") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 300; ++i) {
    FracExpPoly p = random_poly(gen);
    std::int64_t ell = 2 * static_cast<std::int64_t>(gen() % 5) + 1;
    FracExpPoly r = reduce_mod_t_plus_1(p, p.denom());
    // Reduction preserves the value at every primitive 2m-th root because
    // s^m = -1 there; canonicalization preserves exponent ratios.
    std::complex<double> before = eval_unit(p, ell);
    // Evaluate the reduced form at the matching root of its own denominator:
    // k/p.denom() == k'/r.denom() termwise, so the same ell applies.
    std::complex<double> after = eval_unit(r, ell);
    REQUIRE(std::abs(before - after) < 1e-9);
  }
}
