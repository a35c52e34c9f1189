#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/divisor.hpp"
#include "core/fracpoly.hpp"
#include "core/invariants.hpp"

namespace knotcob {

// Equivariant signatures keyed by rotation number q = alpha mod 1 in (0,1)
// for the eigenvalue exp(-2*pi*i*alpha); the q = 0 entry is identically
// zero and never stored.
struct SignatureTable {
  std::map<Rot, Int> entries;
  bool operator==(const SignatureTable&) const = default;
};

// Parity formula on the terms c_alpha * t^alpha of P_f: adds c_alpha when
// floor(alpha) is even, subtracts it when odd.  Requires an odd number of
// variables (ParityError otherwise); even-variable callers stabilize first.
SignatureTable equivariant_signatures(const WeightSystem& ws);

Int total_signature(const SignatureTable& table);

struct SignatureReport {
  WeightSystem input;
  bool stabilized = false;   // true when one quadratic variable was appended
  int seifert_sign = 1;      // (-1)^(original variable count) when stabilized
  SignatureTable table;
  Int total;
  std::vector<std::string> warnings;
};

// Stabilizes once when handed an even number of variables, then applies
// equivariant_signatures.
SignatureReport signature_report(const WeightSystem& ws);

// P_f == P_g mod t+1: exact reduction of the difference modulo s^m + 1 with
// m the lcm of both denominators.  Inputs must have the same number of
// variables (VariableCountMismatch).
bool witt_equivalent_over_R(const WeightSystem& ws1, const WeightSystem& ws2);
bool witt_equivalent_over_R(const BrieskornExponents& e1,
                            const BrieskornExponents& e2);
// Same verdict from precomputed weight polynomials.
bool witt_from_pf(const FracExpPoly& pa, const FracExpPoly& pb);

// Numeric cross-check: prod cot(pi*ell/(2*a_j)) == prod cot(pi*ell/(2*b_j))
// within tol for every odd ell in [1, 2L), L = lcm of all exponents.
bool cot_product_test(const BrieskornExponents& e1,
                      const BrieskornExponents& e2, double tol = 1e-9);

// Characteristic divisors congruent coefficientwise mod 2.
bool mod2_divisor_congruent(const WeightSystem& ws1, const WeightSystem& ws2);
bool mod2_divisor_congruent(const BrieskornExponents& e1,
                            const BrieskornExponents& e2);

// Equality of {odd ell : some a_j divides ell} between the two tuples.
// Finite form: every odd a in e1 is divisible by some odd b in e2 and
// symmetrically (an odd multiple of a_j exists iff a_j is odd, and odd
// multiples of odd a are covered by odd divisors).
bool odd_multiples_sets_equal(const BrieskornExponents& e1,
                              const BrieskornExponents& e2);

std::optional<std::int64_t> minimal_odd_exponent(const BrieskornExponents& e);

// Every coefficient of char_divisor(ws1) + char_divisor(ws2) is even, the
// divisor form of the Fox-Milnor square condition on Delta_f * Delta_g.
bool fox_milnor_square(const WeightSystem& ws1, const WeightSystem& ws2);
bool fox_milnor_square(const BrieskornExponents& e1,
                       const BrieskornExponents& e2);

struct RecoveredExponents {
  std::vector<std::int64_t> exponents;     // sorted ascending
  bool hypothesis_violated = false;        // some entry divides another
};

// Peels count exponents from a mod-2 characteristic divisor: at each step
// expands the residual in the Lambda basis and takes the smallest index
// >= 2 with odd coefficient.  D must have coefficients in {0,1}.
// Inconsistent when the basis expansion fails, the support is exhausted
// early, or a residual survives after count steps.  Uniqueness of the
// result is guaranteed when the true exponents satisfy the no-multiple
// hypothesis; otherwise the hypothesis_violated flag is set.
RecoveredExponents recover_exponents(const Divisor& d, std::int64_t count);

enum class Verdict { Cobordant, NotCobordant, UnknownHypothesisNotMet };

const char* verdict_name(Verdict v) noexcept;

struct CriterionReport {
  std::string input_a;
  std::string input_b;
  bool witt_over_R = false;
  bool cot_test = false;
  bool mod2_congruent = false;
  bool odd_sets_equal = false;
  bool fox_milnor = false;
  Verdict verdict = Verdict::NotCobordant;
  std::vector<std::string> warnings;
};

// Runs every criterion on a pair of exponent tuples.  Cobordant iff the
// sorted multisets agree; NotCobordant when a necessary criterion (witt,
// mod2, odd sets) fails; UnknownHypothesisNotMet otherwise.
CriterionReport decide_brieskorn_cobordism(const BrieskornExponents& e1,
                                           const BrieskornExponents& e2,
                                           double tol = 1e-9);

// Exact evaluation of the rigidity hypothesis
//   sum 1/w_j + sum 1/w'_j - 2*min(all 1/w) < 1.
bool weight_rigidity_hypothesis(const WeightSystem& ws1,
                                const WeightSystem& ws2);

}  // namespace knotcob
