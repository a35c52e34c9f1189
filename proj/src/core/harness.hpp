#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/criteria.hpp"
#include "core/invariants.hpp"

namespace knotcob {

enum class HypothesisFilter { None, NoMultiple, PairwiseDistinct };
enum class CheckKind {
  Theorem2,
  TwoVar,
  ThreeVar,
  NecessityChain,
  CriterionEquivalence,
  Example3,
  PropertySuite,
};

const char* filter_name(HypothesisFilter f) noexcept;
const char* check_name(CheckKind c) noexcept;
HypothesisFilter parse_filter(const std::string& name);  // InvalidArgument
CheckKind parse_check(const std::string& name);          // InvalidArgument

struct SearchConfig {
  CheckKind check = CheckKind::Theorem2;
  std::int64_t variables = 3;
  std::int64_t max_exponent = 12;
  HypothesisFilter filter = HypothesisFilter::NoMultiple;
  std::uint64_t seed = 0;
  std::int64_t trials = 200;
  std::int64_t jobs = 1;
};

struct Violation {
  std::uint64_t pair_index = 0;
  std::string property;
  std::string input_a;
  std::string input_b;
};

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  bool pass = true;
};

struct VerificationReport {
  SearchConfig config;
  std::uint64_t pairs_checked = 0;
  std::vector<Violation> violations;
  std::vector<PropertyResult> properties;  // property suite only
  double elapsed_seconds = 0.0;
  bool pass = true;  // iff violations is empty
};

// All nondecreasing tuples in [2, max]^vars passing the filter, in
// lexicographic order.
std::vector<BrieskornExponents> enumerate_tuples(std::int64_t vars,
                                                 std::int64_t max,
                                                 HypothesisFilter filter);

// Theorem check over every unordered pair of no-multiple tuples:
// witt_equivalent_over_R iff equal multisets.
VerificationReport verify_theorem2(const SearchConfig& cfg);

// Unfiltered low-variable check: witt_equivalent_over_R implies equal
// multisets (cfg.variables selects the count, typically 2 or 3).
VerificationReport verify_low_variables(const SearchConfig& cfg);

// For every pair (variable counts 1..cfg.variables): witt implies both the
// mod-2 congruence and the odd-multiples set equality.
VerificationReport verify_necessity_chain(const SearchConfig& cfg);

// For every pair (variable counts 1..cfg.variables): the numeric cotangent
// test agrees with the exact mod t+1 test.
VerificationReport verify_criterion_equivalence(const SearchConfig& cfg);

// Exponent tuples (ps..., 8,8,4,4) vs (ps..., 6,6,6,6) in n+1 variables:
// fox_milnor_square and mod2 congruence hold while the multisets differ.
// ps must have length n-3.
VerificationReport reproduce_example3(std::int64_t n,
                                      const std::vector<std::int64_t>& ps);

// Cross-check battery (deterministic in cfg.seed): criterion equivalence,
// necessity chain, the two characteristic-divisor routes, stabilization
// invariance, recovery round-trip, signature tables vs witt, symmetry, and
// the Milnor number identity.  Exhaustive parts use cfg.variables /
// cfg.max_exponent; randomized parts run cfg.trials samples.
VerificationReport run_property_suite(const SearchConfig& cfg);

// Dispatch on cfg.check; Example3 runs the full family with n =
// cfg.variables and every nondecreasing prefix tuple over [2, max].
VerificationReport run_check(const SearchConfig& cfg);

}  // namespace knotcob
