#include "core/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace knotcob {

SignatureTable equivariant_signatures(const WeightSystem& ws) {
  if (ws.variable_count() % 2 == 0)
    fail(errc::parity_error,
         "equivariant signatures need an odd number of variables; got " +
             std::to_string(ws.variable_count()) + " (stabilize first)");
  FracExpPoly p = pf_polynomial(ws);
  std::map<Rot, Int> acc;
  std::int64_t m = p.denom();
  for (const auto& [k, c] : p.terms()) {
    std::int64_t floor_alpha = k / m, r = k % m;
    if (r == 0) continue;  // lambda = 1 carries signature 0
    Rot q = Rot::make(r, m);
    if (floor_alpha % 2 == 0)
      acc[q] += c;
    else
      acc[q] -= c;
  }
  SignatureTable table;
  for (auto& [q, v] : acc)
    if (v != 0) table.entries.emplace(q, std::move(v));
  return table;
}

Int total_signature(const SignatureTable& table) {
  Int acc = 0;
  for (const auto& [q, v] : table.entries) acc += v;
  return acc;
}

SignatureReport signature_report(const WeightSystem& ws) {
  bool even = ws.variable_count() % 2 == 0;
  WeightSystem target = even ? stabilize(ws) : ws;
  SignatureReport report{ws, even, 1, equivariant_signatures(target), 0, {}};
  report.total = total_signature(report.table);
  if (even) {
    // Stabilizing n+1 variables scales the Seifert form by (-1)^(n+1),
    // which is +1 for the even counts handled here.
    report.seifert_sign = 1;
    report.warnings.push_back(
        "input has an even number of variables; signatures are those of its "
        "stabilization (one quadratic variable appended, Seifert form sign "
        "+1)");
  }
  return report;
}

bool witt_from_pf(const FracExpPoly& pa, const FracExpPoly& pb) {
  FracExpPoly diff = pa - pb;
  if (diff.is_zero()) return true;
  std::int64_t m = lcm64(pa.denom(), pb.denom());
  return reduce_mod_t_plus_1(diff, m).is_zero();
}

bool witt_equivalent_over_R(const WeightSystem& ws1, const WeightSystem& ws2) {
  if (ws1.variable_count() != ws2.variable_count())
    fail(errc::variable_count_mismatch,
         "witt test compares equal variable counts; got " +
             std::to_string(ws1.variable_count()) + " and " +
             std::to_string(ws2.variable_count()));
  return witt_from_pf(pf_polynomial(ws1), pf_polynomial(ws2));
}

bool witt_equivalent_over_R(const BrieskornExponents& e1,
                            const BrieskornExponents& e2) {
  return witt_equivalent_over_R(WeightSystem::from_exponents(e1),
                                WeightSystem::from_exponents(e2));
}

namespace {

double cot_product(const std::vector<std::int64_t>& exps, std::int64_t ell) {
  double acc = 1.0;
  for (std::int64_t a : exps) {
    double angle = std::numbers::pi * static_cast<double>(ell) /
                   (2.0 * static_cast<double>(a));
    acc *= std::cos(angle) / std::sin(angle);
  }
  return acc;
}

}  // namespace

bool cot_product_test(const BrieskornExponents& e1,
                      const BrieskornExponents& e2, double tol) {
  if (e1.variable_count() != e2.variable_count())
    fail(errc::variable_count_mismatch,
         "cotangent test compares equal variable counts; got " +
             std::to_string(e1.variable_count()) + " and " +
             std::to_string(e2.variable_count()));
  require(tol > 0, errc::invalid_argument, "tolerance must be positive");
  std::int64_t L = 1;
  for (std::int64_t a : e1.exponents()) L = lcm64(L, a);
  for (std::int64_t b : e2.exponents()) L = lcm64(L, b);
  for (std::int64_t ell = 1; ell < 2 * L; ell += 2) {
    double lhs = cot_product(e1.exponents(), ell);
    double rhs = cot_product(e2.exponents(), ell);
    if (std::abs(lhs - rhs) >= tol) return false;
  }
  return true;
}

bool mod2_divisor_congruent(const WeightSystem& ws1, const WeightSystem& ws2) {
  return mod2(char_divisor(ws1) - char_divisor(ws2)).is_zero();
}

bool mod2_divisor_congruent(const BrieskornExponents& e1,
                            const BrieskornExponents& e2) {
  return mod2(char_divisor_brieskorn(e1) - char_divisor_brieskorn(e2))
      .is_zero();
}

bool odd_multiples_sets_equal(const BrieskornExponents& e1,
                              const BrieskornExponents& e2) {
  auto covered = [](const std::vector<std::int64_t>& from,
                    const std::vector<std::int64_t>& by) {
    for (std::int64_t a : from) {
      if (a % 2 == 0) continue;
      bool found = false;
      for (std::int64_t b : by)
        if (b % 2 != 0 && a % b == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  return covered(e1.exponents(), e2.exponents()) &&
         covered(e2.exponents(), e1.exponents());
}

std::optional<std::int64_t> minimal_odd_exponent(const BrieskornExponents& e) {
  std::optional<std::int64_t> best;
  for (std::int64_t a : e.exponents())
    if (a % 2 != 0 && (!best || a < *best)) best = a;
  return best;
}

bool fox_milnor_square(const WeightSystem& ws1, const WeightSystem& ws2) {
  return mod2(char_divisor(ws1) + char_divisor(ws2)).is_zero();
}

bool fox_milnor_square(const BrieskornExponents& e1,
                       const BrieskornExponents& e2) {
  return mod2(char_divisor_brieskorn(e1) + char_divisor_brieskorn(e2))
      .is_zero();
}

RecoveredExponents recover_exponents(const Divisor& d, std::int64_t count) {
  require(count >= 1, errc::invalid_argument,
          "recovery needs a positive exponent count");
  for (const auto& [q, c] : d.entries())
    require(c == 1, errc::invalid_argument,
            "recovery input must have coefficients in {0,1}; reduce mod 2 "
            "first");

  std::vector<std::int64_t> recovered;
  Divisor partial = Divisor::unit();  // prod over recovered (Lambda_a - 1)
  for (std::int64_t step = 0; step < count; ++step) {
    Divisor residual = mod2(d - mod2(partial));
    std::map<std::int64_t, Rat> expansion;
    try {
      expansion = lambda_combination(residual);
    } catch (const error& e) {
      if (e.code() != errc::not_galois_invariant) throw;
      fail(errc::inconsistent,
           "residual after " + std::to_string(step) +
               " exponents is not a Lambda combination");
    }
    std::int64_t next = 0;
    for (const auto& [index, coeff] : expansion) {
      if (index < 2) continue;
      if (boost::multiprecision::numerator(coeff) % 2 == 0) continue;
      next = index;
      break;
    }
    if (next == 0)
      fail(errc::inconsistent,
           "Lambda support exhausted after " + std::to_string(step) +
               " of " + std::to_string(count) + " exponents");
    recovered.push_back(next);
    partial = partial * (lambda_divisor(next) - Divisor::unit());
  }
  if (!mod2(d - mod2(partial)).is_zero())
    fail(errc::inconsistent,
         "nonzero residual after recovering " + std::to_string(count) +
             " exponents");

  std::sort(recovered.begin(), recovered.end());
  RecoveredExponents out{recovered, false};
  for (std::size_t i = 0; i < recovered.size() && !out.hypothesis_violated; ++i)
    for (std::size_t j = 0; j < recovered.size(); ++j)
      if (i != j && recovered[j] % recovered[i] == 0) {
        out.hypothesis_violated = true;
        break;
      }
  return out;
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Cobordant: return "Cobordant";
    case Verdict::NotCobordant: return "NotCobordant";
    case Verdict::UnknownHypothesisNotMet: return "UnknownHypothesisNotMet";
  }
  return "UnknownHypothesisNotMet";
}

CriterionReport decide_brieskorn_cobordism(const BrieskornExponents& e1,
                                           const BrieskornExponents& e2,
                                           double tol) {
  if (e1.variable_count() != e2.variable_count())
    fail(errc::variable_count_mismatch,
         "cobordism report compares equal variable counts; got " +
             std::to_string(e1.variable_count()) + " and " +
             std::to_string(e2.variable_count()));

  CriterionReport report;
  report.input_a = render(e1);
  report.input_b = render(e2);
  report.witt_over_R = witt_equivalent_over_R(e1, e2);
  report.cot_test = cot_product_test(e1, e2, tol);
  report.mod2_congruent = mod2_divisor_congruent(e1, e2);
  report.odd_sets_equal = odd_multiples_sets_equal(e1, e2);
  report.fox_milnor = fox_milnor_square(e1, e2);

  bool same = e1.sorted_exponents() == e2.sorted_exponents();
  bool hyp1 = e1.no_multiple_hypothesis();
  bool hyp2 = e2.no_multiple_hypothesis();
  if (!hyp1)
    report.warnings.push_back("input a violates the no-multiple hypothesis");
  if (!hyp2)
    report.warnings.push_back("input b violates the no-multiple hypothesis");

  if (same) {
    report.verdict = Verdict::Cobordant;
  } else if (!report.witt_over_R || !report.mod2_congruent ||
             !report.odd_sets_equal) {
    report.verdict = Verdict::NotCobordant;
  } else {
    report.verdict = Verdict::UnknownHypothesisNotMet;
    if (hyp1 && hyp2)
      report.warnings.push_back(
          "necessary criteria pass for distinct exponent multisets although "
          "the no-multiple hypothesis holds for both inputs");
  }
  return report;
}

bool weight_rigidity_hypothesis(const WeightSystem& ws1,
                                const WeightSystem& ws2) {
  Rat sum = 0;
  Rat smallest;
  bool first = true;
  for (const WeightSystem* ws : {&ws1, &ws2}) {
    for (const Weight& w : ws->weights()) {
      Rat inv = Rat(w.den, w.num);
      sum += inv;
      if (first || inv < smallest) {
        smallest = inv;
        first = false;
      }
    }
  }
  return sum - 2 * smallest < 1;
}

}  // namespace knotcob
