#include "core/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <thread>

namespace knotcob {

const char* filter_name(HypothesisFilter f) noexcept {
  switch (f) {
    case HypothesisFilter::None: return "none";
    case HypothesisFilter::NoMultiple: return "nomultiple";
    case HypothesisFilter::PairwiseDistinct: return "distinct";
  }
  return "none";
}

const char* check_name(CheckKind c) noexcept {
  switch (c) {
    case CheckKind::Theorem2: return "theorem2";
    case CheckKind::TwoVar: return "twovar";
    case CheckKind::ThreeVar: return "threevar";
    case CheckKind::NecessityChain: return "necessity";
    case CheckKind::CriterionEquivalence: return "equivalence";
    case CheckKind::Example3: return "example3";
    case CheckKind::PropertySuite: return "suite";
  }
  return "theorem2";
}

HypothesisFilter parse_filter(const std::string& name) {
  for (HypothesisFilter f :
       {HypothesisFilter::None, HypothesisFilter::NoMultiple,
        HypothesisFilter::PairwiseDistinct})
    if (name == filter_name(f)) return f;
  fail(errc::invalid_argument, "unknown hypothesis filter \"" + name + "\"");
}

CheckKind parse_check(const std::string& name) {
  for (CheckKind c :
       {CheckKind::Theorem2, CheckKind::TwoVar, CheckKind::ThreeVar,
        CheckKind::NecessityChain, CheckKind::CriterionEquivalence,
        CheckKind::Example3, CheckKind::PropertySuite})
    if (name == check_name(c)) return c;
  fail(errc::invalid_argument, "unknown check \"" + name + "\"");
}

std::vector<BrieskornExponents> enumerate_tuples(std::int64_t vars,
                                                 std::int64_t max,
                                                 HypothesisFilter filter) {
  require(vars >= 1, errc::validation_error, "variable count must be >= 1");
  require(max >= 2, errc::validation_error, "max exponent must be >= 2");
  std::vector<BrieskornExponents> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(vars), 0);
  auto keep = [&](const std::vector<std::int64_t>& t) {
    if (filter == HypothesisFilter::None) return true;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (i == j) continue;
        if (filter == HypothesisFilter::NoMultiple && t[j] % t[i] == 0)
          return false;
        if (filter == HypothesisFilter::PairwiseDistinct && t[i] == t[j])
          return false;
      }
    return true;
  };
  std::function<void(std::size_t, std::int64_t)> rec =
      [&](std::size_t pos, std::int64_t lo) {
        if (pos == cur.size()) {
          if (keep(cur)) out.emplace_back(cur);
          return;
        }
        for (std::int64_t a = lo; a <= max; ++a) {
          cur[pos] = a;
          rec(pos + 1, a);
        }
      };
  rec(0, 2);
  return out;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void validate(const SearchConfig& cfg) {
  require(cfg.variables >= 1, errc::validation_error,
          "variable count must be >= 1");
  require(cfg.max_exponent >= 2, errc::validation_error,
          "max exponent must be >= 2");
  require(cfg.trials >= 1, errc::validation_error, "trials must be >= 1");
  require(cfg.jobs >= 1, errc::validation_error, "jobs must be >= 1");
}

// Runs check(i, j) over all unordered pairs i <= j of [0, count), appending
// a Violation for every returned property name.  Pair indices are assigned
// in row-major order starting at base_index; violations come back sorted so
// the report is deterministic regardless of the number of worker threads.
void run_pairs(
    std::size_t count, std::int64_t jobs, std::uint64_t base_index,
    const std::function<std::string(std::size_t)>& render_tuple,
    const std::function<std::optional<std::string>(std::size_t, std::size_t)>&
        check,
    VerificationReport& report) {
  auto row_base = [count](std::size_t i) {
    return static_cast<std::uint64_t>(i) * count -
           static_cast<std::uint64_t>(i) * (i - 1) / 2;
  };
  auto run_rows = [&](std::size_t first_row, std::size_t stride,
                      std::vector<Violation>& sink) {
    for (std::size_t i = first_row; i < count; i += stride) {
      std::uint64_t base = base_index + row_base(i);
      for (std::size_t j = i; j < count; ++j) {
        if (std::optional<std::string> property = check(i, j))
          sink.push_back(Violation{base + (j - i), *property, render_tuple(i),
                                   render_tuple(j)});
      }
    }
  };

  std::vector<Violation> found;
  if (jobs <= 1 || count < 2) {
    run_rows(0, 1, found);
  } else {
    std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::vector<Violation>> sinks(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        try {
          run_rows(w, workers, sinks[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
    for (std::vector<Violation>& sink : sinks)
      found.insert(found.end(), sink.begin(), sink.end());
    std::sort(found.begin(), found.end(),
              [](const Violation& a, const Violation& b) {
                return a.pair_index < b.pair_index;
              });
  }
  report.pairs_checked += count * (count + 1) / 2;
  report.violations.insert(report.violations.end(), found.begin(),
                           found.end());
}

std::vector<FracExpPoly> pf_of_all(const std::vector<BrieskornExponents>& ts) {
  std::vector<FracExpPoly> out;
  out.reserve(ts.size());
  for (const BrieskornExponents& t : ts) out.push_back(pf_polynomial(t));
  return out;
}

std::vector<std::vector<std::int64_t>> sorted_of_all(
    const std::vector<BrieskornExponents>& ts) {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(ts.size());
  for (const BrieskornExponents& t : ts) out.push_back(t.sorted_exponents());
  return out;
}

void finish(VerificationReport& report, const Stopwatch& clock) {
  report.elapsed_seconds = clock.seconds();
  report.pass = report.violations.empty();
}

}  // namespace

VerificationReport verify_theorem2(const SearchConfig& cfg) {
  validate(cfg);
  Stopwatch clock;
  VerificationReport report;
  report.config = cfg;
  report.config.check = CheckKind::Theorem2;
  report.config.filter = HypothesisFilter::NoMultiple;

  std::vector<BrieskornExponents> tuples = enumerate_tuples(
      cfg.variables, cfg.max_exponent, HypothesisFilter::NoMultiple);
  std::vector<FracExpPoly> pf = pf_of_all(tuples);
  std::vector<std::vector<std::int64_t>> sorted = sorted_of_all(tuples);

  run_pairs(
      tuples.size(), cfg.jobs, 0,
      [&](std::size_t i) { return render(tuples[i]); },
      [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        if (witt_from_pf(pf[i], pf[j]) == (sorted[i] == sorted[j]))
          return std::nullopt;
        return "witt_equivalent_over_R <-> equal multisets";
      },
      report);
  finish(report, clock);
  return report;
}

VerificationReport verify_low_variables(const SearchConfig& cfg) {
  validate(cfg);
  Stopwatch clock;
  VerificationReport report;
  report.config = cfg;
  report.config.filter = HypothesisFilter::None;

  std::vector<BrieskornExponents> tuples = enumerate_tuples(
      cfg.variables, cfg.max_exponent, HypothesisFilter::None);
  std::vector<FracExpPoly> pf = pf_of_all(tuples);
  std::vector<std::vector<std::int64_t>> sorted = sorted_of_all(tuples);

  run_pairs(
      tuples.size(), cfg.jobs, 0,
      [&](std::size_t i) { return render(tuples[i]); },
      [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        if (!witt_from_pf(pf[i], pf[j]) || sorted[i] == sorted[j])
          return std::nullopt;
        return "witt_equivalent_over_R -> equal multisets";
      },
      report);
  finish(report, clock);
  return report;
}

VerificationReport verify_necessity_chain(const SearchConfig& cfg) {
  validate(cfg);
  Stopwatch clock;
  VerificationReport report;
  report.config = cfg;
  report.config.check = CheckKind::NecessityChain;

  for (std::int64_t v = 1; v <= cfg.variables; ++v) {
    std::vector<BrieskornExponents> tuples =
        enumerate_tuples(v, cfg.max_exponent, cfg.filter);
    std::vector<FracExpPoly> pf = pf_of_all(tuples);
    std::vector<Divisor> m2;
    m2.reserve(tuples.size());
    for (const BrieskornExponents& t : tuples)
      m2.push_back(mod2(char_divisor_brieskorn(t)));

    run_pairs(
        tuples.size(), cfg.jobs, report.pairs_checked,
        [&](std::size_t i) { return render(tuples[i]); },
        [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
          if (!witt_from_pf(pf[i], pf[j])) return std::nullopt;
          if (!(m2[i] == m2[j]))
            return "witt_equivalent_over_R -> mod2_divisor_congruent";
          if (!odd_multiples_sets_equal(tuples[i], tuples[j]))
            return "witt_equivalent_over_R -> odd_multiples_sets_equal";
          return std::nullopt;
        },
        report);
  }
  finish(report, clock);
  return report;
}

VerificationReport verify_criterion_equivalence(const SearchConfig& cfg) {
  validate(cfg);
  Stopwatch clock;
  VerificationReport report;
  report.config = cfg;
  report.config.check = CheckKind::CriterionEquivalence;

  for (std::int64_t v = 1; v <= cfg.variables; ++v) {
    std::vector<BrieskornExponents> tuples =
        enumerate_tuples(v, cfg.max_exponent, cfg.filter);
    std::vector<FracExpPoly> pf = pf_of_all(tuples);

    run_pairs(
        tuples.size(), cfg.jobs, report.pairs_checked,
        [&](std::size_t i) { return render(tuples[i]); },
        [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
          if (cot_product_test(tuples[i], tuples[j]) ==
              witt_from_pf(pf[i], pf[j]))
            return std::nullopt;
          return "cot_product_test <-> witt_equivalent_over_R";
        },
        report);
  }
  finish(report, clock);
  return report;
}

VerificationReport reproduce_example3(std::int64_t n,
                                      const std::vector<std::int64_t>& ps) {
  require(n >= 3, errc::validation_error,
          "the example family needs n >= 3");
  require(static_cast<std::int64_t>(ps.size()) == n - 3,
          errc::validation_error,
          "the example family needs exactly n-3 leading exponents");
  Stopwatch clock;
  VerificationReport report;
  report.config.check = CheckKind::Example3;
  report.config.variables = n;
  report.config.filter = HypothesisFilter::None;

  std::vector<std::int64_t> a = ps, b = ps;
  a.insert(a.end(), {8, 8, 4, 4});
  b.insert(b.end(), {6, 6, 6, 6});
  BrieskornExponents ea(std::move(a)), eb(std::move(b));

  report.pairs_checked = 1;
  if (!fox_milnor_square(ea, eb))
    report.violations.push_back(
        Violation{0, "fox_milnor_square", render(ea), render(eb)});
  if (!mod2_divisor_congruent(ea, eb))
    report.violations.push_back(
        Violation{0, "mod2_divisor_congruent", render(ea), render(eb)});
  if (ea.sorted_exponents() == eb.sorted_exponents())
    report.violations.push_back(
        Violation{0, "exponent multisets differ", render(ea), render(eb)});
  finish(report, clock);
  return report;
}

namespace {

// All randomized draws go through gen() % span so reports are identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  BrieskornExponents exponent_tuple(std::int64_t vars, std::int64_t max) {
    std::vector<std::int64_t> t;
    t.reserve(static_cast<std::size_t>(vars));
    for (std::int64_t i = 0; i < vars; ++i) t.push_back(range(2, max));
    return BrieskornExponents(std::move(t));
  }

  // Weight systems built from one- and two-variable singularity blocks:
  // z^a contributes weight a; z1^a + z1*z2^b contributes weights
  // (a, a*b/(a-1)).  Block products keep P_f a genuine polynomial.
  WeightSystem weight_system(std::int64_t vars, std::int64_t max) {
    std::vector<Weight> w;
    std::int64_t left = vars;
    while (left > 0) {
      if (left >= 2 && range(0, 1) == 1) {
        std::int64_t a = range(2, max), b = range(2, max);
        w.push_back(Weight{a, 1});
        w.push_back(Weight{a * b, a - 1});
        left -= 2;
      } else {
        w.push_back(Weight{range(2, max), 1});
        left -= 1;
      }
    }
    return WeightSystem(std::move(w));
  }

 private:
  std::mt19937_64 gen_;
};

struct PropertyRun {
  VerificationReport& report;
  PropertyResult current;

  PropertyRun(VerificationReport& r, std::string name)
      : report(r), current{std::move(name), 0, true} {}

  void item(bool ok, const std::string& input_a, const std::string& input_b,
            const std::string& detail = "") {
    ++current.checked;
    ++report.pairs_checked;
    if (!ok) {
      current.pass = false;
      report.violations.push_back(
          Violation{report.pairs_checked - 1,
                    detail.empty() ? current.name : current.name + ": " + detail,
                    input_a, input_b});
    }
  }

  void done() { report.properties.push_back(std::move(current)); }
};

}  // namespace

VerificationReport run_property_suite(const SearchConfig& cfg) {
  validate(cfg);
  Stopwatch clock;
  VerificationReport report;
  report.config = cfg;
  report.config.check = CheckKind::PropertySuite;
  Rng rng(cfg.seed);

  std::vector<std::vector<BrieskornExponents>> by_vars;
  std::vector<std::vector<FracExpPoly>> pf_by_vars;
  for (std::int64_t v = 1; v <= cfg.variables; ++v) {
    by_vars.push_back(
        enumerate_tuples(v, cfg.max_exponent, HypothesisFilter::None));
    pf_by_vars.push_back(pf_of_all(by_vars.back()));
  }

  {
    PropertyRun run(report, "criterion-equivalence");
    for (std::size_t g = 0; g < by_vars.size(); ++g) {
      const auto& tuples = by_vars[g];
      const auto& pf = pf_by_vars[g];
      for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i; j < tuples.size(); ++j)
          run.item(cot_product_test(tuples[i], tuples[j]) ==
                       witt_from_pf(pf[i], pf[j]),
                   render(tuples[i]), render(tuples[j]));
    }
    run.done();
  }

  {
    PropertyRun run(report, "necessity-chain");
    for (std::size_t g = 0; g < by_vars.size(); ++g) {
      const auto& tuples = by_vars[g];
      const auto& pf = pf_by_vars[g];
      std::vector<Divisor> m2;
      m2.reserve(tuples.size());
      for (const BrieskornExponents& t : tuples)
        m2.push_back(mod2(char_divisor_brieskorn(t)));
      for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i; j < tuples.size(); ++j) {
          bool ok = !witt_from_pf(pf[i], pf[j]) ||
                    (m2[i] == m2[j] &&
                     odd_multiples_sets_equal(tuples[i], tuples[j]));
          run.item(ok, render(tuples[i]), render(tuples[j]));
        }
    }
    run.done();
  }

  {
    PropertyRun run(report, "characteristic-divisor-routes");
    for (const auto& tuples : by_vars)
      for (const BrieskornExponents& t : tuples)
        run.item(char_divisor(WeightSystem::from_exponents(t)) ==
                     char_divisor_brieskorn(t),
                 render(t), render(t));
    run.done();
  }

  {
    PropertyRun run(report, "milnor-number-coefficient-sum");
    for (std::int64_t i = 0; i < cfg.trials; ++i) {
      WeightSystem ws =
          rng.weight_system(rng.range(1, cfg.variables), cfg.max_exponent);
      run.item(eval_at_one(pf_polynomial(ws)) == milnor_number(ws), render(ws),
               render(ws));
    }
    run.done();
  }

  {
    PropertyRun run(report, "stabilization-invariance");
    FracExpPoly half = FracExpPoly::term(1, 1, 2);
    for (std::int64_t i = 0; i < cfg.trials; ++i) {
      std::int64_t v = rng.range(1, cfg.variables);
      WeightSystem a = rng.weight_system(v, cfg.max_exponent);
      WeightSystem b = rng.weight_system(v, cfg.max_exponent);
      bool ok = pf_polynomial(stabilize(a)) == half * pf_polynomial(a) &&
                pf_polynomial(stabilize(b)) == half * pf_polynomial(b) &&
                witt_equivalent_over_R(a, b) ==
                    witt_equivalent_over_R(stabilize(a), stabilize(b));
      run.item(ok, render(a), render(b));
    }
    run.done();
  }

  {
    PropertyRun run(report, "recovery-round-trip");
    for (std::int64_t v = 1; v <= cfg.variables; ++v)
      for (const BrieskornExponents& t : enumerate_tuples(
               v, cfg.max_exponent, HypothesisFilter::NoMultiple)) {
        RecoveredExponents rec =
            recover_exponents(mod2(char_divisor_brieskorn(t)), v);
        run.item(rec.exponents == t.sorted_exponents() &&
                     !rec.hypothesis_violated,
                 render(t), render(t));
      }
    run.done();
  }

  {
    PropertyRun run(report, "signature-iff-witt");
    for (std::size_t g = 0; g < by_vars.size(); ++g) {
      const auto& tuples = by_vars[g];
      const auto& pf = pf_by_vars[g];
      std::vector<SignatureTable> sig;
      sig.reserve(tuples.size());
      for (const BrieskornExponents& t : tuples) {
        WeightSystem ws = WeightSystem::from_exponents(t);
        if (ws.variable_count() % 2 == 0) ws = stabilize(ws);
        sig.push_back(equivariant_signatures(ws));
      }
      for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i; j < tuples.size(); ++j)
          run.item((sig[i] == sig[j]) == witt_from_pf(pf[i], pf[j]),
                   render(tuples[i]), render(tuples[j]));
    }
    run.done();
  }

  {
    PropertyRun run(report, "criterion-symmetry");
    for (std::int64_t i = 0; i < cfg.trials; ++i) {
      std::int64_t v = rng.range(1, cfg.variables);
      BrieskornExponents a = rng.exponent_tuple(v, cfg.max_exponent);
      BrieskornExponents b = rng.exponent_tuple(v, cfg.max_exponent);
      bool ok = witt_equivalent_over_R(a, b) == witt_equivalent_over_R(b, a) &&
                cot_product_test(a, b) == cot_product_test(b, a) &&
                mod2_divisor_congruent(a, b) == mod2_divisor_congruent(b, a) &&
                odd_multiples_sets_equal(a, b) ==
                    odd_multiples_sets_equal(b, a) &&
                fox_milnor_square(a, b) == fox_milnor_square(b, a);
      run.item(ok, render(a), render(b));
    }
    run.done();
  }

  finish(report, clock);
  return report;
}

VerificationReport run_check(const SearchConfig& cfg) {
  switch (cfg.check) {
    case CheckKind::Theorem2:
      return verify_theorem2(cfg);
    case CheckKind::TwoVar:
    case CheckKind::ThreeVar: {
      SearchConfig local = cfg;
      std::int64_t expected = cfg.check == CheckKind::TwoVar ? 2 : 3;
      require(local.variables == expected, errc::validation_error,
              std::string(check_name(cfg.check)) + " runs with " +
                  std::to_string(expected) + " variables");
      return verify_low_variables(local);
    }
    case CheckKind::NecessityChain:
      return verify_necessity_chain(cfg);
    case CheckKind::CriterionEquivalence:
      return verify_criterion_equivalence(cfg);
    case CheckKind::PropertySuite:
      return run_property_suite(cfg);
    case CheckKind::Example3: {
      validate(cfg);
      require(cfg.variables >= 3, errc::validation_error,
              "the example family needs n >= 3");
      Stopwatch clock;
      VerificationReport report;
      report.config = cfg;
      std::vector<std::vector<std::int64_t>> prefixes;
      if (cfg.variables == 3) {
        prefixes.push_back({});
      } else {
        for (const BrieskornExponents& p : enumerate_tuples(
                 cfg.variables - 3, cfg.max_exponent, HypothesisFilter::None))
          prefixes.push_back(p.exponents());
      }
      for (std::size_t i = 0; i < prefixes.size(); ++i) {
        VerificationReport sub = reproduce_example3(cfg.variables, prefixes[i]);
        for (Violation v : sub.violations) {
          v.pair_index = i;
          report.violations.push_back(std::move(v));
        }
        report.pairs_checked += sub.pairs_checked;
      }
      finish(report, clock);
      return report;
    }
  }
  fail(errc::invalid_argument, "unknown check kind");
}

}  // namespace knotcob
