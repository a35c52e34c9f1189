// Command-line front end. Talks to the library exclusively through the
// C API in knotcob.h; all rendering and mathematics happen behind it.
//
// Exit codes: 0 success / true verdict, 1 false or failing verdict,
// 2 usage or input errors.

#include <knotcob.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace {

[[noreturn]] void die(kc_status status) {
  std::cerr << kc_status_name(status) << ": " << kc_last_error() << "\n";
  std::exit(2);
}

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void ensure(kc_status status) {
  if (status != KC_OK) die(status);
}

std::string take(char* raw) {
  std::string text = raw == nullptr ? std::string() : std::string(raw);
  kc_string_free(raw);
  return text;
}

struct InputDeleter {
  void operator()(kc_input* p) const { kc_input_free(p); }
};
struct PolyDeleter {
  void operator()(kc_poly* p) const { kc_poly_free(p); }
};
struct ReportDeleter {
  void operator()(kc_report* p) const { kc_report_free(p); }
};
struct VerificationDeleter {
  void operator()(kc_verification* p) const { kc_verification_free(p); }
};

using Input = std::unique_ptr<kc_input, InputDeleter>;
using Poly = std::unique_ptr<kc_poly, PolyDeleter>;
using Report = std::unique_ptr<kc_report, ReportDeleter>;
using Verification = std::unique_ptr<kc_verification, VerificationDeleter>;

Input parse_input(const std::string& text, bool require_integral) {
  kc_input* raw = nullptr;
  ensure(kc_input_parse(text.c_str(), &raw));
  Input input(raw);
  if (require_integral) {
    int32_t integral = 0;
    ensure(kc_input_is_integral(input.get(), &integral));
    if (integral == 0)
      die_usage("'" + text + "' contains fractional weights; this command needs integer exponents");
  }
  return input;
}

// Print to stdout and, when requested, mirror the same bytes to a file.
void deliver(std::string body, const std::string& out_path) {
  if (body.empty() || body.back() != '\n') body += '\n';
  std::fputs(body.c_str(), stdout);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) die_usage("cannot open '" + out_path + "' for writing");
    file << body;
    file.flush();
    if (!file.good()) die_usage("failed while writing '" + out_path + "'");
  }
}

struct VerifyDefaults {
  int32_t variables;
  int64_t max_exponent;
  const char* filter;
};

VerifyDefaults defaults_for(const std::string& check) {
  if (check == "theorem2") return {3, 12, "nomultiple"};
  if (check == "twovar") return {2, 10, "none"};
  if (check == "threevar") return {3, 8, "none"};
  if (check == "necessity") return {3, 9, "none"};
  if (check == "equivalence") return {3, 9, "none"};
  if (check == "suite") return {3, 9, "none"};
  if (check == "example3") return {3, 5, "none"};
  return {3, 12, "nomultiple"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact invariants of Brieskorn and weighted homogeneous singularity "
      "links: weight polynomials, characteristic divisors, equivariant "
      "signatures, Witt equivalence over the reals, and batch verification."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  std::string exponents_text;
  std::string weights_text;
  std::string a_text;
  std::string b_text;
  std::string format = "text";
  std::string out_path;
  double tolerance = 1e-9;
  long long recover_count = 0;

  std::string check = "theorem2";
  long long vars = 0;
  long long max_exponent = 0;
  std::string filter;
  unsigned long long seed = 0;
  long long trials = 200;
  long long jobs = 1;

  long long example_n = 3;
  std::vector<long long> example_ps;
  long long example_max = 0;

  const std::vector<std::string> text_json = {"text", "json"};
  const std::vector<std::string> text_json_csv = {"text", "json", "csv"};

  auto add_format = [&](CLI::App* sub, bool with_csv) {
    sub->add_option("--format", format,
                    with_csv ? "Output format: text, json, or csv"
                             : "Output format: text or json")
        ->check(CLI::IsMember(with_csv ? text_json_csv : text_json));
    sub->add_option("--out", out_path,
                    "Also write the rendered output to this file");
  };

  struct InputOptions {
    CLI::Option* exponents;
    CLI::Option* weights;
  };
  auto add_single_input = [&](CLI::App* sub) -> InputOptions {
    auto* oe = sub->add_option(
        "--exponents", exponents_text,
        "Comma-separated integer exponents >= 2, e.g. 2,3,7");
    auto* ow = sub->add_option(
        "--weights", weights_text,
        "Comma-separated weights (integers or fractions u/v), e.g. 5/2,3");
    oe->excludes(ow);
    return {oe, ow};
  };
  auto add_pair_input = [&](CLI::App* sub) {
    sub->add_option("--a", a_text, "First input: exponents or weights list")
        ->required();
    sub->add_option("--b", b_text, "Second input: exponents or weights list")
        ->required();
  };

  CLI::App* pf = app.add_subcommand(
      "pf", "Weight polynomial P and Milnor number of one input");
  InputOptions pf_in = add_single_input(pf);
  add_format(pf, false);

  CLI::App* delta = app.add_subcommand(
      "delta", "Characteristic divisor / polynomial of one input");
  InputOptions delta_in = add_single_input(delta);
  add_format(delta, false);

  CLI::App* sig = app.add_subcommand(
      "sig", "Equivariant signature table of one input");
  InputOptions sig_in = add_single_input(sig);
  add_format(sig, false);

  CLI::App* witt = app.add_subcommand(
      "witt", "Witt equivalence over the reals of two inputs");
  add_pair_input(witt);
  add_format(witt, false);

  CLI::App* cot = app.add_subcommand(
      "cot", "Numeric cotangent product test of two exponent lists");
  add_pair_input(cot);
  cot->add_option("--tolerance", tolerance,
                  "Absolute tolerance for product comparison (default 1e-9)");
  add_format(cot, false);

  CLI::App* report = app.add_subcommand(
      "report", "Full cobordism criterion report for two exponent lists");
  add_pair_input(report);
  report->add_option(
      "--tolerance", tolerance,
      "Absolute tolerance for the cotangent cross-check (default 1e-9)");
  add_format(report, true);

  CLI::App* recover = app.add_subcommand(
      "recover",
      "Recover exponents from the mod-2 characteristic divisor they induce");
  recover
      ->add_option("--exponents", exponents_text,
                   "Comma-separated integer exponents >= 2")
      ->required();
  recover->add_option(
      "--count", recover_count,
      "Number of exponents to recover (default: length of the input)");
  add_format(recover, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a batch verification over enumerated exponent tuples");
  verify
      ->add_option("--check", check,
                   "Which verification to run: theorem2, twovar, threevar, "
                   "necessity, equivalence, example3, or suite")
      ->check(CLI::IsMember({"theorem2", "twovar", "threevar", "necessity",
                             "equivalence", "example3", "suite"}));
  CLI::Option* verify_vars =
      verify->add_option("--vars", vars, "Number of variables to enumerate");
  CLI::Option* verify_max = verify->add_option(
      "--max-exponent", max_exponent, "Largest exponent to enumerate");
  CLI::Option* verify_filter = verify->add_option(
      "--filter", filter,
      "Tuple filter: none, nomultiple, or distinct");
  verify_filter->check(CLI::IsMember({"none", "nomultiple", "distinct"}));
  verify->add_option("--seed", seed,
                     "Seed for the randomized property suite (default 0)");
  verify->add_option("--trials", trials,
                     "Trials per randomized property (default 200)");
  verify->add_option("--jobs", jobs,
                     "Worker threads for pair enumeration (default 1)");
  add_format(verify, true);

  CLI::App* example3 = app.add_subcommand(
      "example3",
      "Check the distinct-exponent family whose characteristic-polynomial "
      "product is a square");
  example3->add_option("--n", example_n,
                       "Number of variables (>= 3, default 3)");
  CLI::Option* example_ps_opt =
      example3
          ->add_option("--ps", example_ps,
                       "Comma-separated prefix exponents (length n-3)")
          ->delimiter(',');
  example3->add_option(
      "--max-exponent", example_max,
      "Largest prefix exponent when --ps is omitted and n > 3 (default 5)");
  example3->add_option("--jobs", jobs,
                       "Worker threads for pair enumeration (default 1)");
  add_format(example3, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto resolve_single = [&](const InputOptions& opts) -> Input {
    if (opts.exponents->count() > 0) return parse_input(exponents_text, true);
    if (opts.weights->count() > 0) return parse_input(weights_text, false);
    die_usage("provide --exponents or --weights");
  };

  if (app.got_subcommand(pf)) {
    Input input = resolve_single(pf_in);
    if (format == "json") {
      char* text = nullptr;
      ensure(kc_pf_document(input.get(), &text));
      deliver(take(text), out_path);
    } else {
      kc_poly* raw = nullptr;
      ensure(kc_pf_polynomial(input.get(), &raw));
      Poly poly(raw);
      char* text = nullptr;
      ensure(kc_poly_render(poly.get(), &text));
      deliver(take(text), out_path);
    }
    return 0;
  }

  if (app.got_subcommand(delta)) {
    Input input = resolve_single(delta_in);
    char* text = nullptr;
    if (format == "json")
      ensure(kc_delta_document(input.get(), &text));
    else
      ensure(kc_delta_text(input.get(), &text));
    deliver(take(text), out_path);
    return 0;
  }

  if (app.got_subcommand(sig)) {
    Input input = resolve_single(sig_in);
    char* text = nullptr;
    if (format == "json")
      ensure(kc_sig_document(input.get(), &text));
    else
      ensure(kc_sig_text(input.get(), &text));
    deliver(take(text), out_path);
    return 0;
  }

  if (app.got_subcommand(witt)) {
    Input a = parse_input(a_text, false);
    Input b = parse_input(b_text, false);
    int32_t verdict = 0;
    ensure(kc_witt(a.get(), b.get(), &verdict));
    if (format == "json") {
      char* text = nullptr;
      ensure(kc_witt_document(a.get(), b.get(), &text));
      deliver(take(text), out_path);
    } else {
      deliver(std::string("witt_equivalent_over_R: ") +
                  (verdict != 0 ? "true" : "false"),
              out_path);
    }
    return verdict != 0 ? 0 : 1;
  }

  if (app.got_subcommand(cot)) {
    Input a = parse_input(a_text, true);
    Input b = parse_input(b_text, true);
    int32_t verdict = 0;
    ensure(kc_cot(a.get(), b.get(), tolerance, &verdict));
    if (format == "json") {
      char* text = nullptr;
      ensure(kc_cot_document(a.get(), b.get(), tolerance, &text));
      deliver(take(text), out_path);
    } else {
      deliver(std::string("cot_product_test: ") +
                  (verdict != 0 ? "true" : "false"),
              out_path);
    }
    return verdict != 0 ? 0 : 1;
  }

  if (app.got_subcommand(report)) {
    Input a = parse_input(a_text, true);
    Input b = parse_input(b_text, true);
    kc_report* raw = nullptr;
    ensure(kc_report_run(a.get(), b.get(), tolerance, &raw));
    Report rep(raw);
    char* text = nullptr;
    if (format == "json")
      ensure(kc_report_json(rep.get(), &text));
    else if (format == "csv")
      ensure(kc_report_csv(rep.get(), &text));
    else
      ensure(kc_report_text(rep.get(), &text));
    deliver(take(text), out_path);
    kc_verdict verdict = KC_VERDICT_UNKNOWN_HYPOTHESIS_NOT_MET;
    ensure(kc_report_verdict(rep.get(), &verdict));
    return verdict == KC_VERDICT_COBORDANT ? 0 : 1;
  }

  if (app.got_subcommand(recover)) {
    Input input = parse_input(exponents_text, true);
    char* text = nullptr;
    if (format == "json")
      ensure(kc_recover_document(input.get(), recover_count, &text));
    else
      ensure(kc_recover_text(input.get(), recover_count, &text));
    deliver(take(text), out_path);
    int32_t round_trip = 0;
    ensure(kc_recover_round_trip(input.get(), recover_count, &round_trip));
    return round_trip != 0 ? 0 : 1;
  }

  auto deliver_verification = [&](kc_verification* raw) -> int {
    Verification ver(raw);
    char* text = nullptr;
    if (format == "json")
      ensure(kc_verification_json(ver.get(), &text));
    else if (format == "csv")
      ensure(kc_verification_csv(ver.get(), &text));
    else
      ensure(kc_verification_text(ver.get(), &text));
    deliver(take(text), out_path);
    int32_t pass = 0;
    ensure(kc_verification_pass(ver.get(), &pass));
    return pass != 0 ? 0 : 1;
  };

  if (app.got_subcommand(verify)) {
    VerifyDefaults d = defaults_for(check);
    kc_verify_config cfg;
    cfg.check = check.c_str();
    cfg.variables = verify_vars->count() > 0 ? static_cast<int32_t>(vars)
                                             : d.variables;
    cfg.max_exponent = verify_max->count() > 0
                           ? static_cast<int64_t>(max_exponent)
                           : d.max_exponent;
    cfg.filter = verify_filter->count() > 0 ? filter.c_str() : d.filter;
    cfg.seed = static_cast<uint64_t>(seed);
    cfg.trials = static_cast<int32_t>(trials);
    cfg.jobs = static_cast<int32_t>(jobs);
    kc_verification* raw = nullptr;
    ensure(kc_verify(&cfg, &raw));
    return deliver_verification(raw);
  }

  if (app.got_subcommand(example3)) {
    if (example_ps_opt->count() > 0 || example_n == 3) {
      std::vector<int64_t> prefix(example_ps.begin(), example_ps.end());
      kc_verification* raw = nullptr;
      ensure(kc_example3(static_cast<int32_t>(example_n), prefix.data(),
                         static_cast<int32_t>(prefix.size()), &raw));
      return deliver_verification(raw);
    }
    kc_verify_config cfg;
    cfg.check = "example3";
    cfg.variables = static_cast<int32_t>(example_n);
    cfg.max_exponent = example_max > 0 ? example_max : 5;
    cfg.filter = "none";
    cfg.seed = 0;
    cfg.trials = 1;
    cfg.jobs = static_cast<int32_t>(jobs);
    kc_verification* raw = nullptr;
    ensure(kc_verify(&cfg, &raw));
    return deliver_verification(raw);
  }

  die_usage("no subcommand selected");
}
