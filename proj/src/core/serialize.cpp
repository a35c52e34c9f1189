#include "core/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knotcob {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::int64_t parse_positive_int(const std::string& token, std::size_t entry) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    fail(errc::parse_error, "entry " + std::to_string(entry) + " (\"" + token +
                                "\") is not a positive integer");
  try {
    return std::stoll(token);
  } catch (const std::out_of_range&) {
    fail(errc::parse_error,
         "entry " + std::to_string(entry) + " (\"" + token +
             "\") is out of range");
  }
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  std::vector<std::string> tokens = split_commas(text);
  bool integral = true;
  std::vector<Weight> weights;
  std::vector<std::int64_t> exponents;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string tok = trimmed(tokens[i]);
    if (tok.empty())
      fail(errc::parse_error, "entry " + std::to_string(i + 1) + " is empty");
    std::size_t slash = tok.find('/');
    if (slash == std::string::npos) {
      std::int64_t v = parse_positive_int(tok, i + 1);
      exponents.push_back(v);
      weights.push_back(Weight{v, 1});
    } else {
      integral = false;
      std::int64_t num = parse_positive_int(trimmed(tok.substr(0, slash)), i + 1);
      std::int64_t den =
          parse_positive_int(trimmed(tok.substr(slash + 1)), i + 1);
      if (den == 0)
        fail(errc::parse_error,
             "entry " + std::to_string(i + 1) + " has denominator zero");
      weights.push_back(Weight{num, den});
    }
  }
  if (integral) return BrieskornExponents(std::move(exponents));
  return WeightSystem(std::move(weights));
}

WeightSystem input_weights(const ParsedInput& in) {
  if (const auto* e = std::get_if<BrieskornExponents>(&in))
    return WeightSystem::from_exponents(*e);
  return std::get<WeightSystem>(in);
}

const BrieskornExponents* input_exponents(const ParsedInput& in) {
  return std::get_if<BrieskornExponents>(&in);
}

std::string render_input(const ParsedInput& in) {
  if (const auto* e = std::get_if<BrieskornExponents>(&in)) return render(*e);
  return render(std::get<WeightSystem>(in));
}

namespace {

ordered_json input_json(const ParsedInput& in) {
  ordered_json out;
  if (const auto* e = std::get_if<BrieskornExponents>(&in)) {
    out["exponents"] = e->exponents();
  } else {
    ordered_json w = ordered_json::array();
    for (const Weight& weight : std::get<WeightSystem>(in).weights())
      w.push_back({weight.num, weight.den});
    out["weights"] = std::move(w);
  }
  out["text"] = render_input(in);
  return out;
}

ordered_json document(const char* kind) {
  ordered_json doc;
  doc["schema_version"] = schema_version;
  doc["kind"] = kind;
  return doc;
}

ordered_json poly_json(const FracExpPoly& p) {
  ordered_json out;
  out["denom"] = p.denom();
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : p.terms()) {
    std::int64_t g = gcd64(k, p.denom());
    terms.push_back({{"num", k / g},
                     {"den", p.denom() / g},
                     {"coeff", c.str()}});
  }
  out["terms"] = std::move(terms);
  out["text"] = to_string(p);
  return out;
}

ordered_json divisor_json(const Divisor& d) {
  ordered_json entries = ordered_json::array();
  for (const auto& [q, c] : d.entries())
    entries.push_back(
        {{"num", q.num},
         {"den", q.den},
         {"coeff_num", boost::multiprecision::numerator(c).str()},
         {"coeff_den", boost::multiprecision::denominator(c).str()}});
  return entries;
}

// "t^2 - t + 1" from ascending coefficients.
std::string dense_poly_text(const std::vector<Int>& coeffs) {
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return first ? "0" : out;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string csv_field(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

const char* bool_text(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string pf_document(const ParsedInput& in, const FracExpPoly& p) {
  ordered_json doc = document("weight_polynomial");
  doc["input"] = input_json(in);
  doc["polynomial"] = poly_json(p);
  doc["milnor_number"] = eval_at_one(p).str();
  return dump(doc);
}

std::string delta_document(const ParsedInput& in, const Divisor& d) {
  ordered_json doc = document("characteristic_polynomial");
  doc["input"] = input_json(in);
  doc["divisor"] = divisor_json(d);
  doc["divisor_text"] = to_string(d);
  try {
    std::map<std::int64_t, Rat> comb = lambda_combination(d);
    ordered_json arr = ordered_json::array();
    for (const auto& [index, coeff] : comb)
      arr.push_back(
          {{"index", index},
           {"coeff_num", boost::multiprecision::numerator(coeff).str()},
           {"coeff_den", boost::multiprecision::denominator(coeff).str()}});
    doc["lambda_combination"] = std::move(arr);
  } catch (const error& e) {
    if (e.code() != errc::not_galois_invariant) throw;
    doc["lambda_combination"] = nullptr;
  }
  try {
    CyclotomicProduct cyc = to_cyclotomic(d);
    ordered_json arr = ordered_json::array();
    for (const auto& [order, mult] : cyc.multiplicities)
      arr.push_back({{"order", order}, {"multiplicity", mult.str()}});
    doc["cyclotomic"] = std::move(arr);
    std::vector<Int> coeffs = cyclotomic_expand(cyc);
    ordered_json cj = ordered_json::array();
    for (const Int& c : coeffs) cj.push_back(c.str());
    doc["coefficients"] = std::move(cj);
    doc["polynomial_text"] = dense_poly_text(coeffs);
  } catch (const error&) {
    doc["cyclotomic"] = nullptr;
    doc["coefficients"] = nullptr;
    doc["polynomial_text"] = nullptr;
  }
  doc["mass"] = to_decimal(d.mass());
  return dump(doc);
}

std::string sig_document(const SignatureReport& r) {
  ordered_json doc = document("signature_table");
  doc["input"] = input_json(ParsedInput(r.input));
  doc["stabilized"] = r.stabilized;
  doc["seifert_sign"] = r.seifert_sign;
  ordered_json entries = ordered_json::array();
  for (const auto& [q, v] : r.table.entries)
    entries.push_back({{"num", q.num}, {"den", q.den}, {"signature", v.str()}});
  doc["entries"] = std::move(entries);
  doc["total"] = r.total.str();
  doc["warnings"] = r.warnings;
  return dump(doc);
}

std::string witt_document(const ParsedInput& a, const ParsedInput& b,
                          bool verdict) {
  ordered_json doc = document("witt_verdict");
  doc["input_a"] = input_json(a);
  doc["input_b"] = input_json(b);
  doc["witt_over_R"] = verdict;
  return dump(doc);
}

std::string cot_document(const BrieskornExponents& a,
                         const BrieskornExponents& b, double tolerance,
                         bool verdict) {
  ordered_json doc = document("cot_verdict");
  doc["input_a"] = input_json(ParsedInput(a));
  doc["input_b"] = input_json(ParsedInput(b));
  doc["tolerance"] = tolerance;
  doc["cot_test"] = verdict;
  return dump(doc);
}

std::string report_document(const CriterionReport& report) {
  ordered_json doc = document("criterion_report");
  doc["input_a"] = report.input_a;
  doc["input_b"] = report.input_b;
  doc["witt_over_R"] = report.witt_over_R;
  doc["cot_test"] = report.cot_test;
  doc["mod2_congruent"] = report.mod2_congruent;
  doc["odd_sets_equal"] = report.odd_sets_equal;
  doc["fox_milnor"] = report.fox_milnor;
  doc["verdict"] = verdict_name(report.verdict);
  doc["warnings"] = report.warnings;
  return dump(doc);
}

std::string recovery_document(const BrieskornExponents& source,
                              std::int64_t count,
                              const RecoveredExponents& recovered,
                              bool round_trip) {
  ordered_json doc = document("exponent_recovery");
  doc["input"] = input_json(ParsedInput(source));
  doc["count"] = count;
  doc["recovered"] = recovered.exponents;
  doc["hypothesis_violated"] = recovered.hypothesis_violated;
  doc["round_trip"] = round_trip;
  return dump(doc);
}

namespace {

ordered_json config_json(const SearchConfig& cfg) {
  ordered_json out;
  out["variables"] = cfg.variables;
  out["max_exponent"] = cfg.max_exponent;
  out["filter"] = filter_name(cfg.filter);
  out["seed"] = cfg.seed;
  out["trials"] = cfg.trials;
  out["jobs"] = cfg.jobs;
  return out;
}

}  // namespace

std::string verification_document(const VerificationReport& report) {
  ordered_json doc = document("verification_report");
  doc["check"] = check_name(report.config.check);
  doc["config"] = config_json(report.config);
  doc["pairs_checked"] = report.pairs_checked;
  doc["pass"] = report.pass;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations)
    violations.push_back({{"pair_index", v.pair_index},
                          {"input_a", v.input_a},
                          {"input_b", v.input_b},
                          {"property", v.property}});
  doc["violations"] = std::move(violations);
  ordered_json properties = ordered_json::array();
  for (const PropertyResult& p : report.properties)
    properties.push_back(
        {{"name", p.name}, {"checked", p.checked}, {"pass", p.pass}});
  doc["properties"] = std::move(properties);
  doc["elapsed_seconds"] = report.elapsed_seconds;
  return dump(doc);
}

std::string pf_text(const FracExpPoly& p) { return to_string(p) + "\n"; }

std::string delta_text(const ParsedInput& in, const Divisor& d) {
  std::ostringstream out;
  out << "input: " << render_input(in) << "\n";
  out << "divisor: " << to_string(d) << "\n";
  try {
    CyclotomicProduct cyc = to_cyclotomic(d);
    out << "cyclotomic: " << to_string(cyc) << "\n";
    out << "polynomial: " << dense_poly_text(cyclotomic_expand(cyc)) << "\n";
  } catch (const error&) {
    out << "cyclotomic: (not a nonnegative Galois-invariant divisor)\n";
  }
  out << "mass: " << to_decimal(d.mass()) << "\n";
  return out.str();
}

std::string sig_text(const SignatureReport& r) {
  std::ostringstream out;
  out << "input: " << render(r.input) << "\n";
  out << "stabilized: " << (r.stabilized ? "yes" : "no") << "\n";
  for (const auto& [q, v] : r.table.entries)
    out << "sigma(" << to_string(q) << ") = " << v.str() << "\n";
  out << "total: " << r.total.str() << "\n";
  for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string report_text(const CriterionReport& report) {
  std::ostringstream out;
  out << "a: " << report.input_a << "\n";
  out << "b: " << report.input_b << "\n";
  out << "witt_over_R: " << bool_text(report.witt_over_R) << "\n";
  out << "cot_test: " << bool_text(report.cot_test) << "\n";
  out << "mod2_congruent: " << bool_text(report.mod2_congruent) << "\n";
  out << "odd_sets_equal: " << bool_text(report.odd_sets_equal) << "\n";
  out << "fox_milnor: " << bool_text(report.fox_milnor) << "\n";
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string recovery_text(const BrieskornExponents& source, std::int64_t count,
                          const RecoveredExponents& recovered,
                          bool round_trip) {
  std::ostringstream out;
  out << "input: " << render(source) << "\n";
  out << "count: " << count << "\n";
  out << "recovered:";
  for (std::int64_t a : recovered.exponents) out << " " << a;
  out << "\n";
  out << "hypothesis_violated: " << bool_text(recovered.hypothesis_violated)
      << "\n";
  out << "round_trip: " << bool_text(round_trip) << "\n";
  return out.str();
}

std::string verification_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "check: " << check_name(report.config.check) << "\n";
  out << "config: variables=" << report.config.variables
      << " max_exponent=" << report.config.max_exponent
      << " filter=" << filter_name(report.config.filter)
      << " seed=" << report.config.seed << " trials=" << report.config.trials
      << " jobs=" << report.config.jobs << "\n";
  out << "pairs_checked: " << report.pairs_checked << "\n";
  for (const PropertyResult& p : report.properties)
    out << "property " << p.name << ": " << (p.pass ? "pass" : "FAIL") << " ("
        << p.checked << " checked)\n";
  for (const Violation& v : report.violations)
    out << "violation " << v.pair_index << ": " << v.property << " for ("
        << v.input_a << ") vs (" << v.input_b << ")\n";
  out << "result: " << (report.pass ? "PASS" : "FAIL") << " ("
      << report.pairs_checked << " checks, " << report.elapsed_seconds
      << " s)\n";
  return out.str();
}

std::string report_csv(const CriterionReport& report) {
  std::ostringstream out;
  out << "input_a,input_b,witt,cot,mod2,odd_sets,fox_milnor,verdict\n";
  out << csv_field(report.input_a) << "," << csv_field(report.input_b) << ","
      << bool_text(report.witt_over_R) << "," << bool_text(report.cot_test)
      << "," << bool_text(report.mod2_congruent) << ","
      << bool_text(report.odd_sets_equal) << ","
      << bool_text(report.fox_milnor) << "," << verdict_name(report.verdict)
      << "\n";
  return out.str();
}

std::string verification_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "pair_index,input_a,input_b,property\n";
  for (const Violation& v : report.violations)
    out << v.pair_index << "," << csv_field(v.input_a) << ","
        << csv_field(v.input_b) << "," << csv_field(v.property) << "\n";
  return out.str();
}

}  // namespace knotcob
