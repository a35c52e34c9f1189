#include "core/fracpoly.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

namespace knotcob {

FracExpPoly FracExpPoly::from_terms(std::int64_t denom, Terms terms) {
  require(denom >= 1, errc::invalid_argument, "denominator must be positive");
  for (auto it = terms.begin(); it != terms.end();) {
    require(it->first >= 0, errc::invalid_argument,
            "exponents must be nonnegative");
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  FracExpPoly p;
  if (terms.empty()) return p;
  std::int64_t g = denom;
  for (const auto& [k, c] : terms) g = gcd64(g, k);
  if (g > 1) {
    Terms reduced;
    for (auto& [k, c] : terms) reduced.emplace(k / g, std::move(c));
    terms = std::move(reduced);
    denom /= g;
  }
  p.denom_ = denom;
  p.terms_ = std::move(terms);
  return p;
}

FracExpPoly FracExpPoly::constant(Int value) {
  Terms t;
  if (value != 0) t.emplace(0, std::move(value));
  return from_terms(1, std::move(t));
}

FracExpPoly FracExpPoly::term(Int coeff, std::int64_t exp_num,
                              std::int64_t exp_den) {
  require(exp_den >= 1, errc::invalid_argument,
          "exponent denominator must be positive");
  require(exp_num >= 0, errc::invalid_argument,
          "exponents must be nonnegative");
  Terms t;
  if (coeff != 0) t.emplace(exp_num, std::move(coeff));
  return from_terms(exp_den, std::move(t));
}

FracExpPoly FracExpPoly::operator-() const {
  FracExpPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

FracExpPoly operator+(const FracExpPoly& a, const FracExpPoly& b) {
  std::int64_t m = lcm64(a.denom_, b.denom_);
  FracExpPoly::Terms out;
  std::int64_t sa = m / a.denom_, sb = m / b.denom_;
  for (const auto& [k, c] : a.terms_) out[k * sa] += c;
  for (const auto& [k, c] : b.terms_) out[k * sb] += c;
  return FracExpPoly::from_terms(m, std::move(out));
}

FracExpPoly operator-(const FracExpPoly& a, const FracExpPoly& b) {
  return a + (-b);
}

FracExpPoly operator*(const FracExpPoly& a, const FracExpPoly& b) {
  std::int64_t m = lcm64(a.denom_, b.denom_);
  std::int64_t sa = m / a.denom_, sb = m / b.denom_;
  FracExpPoly::Terms out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out[ka * sa + kb * sb] += ca * cb;
  return FracExpPoly::from_terms(m, std::move(out));
}

FracExpPoly exact_div(const FracExpPoly& num, const FracExpPoly& den) {
  require(!den.is_zero(), errc::invalid_argument, "division by zero");
  std::int64_t m = lcm64(num.denom(), den.denom());
  std::int64_t sn = m / num.denom(), sd = m / den.denom();

  std::map<std::int64_t, Rat> rem;
  for (const auto& [k, c] : num.terms()) rem.emplace(k * sn, Rat(c));
  std::map<std::int64_t, Int> dterms;
  for (const auto& [k, c] : den.terms()) dterms.emplace(k * sd, c);

  const auto [dk, dc] = *dterms.rbegin();
  std::map<std::int64_t, Rat> quo;
  while (!rem.empty()) {
    const auto [rk, rc] = *rem.rbegin();
    if (rk < dk)
      fail(errc::not_divisible, "remainder of degree below the divisor");
    Rat f = rc / dc;
    std::int64_t qk = rk - dk;
    quo[qk] += f;
    for (const auto& [k2, c2] : dterms) {
      std::int64_t nk = qk + k2;
      auto it = rem.find(nk);
      Rat nv = (it == rem.end() ? Rat(0) : it->second) - f * c2;
      if (nv == 0) {
        if (it != rem.end()) rem.erase(it);
      } else if (it == rem.end()) {
        rem.emplace(nk, std::move(nv));
      } else {
        it->second = std::move(nv);
      }
    }
  }

  FracExpPoly::Terms out;
  for (const auto& [k, v] : quo) {
    if (v == 0) continue;
    if (boost::multiprecision::denominator(v) != 1)
      fail(errc::not_divisible, "quotient has a fractional coefficient");
    out.emplace(k, boost::multiprecision::numerator(v));
  }
  return FracExpPoly::from_terms(m, std::move(out));
}

FracExpPoly reduce_mod_t_plus_1(const FracExpPoly& p, std::int64_t m) {
  require(m >= 1, errc::invalid_argument, "modulus root index must be positive");
  if (m % p.denom() != 0)
    fail(errc::denominator_mismatch,
         "modulus root index " + std::to_string(m) +
             " is not a multiple of the denominator " +
             std::to_string(p.denom()));
  std::int64_t s = m / p.denom();
  FracExpPoly::Terms out;
  for (const auto& [k, c] : p.terms()) {
    std::int64_t K = k * s;
    std::int64_t q = K / m, r = K % m;
    if (q % 2 == 0)
      out[r] += c;
    else
      out[r] -= c;
  }
  return FracExpPoly::from_terms(m, std::move(out));
}

std::complex<double> eval_unit(const FracExpPoly& p, std::int64_t ell) {
  std::complex<double> acc{0.0, 0.0};
  double m = static_cast<double>(p.denom());
  for (const auto& [k, c] : p.terms()) {
    double angle = std::numbers::pi * static_cast<double>(ell) *
                   static_cast<double>(k) / m;
    acc += to_double(c) * std::complex<double>{std::cos(angle), std::sin(angle)};
  }
  return acc;
}

Int eval_at_one(const FracExpPoly& p) {
  Int acc = 0;
  for (const auto& [k, c] : p.terms()) acc += c;
  return acc;
}

namespace {

void render_exponent(std::string& out, std::int64_t k, std::int64_t m) {
  std::int64_t g = gcd64(k, m);
  std::int64_t a = k / g, b = m / g;
  out += 't';
  if (b == 1) {
    if (a != 1) out += "^" + std::to_string(a);
  } else {
    out += "^(" + std::to_string(a) + "/" + std::to_string(b) + ")";
  }
}

}  // namespace

std::string to_string(const FracExpPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      render_exponent(out, k, p.denom());
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error,
         what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() { return pos >= text.size(); }
  char peek() { return text[pos]; }

  bool consume(char c) {
    if (!eof() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) err("expected a number");
    return text.substr(start, pos - start);
  }

  std::int64_t small_int() {
    std::size_t at = pos;
    std::string d = digits();
    try {
      return std::stoll(d);
    } catch (const std::out_of_range&) {
      pos = at;
      err("exponent out of range");
    }
  }

  // exponent := integer | '(' integer '/' integer ')'
  std::pair<std::int64_t, std::int64_t> exponent() {
    skip_ws();
    if (consume('(')) {
      skip_ws();
      std::int64_t a = small_int();
      skip_ws();
      if (!consume('/')) err("expected '/' in fractional exponent");
      skip_ws();
      std::int64_t b = small_int();
      skip_ws();
      if (!consume(')')) err("expected ')' after fractional exponent");
      if (b == 0) err("zero exponent denominator");
      return {a, b};
    }
    return {small_int(), 1};
  }

  // term := number ('*'? tpart)? | tpart
  FracExpPoly term() {
    skip_ws();
    if (eof()) err("expected a term");
    Int coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Int(digits());
      have_coeff = true;
      skip_ws();
      if (consume('*')) skip_ws();
    }
    if (!eof() && peek() == 't') {
      ++pos;
      std::int64_t a = 1, b = 1;
      if (consume('^')) {
        auto [ea, eb] = exponent();
        a = ea;
        b = eb;
      }
      if (a < 0) err("negative exponent");
      return FracExpPoly::term(std::move(coeff), a, b);
    }
    if (!have_coeff) err("expected a coefficient or 't'");
    return FracExpPoly::constant(std::move(coeff));
  }

  FracExpPoly poly() {
    skip_ws();
    bool neg = false;
    if (consume('-'))
      neg = true;
    else
      consume('+');
    FracExpPoly acc = term();
    if (neg) acc = -acc;
    skip_ws();
    while (!eof()) {
      bool sub = false;
      if (consume('-'))
        sub = true;
      else if (!consume('+'))
        err("expected '+' or '-'");
      FracExpPoly t = term();
      acc = sub ? acc - t : acc + t;
      skip_ws();
    }
    return acc;
  }
};

}  // namespace

FracExpPoly parse_fracpoly(const std::string& text) {
  Parser p(text);
  return p.poly();
}

}  // namespace knotcob
