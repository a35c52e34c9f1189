#include "core/divisor.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <utility>

namespace knotcob {

Rot Rot::make(std::int64_t n, std::int64_t d) {
  require(d != 0, errc::invalid_argument, "rotation denominator is zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  n %= d;
  if (n < 0) n += d;
  std::int64_t g = gcd64(n, d);
  return Rot{n / g, d / g};
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Rot operator+(Rot a, Rot b) {
  std::int64_t g = gcd64(a.den, b.den);
  __int128 L = static_cast<__int128>(a.den / g) * b.den;
  __int128 n = static_cast<__int128>(a.num) * (b.den / g) +
               static_cast<__int128>(b.num) * (a.den / g);
  n %= L;
  __int128 gg = n == 0 ? L : gcd128(n, L);
  n /= gg;
  L /= gg;
  if (L > INT64_MAX)
    fail(errc::invalid_argument, "rotation number overflow");
  return Rot{static_cast<std::int64_t>(n), static_cast<std::int64_t>(L)};
}

std::string to_string(Rot q) {
  if (q.num == 0) return "0";
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

Divisor Divisor::from_entries(Entries entries) {
  Divisor d;
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->second == 0)
      it = entries.erase(it);
    else
      ++it;
  }
  d.entries_ = std::move(entries);
  return d;
}

Divisor Divisor::unit() {
  Entries e;
  e.emplace(Rot{0, 1}, Rat(1));
  return from_entries(std::move(e));
}

Rat Divisor::coefficient(Rot q) const {
  auto it = entries_.find(q);
  return it == entries_.end() ? Rat(0) : it->second;
}

Rat Divisor::mass() const {
  Rat acc = 0;
  for (const auto& [q, c] : entries_) acc += c;
  return acc;
}

Divisor Divisor::operator-() const {
  Divisor out = *this;
  for (auto& [q, c] : out.entries_) c = -c;
  return out;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor::Entries out = a.entries_;
  for (const auto& [q, c] : b.entries_) {
    auto [it, fresh] = out.emplace(q, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return Divisor::from_entries(std::move(out));
}

Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }

Divisor operator*(const Divisor& a, const Divisor& b) {
  Divisor::Entries out;
  for (const auto& [qa, ca] : a.entries_)
    for (const auto& [qb, cb] : b.entries_) out[qa + qb] += ca * cb;
  return Divisor::from_entries(std::move(out));
}

Divisor d_scale(const Divisor& x, const Rat& r) {
  if (r == 0) return Divisor();
  Divisor::Entries out = x.entries();
  for (auto& [q, c] : out) c *= r;
  return Divisor::from_entries(std::move(out));
}

Divisor lambda_divisor(std::int64_t a) {
  require(a >= 1, errc::invalid_argument, "lambda index must be positive");
  Divisor::Entries out;
  for (std::int64_t k = 0; k < a; ++k) out.emplace(Rot::make(k, a), Rat(1));
  return Divisor::from_entries(std::move(out));
}

Divisor scaled_lambda(std::int64_t u, std::int64_t v) {
  require(u >= 1 && v >= 1, errc::invalid_argument,
          "scaled lambda arguments must be positive");
  if (gcd64(u, v) != 1)
    fail(errc::not_coprime, "scaled lambda requires coprime " +
                                std::to_string(u) + " and " +
                                std::to_string(v));
  return d_scale(lambda_divisor(u), Rat(1) / v);
}

Divisor mod2(const Divisor& x) {
  Divisor::Entries out;
  for (const auto& [q, c] : x.entries()) {
    if (boost::multiprecision::denominator(c) != 1)
      fail(errc::non_integral_coefficient,
           "mod-2 reduction of non-integral coefficient " + to_decimal(c) +
               " at <" + to_string(q) + ">");
    if (boost::multiprecision::numerator(c) % 2 != 0)
      out.emplace(q, Rat(1));
  }
  return Divisor::from_entries(std::move(out));
}

std::int64_t euler_totient(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "totient of nonpositive argument");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Common value of each complete primitive class: order d -> coefficient.
// Throws NotGaloisInvariant when some class is incomplete or uneven.
std::map<std::int64_t, Rat> primitive_classes(const Divisor& x) {
  std::map<std::int64_t, std::pair<Rat, std::int64_t>> seen;  // value, count
  for (const auto& [q, c] : x.entries()) {
    auto [it, fresh] = seen.emplace(q.den, std::make_pair(c, 1));
    if (!fresh) {
      if (it->second.first != c)
        fail(errc::not_galois_invariant,
             "unequal coefficients among primitive rotation numbers of order " +
                 std::to_string(q.den));
      ++it->second.second;
    }
  }
  std::map<std::int64_t, Rat> out;
  for (const auto& [d, vc] : seen) {
    if (vc.second != euler_totient(d))
      fail(errc::not_galois_invariant,
           "incomplete primitive class of order " + std::to_string(d));
    out.emplace(d, vc.first);
  }
  return out;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> dense_mul(const std::vector<Int>& a,
                           const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact quotient of integer polynomials with monic-up-to-sign divisor.
std::vector<Int> dense_exact_div(std::vector<Int> num,
                                 const std::vector<Int>& den) {
  std::vector<Int> quo(num.size() - den.size() + 1, Int(0));
  const Int& lead = den.back();
  for (std::size_t i = quo.size(); i-- > 0;) {
    Int q = num[i + den.size() - 1] / lead;
    quo[i] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  for (const Int& c : num)
    require(c == 0, errc::internal_error, "cyclotomic division left remainder");
  return quo;
}

}  // namespace

std::vector<Int> cyclotomic_coefficients(std::int64_t n) {
  require(n >= 1, errc::invalid_argument, "cyclotomic index must be positive");
  static std::map<std::int64_t, std::vector<Int>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
  // inside the lock (iterative over sorted divisors, so no reentrancy).
  std::vector<std::int64_t> divs = divisors_of(n);
  for (std::int64_t d : divs) {
    if (cache.contains(d)) continue;
    std::vector<Int> num(static_cast<std::size_t>(d) + 1, Int(0));
    num[0] = -1;
    num.back() = 1;
    std::vector<Int> den{Int(1)};
    for (std::int64_t e : divisors_of(d))
      if (e != d) den = dense_mul(den, cache.at(e));
    cache.emplace(d, dense_exact_div(std::move(num), den));
  }
  return cache.at(n);
}

CyclotomicProduct to_cyclotomic(const Divisor& x) {
  CyclotomicProduct out;
  for (const auto& [d, c] : primitive_classes(x)) {
    if (boost::multiprecision::denominator(c) != 1)
      fail(errc::non_integral_coefficient,
           "cyclotomic multiplicity " + to_decimal(c) + " at order " +
               std::to_string(d) + " is not an integer");
    Int e = boost::multiprecision::numerator(c);
    if (e < 0)
      fail(errc::negative_multiplicity,
           "negative multiplicity " + e.str() + " at order " +
               std::to_string(d));
    out.multiplicities.emplace(d, std::move(e));
  }
  return out;
}

std::vector<Int> cyclotomic_expand(const CyclotomicProduct& c) {
  std::vector<Int> acc{Int(1)};
  for (const auto& [d, e] : c.multiplicities) {
    require(e >= 0, errc::negative_multiplicity,
            "negative multiplicity at order " + std::to_string(d));
    require(e < 1'000'000, errc::invalid_argument,
            "cyclotomic multiplicity too large to expand");
    std::vector<Int> base = cyclotomic_coefficients(d);
    for (std::int64_t i = 0, reps = e.convert_to<std::int64_t>(); i < reps; ++i)
      acc = dense_mul(acc, base);
  }
  return acc;
}

std::map<std::int64_t, Rat> lambda_combination(const Divisor& x) {
  std::map<std::int64_t, Rat> classes = primitive_classes(x);

  // Divisor-closed support: r_a nonzero forces primitive classes at every
  // divisor of a that Lambda_a touches, so solving top-down over the
  // closure of the present orders finds the unique expansion.
  std::set<std::int64_t> closure;
  for (const auto& [d, c] : classes)
    for (std::int64_t e : divisors_of(d)) closure.insert(e);

  std::map<std::int64_t, Rat> r;
  for (auto it = closure.rbegin(); it != closure.rend(); ++it) {
    std::int64_t d = *it;
    Rat acc = 0;
    if (auto found = classes.find(d); found != classes.end())
      acc = found->second;
    for (const auto& [a, ra] : r)
      if (a % d == 0) acc -= ra;
    if (acc != 0) r.emplace(d, std::move(acc));
  }
  return r;
}

namespace {

void append_signed_term(std::string& out, bool& first, const Rat& coeff,
                        const std::string& symbol) {
  bool neg = coeff < 0;
  Rat mag = neg ? Rat(-coeff) : coeff;
  if (first) {
    if (neg) out += '-';
    first = false;
  } else {
    out += neg ? " - " : " + ";
  }
  if (mag != 1) out += to_decimal(mag) + "*";
  out += symbol;
}

}  // namespace

std::string to_string(const Divisor& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  try {
    std::map<std::int64_t, Rat> r = lambda_combination(x);
    for (auto it = r.rbegin(); it != r.rend(); ++it)
      append_signed_term(out, first, it->second,
                         "Lambda_" + std::to_string(it->first));
    return out;
  } catch (const error& e) {
    if (e.code() != errc::not_galois_invariant) throw;
  }
  for (const auto& [q, c] : x.entries())
    append_signed_term(out, first, c, "<" + to_string(q) + ">");
  return out;
}

std::string to_string(const CyclotomicProduct& c) {
  if (c.multiplicities.empty()) return "1";
  std::string out;
  for (const auto& [d, e] : c.multiplicities) {
    if (!out.empty()) out += " * ";
    out += "Phi_" + std::to_string(d);
    if (e != 1) out += "^" + e.str();
  }
  return out;
}

}  // namespace knotcob
