#include "steinberg/quasifinite.hpp"

#include <numeric>

#include "steinberg/errors.hpp"
#include "steinberg/fields.hpp"

namespace steinberg {

namespace {

BigInt big_pow(const BigInt& base, std::uint64_t e) {
  BigInt out = 1, b = base;
  while (e) {
    if (e & 1) out *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return out;
}

std::uint64_t mod_small(const BigInt& x, std::uint64_t m) { return static_cast<std::uint64_t>(x % m); }

}  // namespace

BigInt q_integer(std::uint32_t m, const BigInt& q, std::uint32_t a) {
  if (m < 1) throw ValidationError("q_integer needs m >= 1");
  const BigInt step = big_pow(q, a);
  BigInt term = 1, sum = 0;
  for (std::uint32_t j = 0; j < m; ++j) {
    sum += term;
    term *= step;
  }
  return sum;
}

BigInt steinberg_product(std::uint32_t n, const BigInt& q, std::uint32_t a) {
  if (n < 2) throw ValidationError("steinberg_product needs n >= 2");
  BigInt out = 1;
  for (std::uint32_t m = 2; m <= n; ++m) out *= q_integer(m, q, a);
  return out;
}

std::uint64_t multiplicative_order(const BigInt& q, std::uint64_t m) {
  if (m < 2) throw ValidationError("order modulo m needs m >= 2");
  const std::uint64_t base = mod_small(q, m);
  if (std::gcd(base, m) != 1) throw ValidationError("order undefined: q and m are not coprime");
  std::uint64_t x = base % m, k = 1;
  while (x != 1 % m) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * base) % m);
    ++k;
  }
  return k;
}

DivisibilityScan divides_for_all_a(std::uint64_t ell, std::uint32_t n, const BigInt& q, std::uint32_t a_max) {
  if (!is_prime(ell)) throw ValidationError("ell must be prime");
  if (n < 2) throw ValidationError("n must be at least 2");
  if (q < 2) throw ValidationError("q must be at least 2");
  if (a_max < 1) throw ValidationError("amax must be at least 1");
  if (mod_small(q, ell) == 0)
    throw ValidationError("ell divides q: the divisibility condition concerns char k != char F_q");

  DivisibilityScan out;
  out.ell = ell;
  out.n = n;
  out.q = q;
  out.a_max = a_max;
  out.order = multiplicative_order(q, ell);
  out.period_covered = a_max >= out.order;
  for (std::uint32_t a = 1; a <= a_max; ++a) {
    ScanRow row;
    row.n = n;
    row.q = q;
    row.ell = ell;
    row.a = a;
    const BigInt prod = steinberg_product(n, q, a);
    for (std::uint32_t m = 2; m <= n; ++m) row.residues.push_back(mod_small(q_integer(m, q, a), ell));
    row.product_residue = mod_small(prod, ell);
    row.divisible = row.product_residue == 0;
    if (!row.divisible && out.all_divisible) {
      out.all_divisible = false;
      out.first_failure = a;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

PrimePowerReport prime_power_check(std::uint32_t n, const BigInt& q, std::uint32_t a_max) {
  if (n < 2) throw ValidationError("n must be at least 2");
  const auto primes = prime_factors(n);
  if (primes.size() != 1) throw ValidationError("n must be a prime power");
  if (mod_small(q, primes[0]) == 0) throw ValidationError("n and q must be coprime");

  PrimePowerReport out;
  out.n = n;
  out.q = q;
  out.a_max = a_max;
  out.prime = primes[0];
  for (std::uint32_t a = 1; a <= a_max; ++a) {
    PrimePowerRow row;
    row.a = a;
    row.divisible = mod_small(steinberg_product(n, q, a), n) == 0;
    std::vector<std::uint64_t> res;  // res[m-1] = A_m mod n
    for (std::uint32_t m = 1; m <= n; ++m) res.push_back(mod_small(q_integer(m, q, a), n));
    for (std::uint32_t m = 2; m <= n && !row.single_factor; ++m)
      if (res[m - 1] == 0) row.single_factor = m;
    if (!row.single_factor)
      for (std::uint32_t m = 2; m <= n && !row.pigeonhole; ++m)
        for (std::uint32_t l = 1; l < m; ++l)
          if (res[l - 1] == res[m - 1]) {
            row.pigeonhole = {l, m};
            break;
          }
    if (!row.divisible && out.pass) {
      out.pass = false;
      out.counterexample = a;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_prime_power(const std::string& text) {
  std::uint64_t p = 0, d = 1;
  try {
    std::size_t used = 0;
    const auto caret = text.find('^');
    if (caret == std::string::npos) {
      p = std::stoull(text, &used);
      if (used != text.size()) throw ValidationError("");
    } else {
      const std::string base = text.substr(0, caret), exp = text.substr(caret + 1);
      p = std::stoull(base, &used);
      if (used != base.size()) throw ValidationError("");
      d = std::stoull(exp, &used);
      if (used != exp.size()) throw ValidationError("");
    }
  } catch (const std::exception&) {
    throw ValidationError("cannot parse q '" + text + "' (expected p or p^d)");
  }
  if (d == 0 || d > 64) throw ValidationError("q exponent out of range");
  if (p > 0xffffffffu) throw ValidationError("q out of range");
  if (!is_prime(p)) {
    // Plain prime powers such as 9 are accepted too.
    const auto f = prime_factors(p);
    if (text.find('^') != std::string::npos || f.size() != 1)
      throw ValidationError("q must be a prime power, got '" + text + "'");
    std::uint64_t k = 0, x = p;
    while (x > 1) {
      x /= f[0];
      ++k;
    }
    return {static_cast<std::uint32_t>(f[0]), static_cast<std::uint32_t>(k)};
  }
  return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(d)};
}

}  // namespace steinberg
