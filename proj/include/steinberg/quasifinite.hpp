#pragma once

// Exact q-integer arithmetic for the divisibility conditions
//   l | A_2 A_3 ... A_n,   A_m = 1 + q^a + ... + q^{(m-1)a},
// scanned over a. Whether l | A_m depends only on a mod ord_l(q), so a scan
// of length >= ord_l(q) decides the statement for every a.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace steinberg {

using BigInt = boost::multiprecision::cpp_int;

/// A_m(q, a) = sum_{j<m} q^{ja}; m >= 1.
BigInt q_integer(std::uint32_t m, const BigInt& q, std::uint32_t a);
/// prod_{m=2}^{n} A_m(q, a); n >= 2.
BigInt steinberg_product(std::uint32_t n, const BigInt& q, std::uint32_t a);

/// Multiplicative order of q modulo m; requires gcd(q, m) = 1 and m >= 2.
std::uint64_t multiplicative_order(const BigInt& q, std::uint64_t m);

struct ScanRow {
  std::uint32_t n = 0;
  BigInt q;
  std::uint64_t ell = 0;
  std::uint32_t a = 1;
  std::vector<std::uint64_t> residues;  // A_2..A_n mod l
  std::uint64_t product_residue = 0;
  bool divisible = false;
};

struct DivisibilityScan {
  std::uint64_t ell = 0;
  std::uint32_t n = 0;
  BigInt q;
  std::uint32_t a_max = 0;
  bool all_divisible = true;
  std::optional<std::uint32_t> first_failure;
  std::uint64_t order = 0;     // ord_l(q)
  bool period_covered = false;  // a_max >= ord_l(q), so the verdict holds for every a
  std::vector<ScanRow> rows;
};

/// Throws ValidationError when l is not prime or l | q.
DivisibilityScan divides_for_all_a(std::uint64_t ell, std::uint32_t n, const BigInt& q, std::uint32_t a_max);

struct PrimePowerRow {
  std::uint32_t a = 1;
  bool divisible = false;
  /// Smallest m in [2, n] with n | A_m, if any.
  std::optional<std::uint32_t> single_factor;
  /// Otherwise 1 <= l < m <= n with A_l = A_m mod n, so n | (A_m - A_l) = q^{la} A_{m-l}.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> pigeonhole;
};

struct PrimePowerReport {
  std::uint32_t n = 0;
  BigInt q;
  std::uint32_t a_max = 0;
  std::uint64_t prime = 0;  // n = prime^s
  bool pass = true;
  std::optional<std::uint32_t> counterexample;
  std::vector<PrimePowerRow> rows;
};

/// Throws ValidationError unless n is a prime power coprime to q.
PrimePowerReport prime_power_check(std::uint32_t n, const BigInt& q, std::uint32_t a_max);

/// Parses "p^d" or a plain integer; returns (p, d) after checking p is prime.
std::pair<std::uint32_t, std::uint32_t> parse_prime_power(const std::string& text);

}  // namespace steinberg
