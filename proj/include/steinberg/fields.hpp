#pragma once

// Finite-field arithmetic for the two characteristics in play:
//
//  - CoeffField: the prime field GF(l) holding module coefficients.
//  - FieldTower: F_q = F_{p^d} together with the extensions F_{q^a}, built on
//    demand and linked by embeddings F_{q^a} -> F_{q^b} for a | b.
//
// Every level a is realized as GF(p)[x]/(f_a) with f_a primitive of degree
// d*a. The polynomials are chosen norm-compatibly: the image of x under
// F_{q^a} -> F_{q^b} is x^((q^b-1)/(q^a-1)). That single rule makes every
// embedding a field homomorphism and makes embeddings compose along a | b | c.
//
// Elements are stored as (level, packed value), the value being the base-p
// integer whose digits are the polynomial coefficients. Arithmetic on two
// elements happens at the lcm of their levels; normalize() moves an element
// to the smallest level containing it, which is the canonical form used for
// comparisons across levels.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace steinberg {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// GF(l) with eagerly reduced representatives in [0, l).
class CoeffField {
 public:
  explicit CoeffField(std::uint32_t ell);

  std::uint32_t ell() const { return ell_; }

  Scalar add(Scalar x, Scalar y) const { return static_cast<Scalar>((std::uint64_t{x} + y) % ell_); }
  Scalar sub(Scalar x, Scalar y) const { return static_cast<Scalar>((std::uint64_t{x} + ell_ - y) % ell_); }
  Scalar mul(Scalar x, Scalar y) const { return static_cast<Scalar>((std::uint64_t{x} * y) % ell_); }
  Scalar neg(Scalar x) const { return x == 0 ? 0 : ell_ - x; }
  Scalar pow(Scalar x, std::uint64_t e) const;
  Scalar inv(Scalar x) const;
  Scalar from_int(std::int64_t v) const;
  /// (-1)^k
  Scalar sign(std::uint64_t k) const { return k % 2 == 0 ? 1 % ell_ : neg(1 % ell_); }

 private:
  std::uint32_t ell_;
};

struct FieldElement {
  std::uint32_t level = 1;
  std::uint32_t value = 0;

  bool is_zero() const { return value == 0; }
  auto operator<=>(const FieldElement&) const = default;
};

/// One concrete field F_{q^a}. Raw operations act on packed values.
struct LevelData {
  std::uint32_t level = 0;
  std::uint32_t p = 0;
  std::uint32_t degree = 0;  // over GF(p)
  std::uint32_t size = 0;    // q^level
  std::vector<std::uint32_t> poly;  // monic, low to high, degree+1 coefficients
  std::vector<std::uint32_t> exp;   // exp[k] = x^k for k < size-1
  std::vector<std::uint32_t> log;   // inverse of exp on nonzero values

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    return exp[(std::uint64_t{log[x]} + log[y]) % (size - 1)];
  }
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t div(std::uint32_t x, std::uint32_t y) const { return mul(x, inv(y)); }
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t from_int(std::int64_t v) const;
};

class FieldTower {
 public:
  /// Throws ValidationError unless p is prime and d >= 1.
  FieldTower(std::uint32_t p, std::uint32_t d);

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t d() const { return d_; }
  std::uint64_t q() const { return q_; }
  /// q^a; throws LevelError if the level is beyond the supported table size.
  std::uint64_t size(std::uint32_t a) const;

  /// Builds the level (and all of its divisor levels) on first use.
  const LevelData& level(std::uint32_t a) const;
  std::vector<std::uint32_t> built_levels() const;

  FieldElement zero() const { return {1, 0}; }
  FieldElement one() const { return {1, 1}; }
  FieldElement from_int(std::int64_t v) const;
  /// Multiplicative generator x of level a.
  FieldElement generator(std::uint32_t a) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement div(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// Image of x in F_{q^b}; identity when b == x.level. LevelError unless x.level | b.
  FieldElement embed(FieldElement x, std::uint32_t b) const;
  std::uint32_t embed_raw(std::uint32_t value, std::uint32_t a, std::uint32_t b) const;
  /// Preimage of a level-b value in level a (a | b), if it lies there.
  std::optional<std::uint32_t> descend_raw(std::uint32_t value, std::uint32_t b, std::uint32_t a) const;
  std::uint32_t minimal_level(FieldElement x) const;
  FieldElement normalize(FieldElement x) const;
  /// Equality as elements of the algebraic closure.
  bool same(FieldElement x, FieldElement y) const;

  /// All q^a elements of F_{q^a} at level a, zero first, ordered by packed value.
  std::vector<FieldElement> enumerate_level(std::uint32_t a) const;
  /// Representatives c_0..c_{q^a} of F_{q^{2a}}^* / F_{q^a}^*, namely x^0, x^1, ..., x^{q^a}.
  std::vector<FieldElement> mult_coset_reps(std::uint32_t a) const;
  /// A basis of F_{q^a} over GF(p).
  std::vector<FieldElement> additive_basis(std::uint32_t a) const;
  /// Square root at x's own level, if one exists there.
  std::optional<FieldElement> sqrt(FieldElement x) const;

  /// Defining polynomial coefficients (low to high) for a built level.
  std::vector<std::uint32_t> polynomial(std::uint32_t a) const;
  std::string polynomial_string(std::uint32_t a) const;
  /// "level:value"
  std::string format(FieldElement x) const;

 private:
  std::unique_ptr<LevelData> build_level(std::uint32_t a) const;
  const LevelData& level_locked(std::uint32_t a) const;

  std::uint32_t p_;
  std::uint32_t d_;
  std::uint64_t q_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint32_t, std::unique_ptr<LevelData>> levels_;
};

}  // namespace steinberg
