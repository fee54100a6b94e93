#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/fields.hpp"

using namespace steinberg;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k < n; ++k)
    if (n % k == 0) return false;
  return true;
}

}  // namespace

TEST(Primes, MatchTrialDivision) {
  for (std::uint64_t n = 0; n < 500; ++n) EXPECT_EQ(is_prime(n), trial_prime(n)) << n;
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(prime_factors(49), (std::vector<std::uint64_t>{7}));
}

TEST(CoeffField, InversesAndSigns) {
  for (std::uint32_t ell : {2u, 3u, 5u, 7u, 101u}) {
    CoeffField k(ell);
    for (Scalar x = 1; x < ell; ++x) EXPECT_EQ(k.mul(x, k.inv(x)), 1u);
    EXPECT_EQ(k.sign(1), ell - 1);
    EXPECT_EQ(k.sign(2), 1u);
    EXPECT_EQ(k.from_int(-1), ell - 1);
  }
  EXPECT_THROW(CoeffField(4), ValidationError);
}

TEST(FieldTower, RejectsBadCharacteristic) {
  EXPECT_THROW(FieldTower(4, 1), ValidationError);
  EXPECT_THROW(FieldTower(3, 0), ValidationError);
}

// Multiplication tables against schoolbook polynomial arithmetic mod f.
TEST(FieldTower, MultiplicationMatchesPolynomialArithmetic) {
  for (auto [p, d, a] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {3, 2, 1}}) {
    FieldTower T(p, d);
    const LevelData& L = T.level(a);
    const auto& f = L.poly;
    ASSERT_EQ(f.size(), L.degree + 1);
    ASSERT_EQ(f.back(), 1u);
    for (std::uint32_t x = 0; x < L.size; ++x)
      for (std::uint32_t y = 0; y < L.size; ++y) {
        const auto want = oracle::pack(oracle::mulmod(oracle::unpack(x, p, L.degree), oracle::unpack(y, p, L.degree), f, p), p);
        ASSERT_EQ(L.mul(x, y), want) << "p=" << p << " x=" << x << " y=" << y;
      }
  }
}

// x must have multiplicative order exactly q^a - 1 in GF(p)[x]/(f).
TEST(FieldTower, PolynomialsArePrimitive) {
  for (auto [p, d, a] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 4}, {3, 1, 4}, {2, 1, 6}, {5, 1, 2}, {3, 2, 2}}) {
    FieldTower T(p, d);
    const LevelData& L = T.level(a);
    // The class of x; for a linear f = x + f0 that is -f0.
    const std::uint64_t xv = L.degree == 1 ? static_cast<std::uint64_t>(oracle::mod(-std::int64_t(L.poly[0]), p)) : p;
    oracle::Poly x = oracle::unpack(xv, p, L.degree);
    oracle::Poly acc = oracle::unpack(1, p, L.degree);
    std::uint64_t order = 0;
    do {
      acc = oracle::mulmod(acc, x, L.poly, p);
      ++order;
    } while (oracle::pack(acc, p) != 1 && order < L.size);
    EXPECT_EQ(order, L.size - 1) << "p=" << p << " level " << a;
  }
}

TEST(FieldTower, EmbeddingsAreHomomorphismsAndCompose) {
  FieldTower T(3, 1);
  const auto small = T.enumerate_level(2);
  for (const auto& x : small)
    for (const auto& y : small) {
      EXPECT_EQ(T.embed(T.add(x, y), 4), T.add(T.embed(x, 4), T.embed(y, 4)));
      EXPECT_EQ(T.embed(T.mul(x, y), 4), T.mul(T.embed(x, 4), T.embed(y, 4)));
    }
  for (const auto& x : T.enumerate_level(1)) EXPECT_EQ(T.embed(T.embed(x, 2), 4), T.embed(x, 4));
  EXPECT_THROW(T.embed({2, 1}, 3), LevelError);
}

TEST(FieldTower, MinimalLevelsCountSubfields) {
  FieldTower T(2, 1);
  std::map<std::uint32_t, int> count;
  for (const auto& x : T.enumerate_level(4)) ++count[T.minimal_level(x)];
  // F_16 = F_2 u (F_4 \ F_2) u (F_16 \ F_4)
  EXPECT_EQ(count[1], 2);
  EXPECT_EQ(count[2], 2);
  EXPECT_EQ(count[4], 12);
  for (const auto& x : T.enumerate_level(4)) {
    const FieldElement n = T.normalize(x);
    EXPECT_TRUE(T.same(n, x));
    EXPECT_EQ(T.embed(n, 4), x);
  }
}

TEST(FieldTower, ArithmeticAcrossLevels) {
  FieldTower T(3, 1);
  const FieldElement g2 = T.generator(2);
  const FieldElement two = T.from_int(2);
  // Mixed-level operations happen in the lcm level and come back normalized.
  EXPECT_TRUE(T.same(T.mul(g2, two), T.mul(T.embed(two, 2), g2)));
  EXPECT_TRUE(T.same(T.mul(T.inv(g2), g2), T.one()));
  EXPECT_EQ(T.normalize(T.pow(g2, 4)).level, 1u);  // x^((9-1)/(3-1)) lies in F_3
}

TEST(FieldTower, CosetRepresentativesAreDistinct) {
  for (auto [p, a] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {2, 1}, {2, 2}, {5, 1}}) {
    FieldTower T(p, 1);
    const auto reps = T.mult_coset_reps(a);
    ASSERT_EQ(reps.size(), T.size(a) + 1);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        const FieldElement quotient = T.div(reps[i], reps[j]);
        EXPECT_NE(a % T.minimal_level(quotient), 0u) << "reps " << i << "," << j << " share a coset";
      }
  }
}

TEST(FieldTower, SquareRoots) {
  FieldTower T(3, 1);
  int squares = 0;
  for (const auto& x : T.enumerate_level(2)) {
    const auto s = T.sqrt(x);
    if (!s) continue;
    ++squares;
    EXPECT_TRUE(T.same(T.mul(*s, *s), x));
  }
  EXPECT_EQ(squares, 5);  // 0 and (9-1)/2 nonzero squares
}

TEST(FieldTower, AdditiveBasisSpans) {
  FieldTower T(2, 1);
  const auto basis = T.additive_basis(3);
  ASSERT_EQ(basis.size(), 3u);
  std::set<FieldElement> span;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    FieldElement s = T.zero();
    for (std::uint32_t i = 0; i < 3; ++i)
      if (mask >> i & 1) s = T.add(s, basis[i]);
    span.insert(T.embed(T.normalize(s), 3));
  }
  EXPECT_EQ(span.size(), 8u);
}

TEST(FieldTower, TooLargeLevelIsRejected) {
  FieldTower T(2, 1);
  EXPECT_THROW(T.size(23), LevelError);
  EXPECT_EQ(T.size(22), 1u << 22);
}

TEST(FieldTower, DeterministicAcrossInstances) {
  FieldTower A(3, 1), B(3, 1);
  for (std::uint32_t a : {1u, 2u, 4u}) EXPECT_EQ(A.polynomial(a), B.polynomial(a));
  FieldTower C(2, 1);
  EXPECT_EQ(C.polynomial(1), (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(C.polynomial_string(2), "x^2 + x + 1");
}
