#include "steinberg/fields.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

constexpr std::uint64_t kMaxLevelSize = std::uint64_t{1} << 22;

using Poly = std::vector<std::uint32_t>;  // dense digits over GF(p), low to high

std::uint32_t pack(const Poly& digits, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return static_cast<std::uint32_t>(v);
}

// a*b mod f, where f is monic of degree D = f.size()-1 and a, b have D digits.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t D = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * D - 1, 0);
  for (std::size_t i = 0; i < D; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < D; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > D;) {
    const std::uint64_t t = prod[k];
    if (t == 0) continue;
    for (std::size_t i = 0; i < D; ++i) prod[k - D + i] = (prod[k - D + i] + (p - t) * f[i]) % p;
    prod[k] = 0;
  }
  Poly out(D);
  for (std::size_t i = 0; i < D; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly acc(f.size() - 1, 0);
  acc[0] = 1;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

// x reduced mod f (for degree 1 this is the constant -f[0]).
Poly x_mod(const Poly& f, std::uint32_t p) {
  const std::size_t D = f.size() - 1;
  Poly x(D, 0);
  if (D == 1) {
    x[0] = (p - f[0]) % p;
  } else {
    x[1] = 1;
  }
  return x;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
}

bool is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    while (n % k == 0) n /= k;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// CoeffField

CoeffField::CoeffField(std::uint32_t ell) : ell_(ell) {
  if (!is_prime(ell)) throw ValidationError("coefficient modulus " + std::to_string(ell) + " is not prime");
}

Scalar CoeffField::pow(Scalar x, std::uint64_t e) const {
  std::uint64_t acc = 1 % ell_;
  std::uint64_t base = x % ell_;
  while (e > 0) {
    if (e & 1) acc = acc * base % ell_;
    base = base * base % ell_;
    e >>= 1;
  }
  return static_cast<Scalar>(acc);
}

Scalar CoeffField::inv(Scalar x) const {
  if (x % ell_ == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(ell_) + ")");
  return pow(x, ell_ - 2);
}

Scalar CoeffField::from_int(std::int64_t v) const {
  const std::int64_t m = static_cast<std::int64_t>(ell_);
  return static_cast<Scalar>(((v % m) + m) % m);
}

// ---------------------------------------------------------------------------
// LevelData

std::uint32_t LevelData::add(std::uint32_t x, std::uint32_t y) const {
  if (p == 2) return x ^ y;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  while (x != 0 || y != 0) {
    out += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return out;
}

std::uint32_t LevelData::neg(std::uint32_t x) const {
  if (p == 2) return x;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  while (x != 0) {
    out += ((p - x % p) % p) * place;
    x /= p;
    place *= p;
  }
  return out;
}

std::uint32_t LevelData::sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }

std::uint32_t LevelData::inv(std::uint32_t x) const {
  if (x == 0) throw std::domain_error("inverse of zero field element");
  const std::uint32_t k = log[x];
  return exp[k == 0 ? 0 : size - 1 - k];
}

std::uint32_t LevelData::pow(std::uint32_t x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  return exp[(std::uint64_t{log[x]} * (e % (size - 1))) % (size - 1)];
}

std::uint32_t LevelData::from_int(std::int64_t v) const {
  const std::int64_t m = p;
  return static_cast<std::uint32_t>(((v % m) + m) % m);
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower::FieldTower(std::uint32_t p, std::uint32_t d) : p_(p), d_(d), q_(1) {
  if (!is_prime(p)) throw ValidationError("tower characteristic " + std::to_string(p) + " is not prime");
  if (d == 0) throw ValidationError("tower base degree must be at least 1");
  for (std::uint32_t i = 0; i < d; ++i) {
    q_ *= p;
    if (q_ > kMaxLevelSize) throw ValidationError("base field too large");
  }
  level(1);
}

std::uint64_t FieldTower::size(std::uint32_t a) const {
  if (a == 0) throw LevelError("field level must be positive");
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    s *= q_;
    if (s > kMaxLevelSize)
      throw LevelError("level " + std::to_string(a) + " exceeds the supported field size (2^22)");
  }
  return s;
}

const LevelData& FieldTower::level(std::uint32_t a) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return level_locked(a);
}

const LevelData& FieldTower::level_locked(std::uint32_t a) const {
  auto it = levels_.find(a);
  if (it != levels_.end()) return *it->second;
  auto built = build_level(a);
  const LevelData& ref = *built;
  levels_.emplace(a, std::move(built));
  return ref;
}

std::unique_ptr<LevelData> FieldTower::build_level(std::uint32_t a) const {
  const std::uint64_t order = size(a);
  const std::uint32_t D = d_ * a;

  // Divisor levels first: the new polynomial must be compatible with each of them.
  std::vector<const LevelData*> below;
  for (std::uint32_t s : divisors(a))
    if (s != a) below.push_back(&level_locked(s));

  const std::uint64_t group = order - 1;
  const auto group_primes = prime_factors(group);

  std::uint64_t candidates = 1;
  for (std::uint32_t i = 0; i < D; ++i) candidates *= p_;

  Poly chosen;
  for (std::uint64_t m = 0; m < candidates && chosen.empty(); ++m) {
    Poly f(D + 1);
    std::uint64_t rest = m;
    for (std::uint32_t i = 0; i < D; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p_);
      rest /= p_;
    }
    f[D] = 1;
    if (f[0] == 0) continue;

    const Poly x = x_mod(f, p_);
    if (group > 0 && !is_one(powmod(x, group, f, p_))) continue;
    bool primitive = true;
    for (std::uint64_t r : group_primes) {
      if (is_one(powmod(x, group / r, f, p_))) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;

    bool compatible = true;
    for (const LevelData* sub : below) {
      const std::uint64_t stride = group / (sub->size - 1);
      const Poly h = powmod(x, stride, f, p_);
      Poly acc(D, 0);
      for (std::size_t k = sub->poly.size(); k-- > 0;) {
        acc = mulmod(acc, h, f, p_);
        acc[0] = (acc[0] + sub->poly[k]) % p_;
      }
      if (!is_zero(acc)) {
        compatible = false;
        break;
      }
    }
    if (compatible) chosen = f;
  }
  if (chosen.empty()) throw LevelError("no compatible primitive polynomial for level " + std::to_string(a));

  auto data = std::make_unique<LevelData>();
  data->level = a;
  data->p = p_;
  data->degree = D;
  data->size = static_cast<std::uint32_t>(order);
  data->poly = chosen;
  data->exp.resize(order - 1);
  data->log.assign(order, 0);

  Poly cur(D, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k + 1 < order; ++k) {
    const std::uint32_t v = pack(cur, p_);
    data->exp[k] = v;
    data->log[v] = static_cast<std::uint32_t>(k);
    // cur *= x
    const std::uint32_t top = cur[D - 1];
    for (std::uint32_t i = D - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::uint32_t i = 0; i < D; ++i) cur[i] = static_cast<std::uint32_t>((cur[i] + std::uint64_t{p_ - top} * chosen[i]) % p_);
  }
  return data;
}

std::vector<std::uint32_t> FieldTower::built_levels() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<std::uint32_t> out;
  for (const auto& [a, _] : levels_) out.push_back(a);
  return out;
}

FieldElement FieldTower::from_int(std::int64_t v) const {
  const std::int64_t m = p_;
  return {1, static_cast<std::uint32_t>(((v % m) + m) % m)};
}

FieldElement FieldTower::generator(std::uint32_t a) const {
  const LevelData& L = level(a);
  return {a, L.exp.size() > 1 ? L.exp[1] : L.exp[0]};
}

namespace {
std::uint32_t common_level(FieldElement x, FieldElement y) {
  return static_cast<std::uint32_t>(std::lcm(x.level, y.level));
}
}  // namespace

FieldElement FieldTower::add(FieldElement x, FieldElement y) const {
  const std::uint32_t c = common_level(x, y);
  return {c, level(c).add(embed_raw(x.value, x.level, c), embed_raw(y.value, y.level, c))};
}

FieldElement FieldTower::sub(FieldElement x, FieldElement y) const {
  const std::uint32_t c = common_level(x, y);
  return {c, level(c).sub(embed_raw(x.value, x.level, c), embed_raw(y.value, y.level, c))};
}

FieldElement FieldTower::mul(FieldElement x, FieldElement y) const {
  const std::uint32_t c = common_level(x, y);
  return {c, level(c).mul(embed_raw(x.value, x.level, c), embed_raw(y.value, y.level, c))};
}

FieldElement FieldTower::div(FieldElement x, FieldElement y) const {
  const std::uint32_t c = common_level(x, y);
  return {c, level(c).div(embed_raw(x.value, x.level, c), embed_raw(y.value, y.level, c))};
}

FieldElement FieldTower::neg(FieldElement x) const { return {x.level, level(x.level).neg(x.value)}; }
FieldElement FieldTower::inv(FieldElement x) const { return {x.level, level(x.level).inv(x.value)}; }
FieldElement FieldTower::pow(FieldElement x, std::uint64_t e) const { return {x.level, level(x.level).pow(x.value, e)}; }

FieldElement FieldTower::embed(FieldElement x, std::uint32_t b) const { return {b, embed_raw(x.value, x.level, b)}; }

std::uint32_t FieldTower::embed_raw(std::uint32_t value, std::uint32_t a, std::uint32_t b) const {
  if (a == b) return value;
  if (a == 0 || b % a != 0)
    throw LevelError("cannot embed level " + std::to_string(a) + " into level " + std::to_string(b));
  if (value == 0) return 0;
  const LevelData& La = level(a);
  const LevelData& Lb = level(b);
  const std::uint64_t stride = (std::uint64_t{Lb.size} - 1) / (La.size - 1);
  return Lb.exp[(std::uint64_t{La.log[value]} * stride) % (Lb.size - 1)];
}

std::optional<std::uint32_t> FieldTower::descend_raw(std::uint32_t value, std::uint32_t b, std::uint32_t a) const {
  if (a == b) return value;
  if (a == 0 || b % a != 0) return std::nullopt;
  if (value == 0) return 0u;
  const LevelData& La = level(a);
  const LevelData& Lb = level(b);
  const std::uint64_t stride = (std::uint64_t{Lb.size} - 1) / (La.size - 1);
  const std::uint64_t k = Lb.log[value];
  if (k % stride != 0) return std::nullopt;
  return La.exp[k / stride];
}

std::uint32_t FieldTower::minimal_level(FieldElement x) const {
  for (std::uint32_t a : divisors(x.level))
    if (descend_raw(x.value, x.level, a)) return a;
  return x.level;
}

FieldElement FieldTower::normalize(FieldElement x) const {
  for (std::uint32_t a : divisors(x.level))
    if (auto v = descend_raw(x.value, x.level, a)) return {a, *v};
  return x;
}

bool FieldTower::same(FieldElement x, FieldElement y) const { return normalize(x) == normalize(y); }

std::vector<FieldElement> FieldTower::enumerate_level(std::uint32_t a) const {
  const LevelData& L = level(a);
  std::vector<FieldElement> out;
  out.reserve(L.size);
  for (std::uint32_t v = 0; v < L.size; ++v) out.push_back({a, v});
  return out;
}

std::vector<FieldElement> FieldTower::mult_coset_reps(std::uint32_t a) const {
  const std::uint64_t small = size(a);
  const LevelData& big = level(2 * a);
  std::vector<FieldElement> out;
  out.reserve(small + 1);
  for (std::uint64_t j = 0; j <= small; ++j) out.push_back({2 * a, big.exp[j]});
  return out;
}

std::vector<FieldElement> FieldTower::additive_basis(std::uint32_t a) const {
  const LevelData& L = level(a);
  std::vector<FieldElement> out;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < L.degree; ++i, place *= p_) out.push_back({a, place});
  return out;
}

std::optional<FieldElement> FieldTower::sqrt(FieldElement x) const {
  if (x.value == 0) return x;
  const LevelData& L = level(x.level);
  const std::uint64_t k = L.log[x.value];
  const std::uint64_t n = L.size - 1;
  if (k % 2 == 0) return FieldElement{x.level, L.exp[k / 2]};
  if (n % 2 == 1) return FieldElement{x.level, L.exp[((k + n) / 2) % n]};
  return std::nullopt;
}

std::vector<std::uint32_t> FieldTower::polynomial(std::uint32_t a) const { return level(a).poly; }

std::string FieldTower::polynomial_string(std::uint32_t a) const {
  const auto f = polynomial(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = f.size(); k-- > 0;) {
    if (f[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (f[k] != 1 || k == 0) os << f[k];
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::string FieldTower::format(FieldElement x) const {
  return std::to_string(x.level) + ":" + std::to_string(x.value);
}

}  // namespace steinberg
