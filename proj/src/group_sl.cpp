#include "steinberg/group_sl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

using Raw = std::vector<std::uint32_t>;

Raw raw_identity(std::uint32_t n) {
  Raw m(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Raw raw_mul(const LevelData& F, std::uint32_t n, const Raw& a, const Raw& b) {
  Raw c(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t bkj = b[k * n + j];
        if (bkj != 0) c[i * n + j] = F.add(c[i * n + j], F.mul(aik, bkj));
      }
    }
  return c;
}

Raw raw_transpose(std::uint32_t n, const Raw& a) {
  Raw t(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
  return t;
}

// Gauss-Jordan inverse; returns false if singular.
bool raw_inverse(const LevelData& F, std::uint32_t n, Raw a, Raw& out) {
  out = raw_identity(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return false;
    if (piv != c)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[c * n + j]);
        std::swap(out[piv * n + j], out[c * n + j]);
      }
    const std::uint32_t s = F.inv(a[c * n + c]);
    for (std::uint32_t j = 0; j < n; ++j) {
      a[c * n + j] = F.mul(a[c * n + j], s);
      out[c * n + j] = F.mul(out[c * n + j], s);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == c || a[i * n + c] == 0) continue;
      const std::uint32_t f = a[i * n + c];
      for (std::uint32_t j = 0; j < n; ++j) {
        a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[c * n + j]));
        out[i * n + j] = F.sub(out[i * n + j], F.mul(f, out[c * n + j]));
      }
    }
  }
  return true;
}

std::uint32_t raw_det(const LevelData& F, std::uint32_t n, Raw a) {
  std::uint32_t det = 1;
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = F.neg(det);
    }
    det = F.mul(det, a[c * n + c]);
    const std::uint32_t s = F.inv(a[c * n + c]);
    for (std::uint32_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      const std::uint32_t f = F.mul(a[i * n + c], s);
      for (std::uint32_t j = c; j < n; ++j) a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[c * n + j]));
    }
  }
  return det;
}

// Column reduction g*C = M with C upper unipotent. Pivot of column j is the
// lowest unused row with a nonzero entry; the pivot row is then cleared to the
// right. Afterwards column j is zero below perm[j] and in every earlier pivot row.
struct CellReduction {
  std::vector<std::uint32_t> perm;
  Raw M;
  Raw C;
};

CellReduction reduce_columns(const LevelData& F, std::uint32_t n, const Raw& g) {
  CellReduction red{std::vector<std::uint32_t>(n), g, raw_identity(n)};
  std::vector<bool> used(n, false);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint32_t piv = n;
    for (std::uint32_t i = n; i-- > 0;)
      if (!used[i] && red.M[i * n + j] != 0) {
        piv = i;
        break;
      }
    if (piv == n) throw ValidationError("singular matrix has no Bruhat cell");
    used[piv] = true;
    red.perm[j] = piv;
    const std::uint32_t pinv = F.inv(red.M[piv * n + j]);
    for (std::uint32_t k = j + 1; k < n; ++k) {
      if (red.M[piv * n + k] == 0) continue;
      const std::uint32_t f = F.mul(red.M[piv * n + k], pinv);
      for (std::uint32_t i = 0; i < n; ++i) {
        red.M[i * n + k] = F.sub(red.M[i * n + k], F.mul(f, red.M[i * n + j]));
        red.C[i * n + k] = F.sub(red.C[i * n + k], F.mul(f, red.C[i * n + j]));
      }
    }
  }
  return red;
}

// The left factor u' with M = u' * P * D, where D_j = M[perm[j]][j].
Raw left_factor(const LevelData& F, std::uint32_t n, const CellReduction& red) {
  Raw u = raw_identity(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const std::uint32_t pj = red.perm[j];
    const std::uint32_t dinv = F.inv(red.M[pj * n + j]);
    for (std::uint32_t i = 0; i < pj; ++i)
      if (red.M[i * n + j] != 0) u[i * n + pj] = F.mul(red.M[i * n + j], dinv);
  }
  return u;
}

// m <- m * eps(root, c) at one level: column root.m += c * column root.k.
void right_mul_eps(const LevelData& F, std::uint32_t n, Raw& m, Root root, std::uint32_t c) {
  if (c == 0) return;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t x = m[i * n + root.k];
    if (x != 0) m[i * n + root.m] = F.add(m[i * n + root.m], F.mul(c, x));
  }
}

std::uint32_t lcm_levels(std::span<const FieldElement> xs) {
  std::uint32_t l = 1;
  for (const auto& x : xs) l = std::lcm(l, x.level);
  return l;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Root::name() const { return "e" + std::to_string(k + 1) + "-e" + std::to_string(m + 1); }

WeylElement WeylElement::identity(std::uint32_t n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0u);
  return w;
}

WeylElement WeylElement::from_word(std::uint32_t n, std::span<const std::uint32_t> word) {
  WeylElement w = identity(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint32_t x = j;
    for (std::size_t t = word.size(); t-- > 0;) {
      const std::uint32_t s = word[t];
      if (s + 1 >= n) throw ValidationError("simple reflection index out of range");
      if (x == s)
        x = s + 1;
      else if (x == s + 1)
        x = s;
    }
    w.perm[j] = x;
  }
  // Store a reduced word regardless of the input.
  return from_perm(w.perm);
}

WeylElement WeylElement::from_perm(std::vector<std::uint32_t> perm) {
  WeylElement w;
  w.perm = perm;
  std::vector<std::uint32_t> peeled;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < perm.size() && perm[i] < perm[i + 1]) ++i;
    if (i + 1 >= perm.size()) break;
    std::swap(perm[i], perm[i + 1]);
    peeled.push_back(static_cast<std::uint32_t>(i));
  }
  w.word.assign(peeled.rbegin(), peeled.rend());
  return w;
}

std::size_t WeylElement::inversions() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++c;
  return c;
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t t = 0; t < word.size(); ++t) os << (t ? " " : "") << "s" << word[t] + 1;
  return os.str();
}

RootDatum::RootDatum(std::uint32_t n_) : n(n_), r(n_ * (n_ - 1) / 2) {
  if (n < 2) throw ValidationError("SL_n needs n >= 2");
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t m = k + 1; m < n; ++m) positive_roots.push_back({k, m});
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t s = j; s-- > 0;) w0_word.push_back(s);
  alpha.assign(w0_word.rbegin(), w0_word.rend());
  for (std::uint32_t j = 0; j < r; ++j) {
    Root root{alpha[j], alpha[j] + 1};
    for (std::uint32_t t = j; t-- > 0;) {
      const std::uint32_t s = alpha[t];
      auto refl = [s](std::uint32_t x) { return x == s ? s + 1 : (x == s + 1 ? s : x); };
      root = {refl(root.k), refl(root.m)};
    }
    beta.push_back(root);
  }
  w0 = WeylElement::from_word(n, w0_word);
  w0.word = w0_word;
}

std::string RootDatum::w0_word_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < w0_word.size(); ++t) os << (t ? " " : "") << "s" << w0_word[t] + 1;
  return os.str();
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> cell_positions(const std::vector<std::uint32_t>& perm) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
  const std::size_t n = perm.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (perm[k] < perm[j]) pos.emplace_back(perm[k], perm[j]);
  std::sort(pos.begin(), pos.end());
  return pos;
}

// ---------------------------------------------------------------------------
// SLGroup

SLGroup::SLGroup(const FieldTower& tower, std::uint32_t n) : tower_(tower), n_(n), roots_(n) {
  if (n > 6) throw ValidationError("SL_n supported for n <= 6");
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    weyl_.push_back(WeylElement::from_perm(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& w : weyl_) {
    GroupElement g = identity();
    for (std::uint32_t s : w.word) g = mul(g, simple_rep(s));
    weyl_reps_.emplace(w.perm, g);
  }
}

GroupElement SLGroup::normalized(std::uint32_t level, std::vector<std::uint32_t> entries) const {
  const std::uint32_t p = tower_.p();
  std::uint32_t m = 1;
  for (std::uint32_t v : entries) {
    if (v < p) continue;  // constants live in GF(p)
    m = std::lcm(m, tower_.minimal_level({level, v}));
    if (m == level) break;
  }
  if (m == level) return GroupElement(n_, level, std::move(entries));
  for (auto& v : entries) v = *tower_.descend_raw(v, level, m);
  return GroupElement(n_, m, std::move(entries));
}

GroupElement SLGroup::identity() const { return GroupElement(n_, 1, raw_identity(n_)); }

GroupElement SLGroup::make(std::uint32_t level, std::vector<std::uint32_t> entries) const {
  if (entries.size() != n_ * n_) throw ValidationError("matrix must have n*n entries");
  const LevelData& F = tower_.level(level);
  for (std::uint32_t v : entries)
    if (v >= F.size) throw ValidationError("matrix entry out of range for its level");
  return normalized(level, std::move(entries));
}

GroupElement SLGroup::from_entries(std::span<const FieldElement> entries) const {
  if (entries.size() != n_ * n_) throw ValidationError("matrix must have n*n entries");
  const std::uint32_t L = lcm_levels(entries);
  Raw raw;
  raw.reserve(entries.size());
  for (const auto& x : entries) raw.push_back(tower_.embed_raw(x.value, x.level, L));
  GroupElement g = make(L, std::move(raw));
  if (!is_special(g)) throw ValidationError("matrix does not have determinant 1");
  return g;
}

GroupElement SLGroup::lift(const GroupElement& g, std::uint32_t level) const {
  if (g.level() == level) return g;
  Raw raw(g.raw());
  for (auto& v : raw) v = tower_.embed_raw(v, g.level(), level);
  return GroupElement(n_, level, std::move(raw));
}

GroupElement SLGroup::mul(const GroupElement& a, const GroupElement& b) const {
  const std::uint32_t L = std::lcm(a.level(), b.level());
  const LevelData& F = tower_.level(L);
  return normalized(L, raw_mul(F, n_, lift(a, L).raw(), lift(b, L).raw()));
}

GroupElement SLGroup::inverse(const GroupElement& g) const {
  Raw out;
  if (!raw_inverse(tower_.level(g.level()), n_, g.raw(), out)) throw ValidationError("singular matrix");
  return normalized(g.level(), std::move(out));
}

FieldElement SLGroup::det(const GroupElement& g) const {
  return tower_.normalize({g.level(), raw_det(tower_.level(g.level()), n_, g.raw())});
}

bool SLGroup::is_special(const GroupElement& g) const { return det(g) == tower_.one(); }

GroupElement SLGroup::eps(Root root, FieldElement c) const {
  if (root.k == root.m || root.k >= n_ || root.m >= n_) throw ValidationError("invalid root " + root.name());
  Raw m = raw_identity(n_);
  m[root.k * n_ + root.m] = c.value;
  return normalized(c.level, std::move(m));
}

GroupElement SLGroup::simple_rep(std::uint32_t i) const {
  if (i + 1 >= n_) throw ValidationError("simple reflection index out of range");
  Raw m = raw_identity(n_);
  m[i * n_ + i] = 0;
  m[(i + 1) * n_ + (i + 1)] = 0;
  m[i * n_ + (i + 1)] = 1;
  m[(i + 1) * n_ + i] = tower_.p() - 1;
  return GroupElement(n_, 1, std::move(m));
}

GroupElement SLGroup::weyl_rep(const WeylElement& w) const {
  auto it = weyl_reps_.find(w.perm);
  if (it == weyl_reps_.end()) throw ValidationError("not a permutation of the right size");
  return it->second;
}

GroupElement SLGroup::torus_for_root_value(Root beta, FieldElement c) const {
  if (c.is_zero()) throw ValidationError("invalid character value: root value must be nonzero");
  if (beta.k == beta.m || beta.k >= n_ || beta.m >= n_) throw ValidationError("invalid root " + beta.name());
  if (n_ >= 3) {
    std::uint32_t third = 0;
    while (third == beta.k || third == beta.m) ++third;
    Raw m = raw_identity(n_);
    m[beta.k * n_ + beta.k] = c.value;
    m[third * n_ + third] = tower_.level(c.level).inv(c.value);
    return normalized(c.level, std::move(m));
  }
  auto d = tower_.sqrt(c);
  if (!d) d = tower_.sqrt(tower_.embed(c, 2 * c.level));
  if (!d) throw ConsistencyError("no square root at the doubled level");
  const LevelData& F = tower_.level(d->level);
  Raw m(4, 0);
  m[beta.k * 2 + beta.k] = d->value;
  m[beta.m * 2 + beta.m] = F.inv(d->value);
  return normalized(d->level, std::move(m));
}

FieldElement SLGroup::root_value(Root beta, const GroupElement& t) const {
  return tower_.normalize(tower_.div(t.entry(beta.k, beta.k), t.entry(beta.m, beta.m)));
}

bool SLGroup::is_diagonal(const GroupElement& g) const {
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j)
      if (i != j && g.at(i, j) != 0) return false;
  return true;
}

bool SLGroup::is_upper_unipotent(const GroupElement& g) const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (g.at(i, i) != 1) return false;
    for (std::uint32_t j = 0; j < i; ++j)
      if (g.at(i, j) != 0) return false;
  }
  return true;
}

BruhatDecomposition SLGroup::bruhat_decompose(const GroupElement& g) const {
  if (!is_special(g)) throw ValidationError("invalid element: determinant is not 1");
  const std::uint32_t L = g.level();
  const LevelData& F = tower_.level(L);
  const CellReduction red = reduce_columns(F, n_, g.raw());

  BruhatDecomposition out;
  out.w = WeylElement::from_perm(red.perm);
  out.left = normalized(L, left_factor(F, n_, red));

  Raw pd(n_ * n_, 0);
  for (std::uint32_t j = 0; j < n_; ++j) pd[red.perm[j] * n_ + j] = red.M[red.perm[j] * n_ + j];
  const Raw nw = lift(weyl_rep(out.w), L).raw();
  out.torus = normalized(L, raw_mul(F, n_, raw_transpose(n_, nw), pd));

  Raw cinv;
  raw_inverse(F, n_, red.C, cinv);
  out.right = normalized(L, std::move(cinv));
  return out;
}

GroupElement SLGroup::recompose(const BruhatDecomposition& d) const {
  return mul(mul(mul(d.left, weyl_rep(d.w)), d.torus), d.right);
}

WeylElement SLGroup::bruhat_cell(const GroupElement& g) const {
  return WeylElement::from_perm(reduce_columns(tower_.level(g.level()), n_, g.raw()).perm);
}

std::pair<std::vector<std::uint32_t>, GroupElement> SLGroup::cell_form(const GroupElement& g) const {
  const LevelData& F = tower_.level(g.level());
  const CellReduction red = reduce_columns(F, n_, g.raw());
  return {red.perm, normalized(g.level(), left_factor(F, n_, red))};
}

GroupElement SLGroup::unipotent_from_coords(std::span<const FieldElement> coords, std::uint32_t i) const {
  const std::uint32_t r = roots_.r;
  if (i < 1 || i > r || coords.size() != r - i + 1) throw ValidationError("bad unipotent coordinate tuple");
  const std::uint32_t L = lcm_levels(coords);
  const LevelData& F = tower_.level(L);
  Raw m = raw_identity(n_);
  // coords[t] belongs to beta_{r - t}; multiply left to right.
  for (std::size_t t = 0; t < coords.size(); ++t)
    right_mul_eps(F, n_, m, roots_.beta[r - 1 - t], tower_.embed_raw(coords[t].value, coords[t].level, L));
  return normalized(L, std::move(m));
}

std::vector<FieldElement> SLGroup::unipotent_coords(const GroupElement& z) const {
  if (!is_upper_unipotent(z)) throw ValidationError("element is not upper unipotent");
  const std::uint32_t r = roots_.r;
  const std::uint32_t L = z.level();
  const LevelData& F = tower_.level(L);

  // Entry (k,m) of the ordered product is c_(k,m) plus terms in roots of
  // smaller height, so heights can be solved one at a time.
  std::vector<std::uint32_t> order(r);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return roots_.beta[a].height() < roots_.beta[b].height();
  });

  std::vector<std::uint32_t> c(r, 0);  // indexed by beta position j-1
  auto product = [&]() {
    Raw m = raw_identity(n_);
    for (std::uint32_t t = r; t-- > 0;) right_mul_eps(F, n_, m, roots_.beta[t], c[t]);
    return m;
  };
  for (std::uint32_t j : order) {
    const Root b = roots_.beta[j];
    c[j] = 0;
    const Raw m = product();
    c[j] = F.sub(z.at(b.k, b.m), m[b.k * n_ + b.m]);
  }
  if (product() != z.raw()) throw ConsistencyError("unipotent coordinate extraction failed");

  std::vector<FieldElement> out(r);
  for (std::uint32_t t = 0; t < r; ++t) out[t] = tower_.normalize({L, c[r - 1 - t]});
  return out;
}

std::vector<UnipotentElement> SLGroup::enumerate_X(std::uint32_t i, std::uint32_t b) const {
  const std::uint32_t r = roots_.r;
  if (i < 1 || i > r) throw ValidationError("X index out of range");
  const LevelData& F = tower_.level(b);
  const std::uint32_t len = r - i + 1;
  const std::uint64_t Q = F.size;
  std::uint64_t total = 1;
  for (std::uint32_t t = 0; t < len; ++t) {
    total *= Q;
    if (total > (std::uint64_t{1} << 24)) throw LevelError("enumeration too large");
  }

  std::vector<UnipotentElement> out;
  out.reserve(total);
  std::vector<std::uint32_t> digits(len, 0);  // digits[0] is c_r, most significant
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Raw m = raw_identity(n_);
    UnipotentElement u;
    u.coords.reserve(len);
    for (std::uint32_t t = 0; t < len; ++t) {
      right_mul_eps(F, n_, m, roots_.beta[r - 1 - t], digits[t]);
      u.coords.push_back(tower_.normalize({b, digits[t]}));
    }
    u.g = normalized(b, std::move(m));
    out.push_back(std::move(u));
    for (std::uint32_t t = len; t-- > 0;) {
      if (++digits[t] < Q) break;
      digits[t] = 0;
    }
  }
  return out;
}

std::vector<UnipotentElement> SLGroup::enumerate_U(std::uint32_t a) const { return enumerate_X(1, a); }

std::vector<GroupElement> SLGroup::elements_of(const std::vector<UnipotentElement>& us) const {
  std::vector<GroupElement> out;
  out.reserve(us.size());
  for (const auto& u : us) out.push_back(u.g);
  return out;
}

std::vector<GroupElement> SLGroup::enumerate_torus(std::uint32_t a) const {
  const LevelData& F = tower_.level(a);
  const std::uint32_t units = F.size - 1;
  std::vector<std::uint32_t> k(n_ - 1, 0);  // logs of the first n-1 diagonal entries
  std::vector<GroupElement> out;
  for (;;) {
    Raw m(n_ * n_, 0);
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i + 1 < n_; ++i) {
      m[i * n_ + i] = F.exp[k[i]];
      total += k[i];
    }
    m[(n_ - 1) * n_ + (n_ - 1)] = F.exp[(units - total % units) % units];
    out.push_back(normalized(a, std::move(m)));
    std::uint32_t t = n_ - 1;
    while (t-- > 0) {
      if (++k[t] < units) break;
      k[t] = 0;
    }
    if (t == static_cast<std::uint32_t>(-1)) break;
  }
  return out;
}

std::vector<GroupElement> SLGroup::enumerate_group(std::uint32_t a) const {
  const LevelData& F = tower_.level(a);
  const auto torus = enumerate_torus(a);
  const auto unip = enumerate_U(a);
  std::vector<GroupElement> out;
  for (const auto& w : weyl_) {
    const auto pos = cell_positions(w.perm);
    const Raw nw = lift(weyl_rep(w), a).raw();
    std::vector<std::uint32_t> digits(pos.size(), 0);
    for (;;) {
      Raw left = raw_identity(n_);
      for (std::size_t t = 0; t < pos.size(); ++t) left[pos[t].first * n_ + pos[t].second] = digits[t];
      const Raw ln = raw_mul(F, n_, left, nw);
      for (const auto& t : torus) {
        const Raw lnt = raw_mul(F, n_, ln, lift(t, a).raw());
        for (const auto& u : unip) out.push_back(normalized(a, raw_mul(F, n_, lnt, lift(u.g, a).raw())));
      }
      std::size_t t = pos.size();
      while (t-- > 0) {
        if (++digits[t] < F.size) break;
        digits[t] = 0;
      }
      if (t == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

double SLGroup::group_order(std::uint32_t a) const {
  const double Q = static_cast<double>(tower_.size(a));
  double order = std::pow(Q, roots_.r);
  for (std::uint32_t i = 2; i <= n_; ++i) order *= std::pow(Q, i) - 1.0;
  return order;
}

std::vector<GroupElement> SLGroup::generators(std::uint32_t a) const {
  std::vector<GroupElement> out;
  const auto basis = tower_.additive_basis(a);
  for (std::uint32_t k = 0; k < n_; ++k)
    for (std::uint32_t m = 0; m < n_; ++m) {
      if (k == m) continue;
      for (const auto& c : basis) out.push_back(eps({k, m}, c));
    }
  return out;
}

std::string SLGroup::format(const GroupElement& g) const {
  std::ostringstream os;
  os << "[" << g.level() << "]";
  for (std::uint32_t v : g.raw()) os << " " << v;
  return os.str();
}

}  // namespace steinberg
