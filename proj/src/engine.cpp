#include "steinberg/engine.hpp"

#include <algorithm>
#include <numeric>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

bool all_zero(const UCoords& c) {
  return std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.is_zero(); });
}

void append(std::vector<Multiplier>& out, std::vector<Multiplier> more) {
  for (auto& m : more) out.push_back(std::move(m));
}

GroupAlgebraElement unit_sum(const std::vector<GroupElement>& S) {
  GroupAlgebraElement x;
  x.reserve(S.size());
  for (const auto& g : S) x.emplace_back(g, 1);
  return x;
}

}  // namespace

Multiplier make_multiplier(std::string role, const GroupAlgebraElement& terms, const CoeffField& k) {
  std::map<GroupElement, Scalar> merged;
  for (const auto& [g, c] : terms) {
    Scalar& slot = merged[g];
    slot = k.add(slot, c % k.ell());
  }
  Multiplier m;
  m.role = std::move(role);
  for (auto& [g, c] : merged)
    if (c != 0) m.terms.emplace_back(g, c);
  return m;
}

std::string SteinbergReport::verdict() const {
  if (reducible) return "reducible";
  return certified ? "irreducible" : "probably irreducible";
}

// ---------------------------------------------------------------------------
// Spinner

Spinner::Spinner(const InducedModule& M, std::vector<GroupElement> gens, const std::vector<CosetLabel>& seeds)
    : M_(M), perms_(gens.size()) {
  auto intern = [&](const CosetLabel& l) {
    auto [it, inserted] = index_.try_emplace(l, static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.push_back(l);
    return it->second;
  };
  for (const auto& s : seeds) intern(s);
  for (std::size_t idx = 0; idx < labels_.size(); ++idx) {
    const GroupElement rep = M_.representative(labels_[idx]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::uint32_t image = intern(M_.coset_label(M_.group().mul(gens[g], rep)));
      perms_[g].resize(labels_.size());
      perms_[g][idx] = image;
    }
  }
  for (auto& p : perms_) p.resize(labels_.size());
}

SpinResult Spinner::spin(const MVector& v, bool want_basis) const {
  const CoeffField& k = M_.coeffs();
  const std::size_t N = labels_.size();
  using Dense = std::vector<Scalar>;

  // Fully reduced rows; pivots_[t] is the pivot column of rows[t].
  std::vector<Dense> rows;
  std::vector<std::size_t> pivots;
  auto insert = [&](Dense w) -> bool {
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const Scalar c = w[pivots[t]];
      if (c == 0) continue;
      const Scalar f = k.neg(c);
      for (std::size_t j = 0; j < N; ++j)
        if (rows[t][j] != 0) w[j] = k.add(w[j], k.mul(f, rows[t][j]));
    }
    std::size_t piv = 0;
    while (piv < N && w[piv] == 0) ++piv;
    if (piv == N) return false;
    const Scalar inv = k.inv(w[piv]);
    for (auto& x : w) x = k.mul(x, inv);
    for (auto& row : rows) {
      const Scalar c = row[piv];
      if (c == 0) continue;
      const Scalar f = k.neg(c);
      for (std::size_t j = 0; j < N; ++j)
        if (w[j] != 0) row[j] = k.add(row[j], k.mul(f, w[j]));
    }
    rows.push_back(std::move(w));
    pivots.push_back(piv);
    return true;
  };

  Dense start(N, 0);
  for (const auto& [label, c] : v.terms) {
    auto it = index_.find(label);
    if (it == index_.end()) throw ValidationError("vector has support outside the spinner's coset set");
    start[it->second] = c;
  }

  std::vector<Dense> queue;
  if (insert(start)) queue.push_back(start);
  while (!queue.empty()) {
    const Dense w = std::move(queue.back());
    queue.pop_back();
    for (const auto& perm : perms_) {
      Dense image(N, 0);
      for (std::size_t j = 0; j < N; ++j)
        if (w[j] != 0) image[perm[j]] = k.add(image[perm[j]], w[j]);
      if (insert(image)) queue.push_back(std::move(image));
    }
  }

  SpinResult out;
  out.dim = rows.size();
  if (want_basis)
    for (const auto& row : rows) {
      MVector b;
      for (std::size_t j = 0; j < N; ++j)
        if (row[j] != 0) b.terms.emplace(labels_[j], row[j]);
      out.basis.push_back(std::move(b));
    }
  return out;
}

// ---------------------------------------------------------------------------
// SteinbergEngine

SteinbergEngine::SteinbergEngine(const InducedModule& M) : M_(M) {
  if (M.coeffs().ell() == M.tower().p())
    throw CharacteristicClash("coefficient characteristic " + std::to_string(M.coeffs().ell()) +
                              " equals the defining characteristic");
}

Scalar SteinbergEngine::q_power(std::uint64_t b) const {
  const CoeffField& k = M_.coeffs();
  return k.pow(static_cast<Scalar>(M_.tower().q() % k.ell()), b);
}

const std::vector<GroupElement>& SteinbergEngine::X(std::uint32_t i, std::uint32_t b) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = x_cache_[{i, b}];
  if (!slot) slot = std::make_unique<std::vector<GroupElement>>(group().elements_of(group().enumerate_X(i, b)));
  return *slot;
}

const std::vector<UnipotentElement>& SteinbergEngine::U_coords(std::uint32_t a) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = u_cache_[a];
  if (!slot) slot = std::make_unique<std::vector<UnipotentElement>>(group().enumerate_U(a));
  return *slot;
}

MVector SteinbergEngine::closed_form_sum(std::uint32_t i, std::uint32_t b) const {
  const auto& xs = X(i, b);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = closed_cache_.find({i, b});
    if (it != closed_cache_.end()) return *it->second;
  }
  MVector v = M_.translates_of_eta(xs);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = closed_cache_[{i, b}];
  if (!slot) slot = std::make_unique<MVector>(v);
  return v;
}

std::vector<GroupElement> SteinbergEngine::torus_elements(std::uint32_t i, std::uint32_t b) const {
  const Root beta = group().roots().beta[i - 1];
  std::vector<GroupElement> ts;
  for (const auto& c : M_.tower().mult_coset_reps(b)) ts.push_back(group().torus_for_root_value(beta, c));
  return ts;
}

std::pair<MVector, MVector> SteinbergEngine::core_identity(std::uint32_t i, std::uint32_t b) const {
  const Root beta = group().roots().beta[i - 1];
  auto root_subgroup = [&](std::uint32_t level) {
    std::vector<GroupElement> out;
    for (const auto& c : M_.tower().enumerate_level(level)) out.push_back(group().eps(beta, c));
    return out;
  };
  const MVector inner = M_.translates_of_eta(root_subgroup(b));
  MVector lhs;
  for (const auto& t : torus_elements(i, b)) M_.axpy(lhs, 1, M_.act(t, inner));
  MVector rhs = M_.scale(M_.eta(), q_power(b));
  M_.axpy(rhs, 1, M_.translates_of_eta(root_subgroup(2 * b)));
  return {lhs, rhs};
}

CoeffSumReport SteinbergEngine::check_coefficient_sums(std::uint32_t a) const {
  const CoeffField& k = M_.coeffs();
  const GroupElement n = group().longest_rep();
  const MVector e = M_.eta();
  const Scalar top_sign = k.sign(group().roots().r);

  CoeffSumReport rep;
  rep.a = a;
  for (const auto& u : U_coords(a)) {
    CoeffSumCase c;
    c.u = u.coords;
    const StVector st = M_.to_steinberg_coords(M_.act(group().mul(n, u.g), e));
    c.coeff_sum = M_.coeff_sum(st);
    c.expected = all_zero(u.coords) ? top_sign : 0;
    for (const auto& [coords, _] : st.terms)
      for (const auto& x : coords)
        if (a % x.level != 0) c.support_in_level = false;
    c.pass = c.coeff_sum == c.expected && c.support_in_level;
    if (c.pass) {
      ++rep.passed;
    } else if (!rep.counterexample) {
      rep.counterexample = c.u;
    }
    rep.cases.push_back(std::move(c));
  }
  rep.pass = rep.passed == rep.cases.size();
  return rep;
}

LiftResult SteinbergEngine::lift_to_U_sum(const StVector& v, std::uint32_t a) const {
  if (v.empty()) throw ValidationError("empty vector: the lift needs a nonzero Steinberg vector");
  const CoeffField& k = M_.coeffs();
  const std::uint32_t own = M_.level_of(v);
  if (a == 0) a = own;
  if (a % own != 0) throw LevelError("vector does not live at level " + std::to_string(a));

  LiftResult out;
  // Move the lexicographically first support element to e.
  const auto& [y_coords, a_e] = *v.terms.begin();
  out.translation = y_coords;
  const GroupElement y_inv = group().inverse(group().unipotent_from_coords(y_coords));
  const MVector translated = M_.act(y_inv, M_.from_steinberg_coords(v));
  const StVector translated_st = M_.to_steinberg_coords(translated);
  const UCoords e_coords(group().roots().r, M_.tower().zero());
  auto found = translated_st.terms.find(e_coords);
  if (found == translated_st.terms.end() || found->second != a_e)
    throw ConsistencyError("translation did not move the chosen coefficient to e");

  const GroupElement n = group().longest_rep();
  const MVector nv = M_.act(n, translated);
  out.A = k.mul(k.sign(group().roots().r), a_e);
  if (M_.coeff_sum(M_.to_steinberg_coords(nv)) != out.A)
    throw ConsistencyError("coefficient sum of n v differs from (-1)^r a_e");

  std::vector<GroupElement> U;
  for (const auto& u : U_coords(a)) U.push_back(u.g);
  MVector lifted = M_.group_sum_apply(U, nv);
  if (lifted != M_.scale(closed_form_sum(1, a), out.A))
    throw ConsistencyError("averaged vector is not A times the U-sum of eta");

  out.state = {1, a, std::move(lifted), out.A};
  out.steps.push_back(make_multiplier("translate", {{y_inv, 1}}, k));
  out.steps.push_back(make_multiplier("longest", {{n, 1}}, k));
  out.steps.push_back(make_multiplier("U-sum level " + std::to_string(a), unit_sum(U), k));
  return out;
}

DoubleResult SteinbergEngine::double_field_sum(const LadderState& s) const {
  const std::uint32_t r = group().roots().r;
  const auto& xs = X(s.i, 2 * s.b);
  DoubleResult out;
  out.factor = q_power(std::uint64_t{s.b} * (r - s.i + 1));
  if (out.factor == 0) throw CharacteristicClash("q is zero in the coefficient field");
  const Scalar scalar = M_.coeffs().mul(s.scalar, out.factor);
  MVector v = M_.group_sum_apply(xs, s.vector);
  if (v != M_.scale(closed_form_sum(s.i, 2 * s.b), scalar))
    throw ConsistencyError("doubled sum does not match the closed form");
  out.state = {s.i, 2 * s.b, std::move(v), scalar};
  out.step = make_multiplier("X-sum i=" + std::to_string(s.i) + " level " + std::to_string(2 * s.b), unit_sum(xs),
                             M_.coeffs());
  return out;
}

SteinbergEngine::Combination SteinbergEngine::torus_combination(const LadderState& s) const {
  const CoeffField& k = M_.coeffs();
  const std::uint32_t e = group().roots().r - s.i;
  const Scalar Q = q_power(s.b);
  if (Q == 0) throw CharacteristicClash("q is zero in the coefficient field");

  const auto ts = torus_elements(s.i, s.b);
  const MVector xi = M_.act(unit_sum(ts), s.vector);
  const DoubleResult doubled = double_field_sum(s);

  // Z xi        = s q^{eb} Z (q^b eta + U2)
  // Z doubled   = s q^{b(e+1)} q^{2be} Z U2
  // so Z (lambda_A xi + lambda_B doubled) = s Z eta.
  const Scalar lambda_a = k.inv(k.pow(Q, e + 1));
  const Scalar lambda_b = k.neg(k.inv(k.pow(Q, 3 * e + 2)));

  Combination out;
  out.torus_count = ts.size();
  out.vector = M_.scale(xi, lambda_a);
  M_.axpy(out.vector, lambda_b, doubled.state.vector);

  GroupAlgebraElement terms;
  for (const auto& t : ts) terms.emplace_back(t, lambda_a);
  for (const auto& x : X(s.i, 2 * s.b)) terms.emplace_back(x, lambda_b);
  out.step = make_multiplier("torus+X i=" + std::to_string(s.i) + " level " + std::to_string(2 * s.b), terms, k);
  return out;
}

StepResult SteinbergEngine::ladder_step(const LadderState& s) const {
  const std::uint32_t r = group().roots().r;
  if (s.i < 1 || s.i >= r) throw ValidationError("ladder_step needs 1 <= i < r");
  Combination comb = torus_combination(s);
  const auto& Z = X(s.i + 1, 2 * s.b);
  MVector next = M_.group_sum_apply(Z, comb.vector);
  if (next != M_.scale(closed_form_sum(s.i + 1, 2 * s.b), s.scalar))
    throw ConsistencyError("ladder step does not produce the next X-sum");

  StepResult out;
  out.state = {s.i + 1, 2 * s.b, std::move(next), s.scalar};
  out.torus_count = comb.torus_count;
  out.steps.push_back(std::move(comb.step));
  out.steps.push_back(make_multiplier("Z i=" + std::to_string(s.i + 1) + " level " + std::to_string(2 * s.b),
                                      unit_sum(Z), M_.coeffs()));
  return out;
}

ExtractResult SteinbergEngine::extract_eta(const LadderState& s) const {
  if (s.i != group().roots().r) throw ValidationError("extract_eta needs i = r");
  Combination comb = torus_combination(s);
  if (comb.vector != M_.scale(M_.eta(), s.scalar)) throw ConsistencyError("extraction did not isolate eta");
  ExtractResult out;
  out.scalar = s.scalar;
  out.vector = std::move(comb.vector);
  out.torus_count = comb.torus_count;
  out.steps.push_back(std::move(comb.step));
  return out;
}

Certificate SteinbergEngine::reach_eta(const StVector& v) const {
  if (v.empty()) throw ValidationError("empty vector: reach_eta needs a nonzero Steinberg vector");
  const FieldTower& T = M_.tower();
  Certificate cert;
  cert.n = group().n();
  cert.p = T.p();
  cert.d = T.d();
  cert.ell = M_.coeffs().ell();
  cert.w0_word = group().roots().w0_word;
  cert.input = v;
  cert.a = M_.level_of(v);
  cert.max_level = cert.a;

  if (v.size() == 1 && all_zero(v.terms.begin()->first)) {
    cert.claimed_scalar = v.terms.begin()->second;
    return cert;
  }

  LiftResult lift = lift_to_U_sum(v, cert.a);
  append(cert.steps, std::move(lift.steps));
  LadderState state = std::move(lift.state);
  while (state.i < group().roots().r) {
    StepResult step = ladder_step(state);
    append(cert.steps, std::move(step.steps));
    state = std::move(step.state);
  }
  ExtractResult ex = extract_eta(state);
  append(cert.steps, std::move(ex.steps));
  cert.claimed_scalar = ex.scalar;
  cert.max_level = 2 * state.b;
  for (const auto& m : cert.steps)
    for (const auto& [g, _] : m.terms) cert.max_entry_level = std::max(cert.max_entry_level, g.level());
  return cert;
}

bool SteinbergEngine::verify_certificate(const Certificate& cert, const StVector& v) const {
  const FieldTower& T = M_.tower();
  if (cert.n != group().n() || cert.p != T.p() || cert.d != T.d() || cert.ell != M_.coeffs().ell()) return false;
  if (cert.claimed_scalar % cert.ell == 0) return false;
  try {
    MVector w = M_.from_steinberg_coords(v);
    for (const auto& step : cert.steps) {
      for (const auto& [g, _] : step.terms)
        if (g.n() != cert.n || !group().is_special(g)) return false;
      w = M_.act(step.terms, w);
    }
    return w == M_.scale(M_.eta(), cert.claimed_scalar);
  } catch (const std::exception&) {
    return false;
  }
}

SpinResult SteinbergEngine::spin(const MVector& v, const std::vector<GroupElement>& gens) const {
  std::vector<CosetLabel> seeds;
  for (const auto& [label, _] : v.terms) seeds.push_back(label);
  return Spinner(M_, gens, seeds).spin(v);
}

std::vector<StVector> SteinbergEngine::all_nonzero_vectors(std::uint32_t a) const {
  const auto& U = U_coords(a);
  const std::uint32_t ell = M_.coeffs().ell();
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < U.size(); ++t) {
    total *= ell;
    if (total > (std::uint64_t{1} << 20)) throw ValidationError("too many vectors to enumerate");
  }
  std::vector<StVector> out;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    StVector v;
    std::uint64_t rest = idx;
    for (std::size_t t = 0; t < U.size(); ++t, rest /= ell)
      if (rest % ell != 0) v.terms.emplace(U[t].coords, static_cast<Scalar>(rest % ell));
    out.push_back(std::move(v));
  }
  return out;
}

StVector SteinbergEngine::random_vector(std::uint32_t a, std::mt19937_64& rng) const {
  const auto& U = U_coords(a);
  const std::uint32_t ell = M_.coeffs().ell();
  for (;;) {
    StVector v;
    for (const auto& u : U) {
      const Scalar c = static_cast<Scalar>(rng() % ell);
      if (c != 0) v.terms.emplace(u.coords, c);
    }
    if (!v.empty()) return v;
  }
}

SteinbergReport SteinbergEngine::finite_steinberg_report(std::uint32_t a, std::uint64_t seed) const {
  const CoeffField& k = M_.coeffs();
  const std::uint32_t ell = k.ell();
  const auto& U = U_coords(a);
  const MVector e = M_.eta();

  SteinbergReport rep;
  rep.a = a;
  rep.dim = U.size();

  std::vector<MVector> zeta;
  zeta.reserve(U.size());
  for (const auto& u : U) zeta.push_back(M_.act(u.g, e));
  rep.basis_rank = M_.rank(zeta);

  std::vector<CosetLabel> seeds;
  for (const auto& [label, _] : e.terms) seeds.push_back(label);
  const Spinner spinner(M_, group().generators(a), seeds);
  rep.cosets = spinner.orbit_size();
  rep.eta_spin_dim = spinner.spin(e, false).dim;

  auto record = [&](const std::vector<Scalar>& coeffs) {
    MVector v;
    StVector st;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      if (coeffs[t] == 0) continue;
      M_.axpy(v, coeffs[t], zeta[t]);
      st.terms.emplace(U[t].coords, coeffs[t]);
    }
    const std::size_t d = spinner.spin(v, false).dim;
    ++rep.spins;
    if (d > 0 && d < rep.dim) {
      rep.reducible = true;
      rep.proper_dims.insert(d);
      if (!rep.witness) {
        rep.witness = st;
        rep.witness_dim = d;
      }
    }
  };

  std::uint64_t space = 1;
  bool small = true;
  for (std::uint64_t t = 0; t < rep.dim && small; ++t) {
    space *= ell;
    if (space > (std::uint64_t{1} << 20)) small = false;
  }

  if (small) {
    // Every nonzero vector is a scalar multiple of one whose leading
    // coefficient is 1, and both span the same submodule.
    rep.certified = true;
    rep.vectors_covered = space - 1;
    const std::size_t D = rep.dim;
    for (std::size_t lead = 0; lead < D; ++lead) {
      std::uint64_t tails = 1;
      for (std::size_t t = lead + 1; t < D; ++t) tails *= ell;
      for (std::uint64_t idx = 0; idx < tails; ++idx) {
        std::vector<Scalar> coeffs(D, 0);
        coeffs[lead] = 1;
        std::uint64_t rest = idx;
        for (std::size_t t = lead + 1; t < D; ++t, rest /= ell) coeffs[t] = static_cast<Scalar>(rest % ell);
        record(coeffs);
      }
    }
    rep.irreducible = !rep.reducible;
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 64; ++t) {
      std::vector<Scalar> coeffs(rep.dim, 0);
      bool nonzero = false;
      while (!nonzero) {
        for (auto& c : coeffs) {
          c = static_cast<Scalar>(rng() % ell);
          nonzero = nonzero || c != 0;
        }
      }
      record(coeffs);
    }
    for (std::size_t t = 0; t < rep.dim; ++t) {
      std::vector<Scalar> coeffs(rep.dim, 0);
      coeffs[t] = 1;
      record(coeffs);
    }
    rep.vectors_covered = rep.spins;
  }
  return rep;
}

}  // namespace steinberg
