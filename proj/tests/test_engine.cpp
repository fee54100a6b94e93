#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "steinberg/certificate_io.hpp"
#include "steinberg/engine.hpp"
#include "steinberg/errors.hpp"

using namespace steinberg;

namespace {

struct Stack {
  FieldTower T;
  SLGroup G;
  InducedModule M;
  SteinbergEngine E;
  Stack(std::uint32_t p, std::uint32_t d, std::uint32_t n, std::uint32_t ell)
      : T(p, d), G(T, n), M(G, CoeffField(ell)), E(M) {}
};

// sum_{x in U_beta(F_{q^b})} x.v with the root subgroup built directly from eps.
MVector root_subgroup_sum(const Stack& s, Root beta, std::uint32_t b, const MVector& v) {
  MVector out;
  for (const auto& c : s.T.enumerate_level(b)) s.M.axpy(out, 1, s.M.act(s.G.eps(beta, c), v));
  return out;
}

// sum over X_{i,q^b} assembled as nested root-subgroup sums, innermost beta_i.
MVector nested_X_sum(const Stack& s, std::uint32_t i, std::uint32_t b) {
  MVector v = s.M.eta();
  for (std::uint32_t j = i; j <= s.G.roots().r; ++j) v = root_subgroup_sum(s, s.G.roots().beta[j - 1], b, v);
  return v;
}

}  // namespace

TEST(Engine, CharacteristicClashIsRejected) {
  FieldTower T(3, 1);
  SLGroup G(T, 2);
  InducedModule M(G, CoeffField(3));
  EXPECT_THROW(SteinbergEngine{M}, CharacteristicClash);
}

TEST(Engine, CoefficientSumsExhaustive) {
  for (auto [n, p, a, ell] : std::vector<std::array<std::uint32_t, 4>>{
           {2, 3, 1, 2}, {3, 2, 1, 3}, {2, 3, 2, 5}, {3, 2, 2, 7}, {2, 2, 2, 3}}) {
    Stack s(p, 1, n, ell);
    const auto rep = s.E.check_coefficient_sums(a);
    EXPECT_TRUE(rep.pass) << "n=" << n << " p=" << p << " a=" << a << " ell=" << ell;
    EXPECT_FALSE(rep.counterexample);
    std::uint64_t size = 1;
    for (std::uint32_t t = 0; t < s.G.roots().r; ++t) size *= s.T.size(a);
    EXPECT_EQ(rep.cases.size(), size);
  }
  Stack s(3, 1, 2, 2);
  EXPECT_EQ(s.E.check_coefficient_sums(1).cases.size(), 3u);
}

// Coefficient sums of n u eta from a dense solve in the basis {z eta}.
TEST(Engine, CoefficientSumsAgainstLinearSolve) {
  Stack s(2, 1, 3, 5);
  const auto us = s.G.enumerate_U(1);
  const MVector e = s.M.eta();
  std::vector<MVector> family;
  for (const auto& u : us) family.push_back(s.M.act(u.g, e));
  std::map<CosetLabel, std::size_t> index;
  for (const auto& v : family)
    for (const auto& [l, _] : v.terms) index.try_emplace(l, index.size());
  auto dense = [&](const MVector& v) {
    std::vector<std::int64_t> row(index.size(), 0);
    for (const auto& [l, c] : v.terms) row.at(index.at(l)) = c;
    return row;
  };
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& v : family) cols.push_back(dense(v));
  const GroupElement n = s.G.longest_rep();
  for (const auto& u : us) {
    std::vector<std::int64_t> x;
    ASSERT_TRUE(oracle::dense_solve(cols, dense(s.M.act(s.G.mul(n, u.g), e)), 5, x));
    std::int64_t sum = 0;
    for (auto c : x) sum += c;
    const bool identity = u.g == s.G.identity();
    EXPECT_EQ(sum % 5, identity ? 4 : 0);  // (-1)^3
  }
}

TEST(Engine, CoreIdentity) {
  for (auto [n, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}})
    for (std::uint32_t ell : {2u, 3u, 5u, 7u}) {
      if (ell == p) continue;
      Stack s(p, 1, n, ell);
      for (std::uint32_t i = 1; i <= s.G.roots().r; ++i) {
        const auto [lhs, rhs] = s.E.core_identity(i, 1);
        EXPECT_EQ(lhs, rhs) << "n=" << n << " ell=" << ell << " i=" << i;
        // Right side rebuilt from scratch.
        const Root beta = s.G.roots().beta[i - 1];
        MVector want = s.M.scale(s.M.eta(), s.T.q() % ell);
        s.M.axpy(want, 1, root_subgroup_sum(s, beta, 2, s.M.eta()));
        EXPECT_EQ(rhs, want);
      }
    }
}

TEST(Engine, ClosedFormSumsMatchNestedRootSums) {
  Stack s(2, 1, 3, 3);
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (std::uint32_t b : {1u, 2u}) EXPECT_EQ(s.E.closed_form_sum(i, b), nested_X_sum(s, i, b));
}

TEST(Engine, LiftExample) {
  Stack s(3, 1, 2, 2);
  StVector v;  // (e + z) eta with z = eps(alpha, 1)
  v.terms.emplace(UCoords{s.T.zero()}, 1);
  v.terms.emplace(UCoords{s.T.one()}, 1);
  const auto lift = s.E.lift_to_U_sum(v);
  EXPECT_EQ(lift.A, 1u);
  EXPECT_EQ(lift.state.vector, root_subgroup_sum(s, {0, 1}, 1, s.M.eta()));
  EXPECT_EQ(lift.steps.size(), 3u);
  EXPECT_THROW(s.E.lift_to_U_sum(StVector{}), ValidationError);
}

// coeff_sum(n v) = (-1)^r a_e for every v supported on U_q.
TEST(Engine, LiftScalarInvariantExhaustive) {
  Stack s(3, 1, 2, 5);
  const UCoords e_coords{s.T.zero()};
  for (const auto& v : s.E.all_nonzero_vectors(1)) {
    const MVector nv = s.M.act(s.G.longest_rep(), s.M.from_steinberg_coords(v));
    auto it = v.terms.find(e_coords);
    const Scalar a_e = it == v.terms.end() ? 0 : it->second;
    EXPECT_EQ(s.M.coeff_sum(s.M.to_steinberg_coords(nv)), s.M.coeffs().neg(a_e));
  }
}

TEST(Engine, DoubleFieldSumScalars) {
  {
    Stack s(3, 1, 2, 2);
    LadderState st{1, 1, s.E.closed_form_sum(1, 1), 1};
    const auto out = s.E.double_field_sum(st);
    EXPECT_EQ(out.factor, 1u);  // 3 = 1 mod 2
    EXPECT_EQ(out.state.vector, s.E.closed_form_sum(1, 2));
  }
  {
    Stack s(2, 1, 3, 3);
    LadderState st{2, 1, s.E.closed_form_sum(2, 1), 1};
    const auto out = s.E.double_field_sum(st);
    EXPECT_EQ(out.factor, 1u);  // 2^2 = 4 = 1 mod 3
    EXPECT_EQ(out.state.vector, s.E.closed_form_sum(2, 2));
    EXPECT_EQ(out.state.b, 2u);
  }
  {
    Stack s(2, 1, 3, 5);
    LadderState st{1, 1, s.E.closed_form_sum(1, 1), 1};
    const auto out = s.E.double_field_sum(st);
    EXPECT_EQ(out.factor, 3u);  // 2^3 = 8 = 3 mod 5
    EXPECT_EQ(out.state.vector, s.M.scale(s.E.closed_form_sum(1, 2), 3));
  }
}

TEST(Engine, LadderStepFromFirstRoot) {
  Stack s(2, 1, 3, 3);
  LadderState st{1, 1, s.E.closed_form_sum(1, 1), 1};
  const auto out = s.E.ladder_step(st);
  EXPECT_EQ(out.state.i, 2u);
  EXPECT_EQ(out.state.b, 2u);
  EXPECT_EQ(out.torus_count, 3u);  // q^b + 1
  EXPECT_EQ(out.state.vector, nested_X_sum(s, 2, 2));
  const StVector coords = s.M.to_steinberg_coords(out.state.vector);
  EXPECT_EQ(coords.size(), 16u);
  for (const auto& [_, c] : coords.terms) EXPECT_EQ(c, 1u);
}

TEST(Engine, ExtractRecoversEta) {
  {
    Stack s(3, 1, 2, 2);
    const auto out = s.E.extract_eta({1, 1, s.E.closed_form_sum(1, 1), 1});
    EXPECT_EQ(out.vector, s.M.eta());
    EXPECT_EQ(out.torus_count, 4u);
  }
  {
    Stack s(2, 1, 3, 5);
    const auto out = s.E.extract_eta({3, 4, s.M.scale(s.E.closed_form_sum(3, 4), 2), 2});
    EXPECT_EQ(out.vector, s.M.scale(s.M.eta(), 2));
    EXPECT_EQ(out.torus_count, 17u);
  }
}

TEST(Engine, ReachEtaShortCircuits) {
  Stack s(3, 1, 2, 5);
  StVector v;
  v.terms.emplace(UCoords{s.T.zero()}, 3);
  const auto cert = s.E.reach_eta(v);
  EXPECT_TRUE(cert.steps.empty());
  EXPECT_EQ(cert.claimed_scalar, 3u);
  EXPECT_TRUE(s.E.verify_certificate(cert, v));
  EXPECT_THROW(s.E.reach_eta(StVector{}), ValidationError);
}

// Every vector of St_1 reaches eta, including those in the proper submodule.
TEST(Engine, ReachEtaExhaustiveSL2F3Mod2) {
  Stack s(3, 1, 2, 2);
  const auto vectors = s.E.all_nonzero_vectors(1);
  ASSERT_EQ(vectors.size(), 7u);
  const auto gens = s.G.generators(1);
  bool proper_needs_level2 = false;
  for (const auto& v : vectors) {
    const auto cert = s.E.reach_eta(v);
    EXPECT_TRUE(s.E.verify_certificate(cert, v));
    EXPECT_NE(cert.claimed_scalar, 0u);
    EXPECT_LE(cert.max_level, 2u);
    const auto dim = s.E.spin(s.M.from_steinberg_coords(v), gens).dim;
    if (dim < 3) {
      EXPECT_GE(cert.max_level, 2u);
      proper_needs_level2 = true;
    }
  }
  EXPECT_TRUE(proper_needs_level2);
}

TEST(Engine, ReachEtaRandomSL3F2) {
  Stack s(2, 1, 3, 3);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 5; ++t) {
    const StVector v = s.E.random_vector(1, rng);
    const auto cert = s.E.reach_eta(v);
    EXPECT_TRUE(s.E.verify_certificate(cert, v));
    EXPECT_LE(cert.max_level, 8u);
  }
}

TEST(Engine, ReachEtaAtHigherLevel) {
  Stack s(3, 1, 2, 5);
  std::mt19937_64 rng(9);
  const StVector v = s.E.random_vector(2, rng);
  const auto cert = s.E.reach_eta(v);
  EXPECT_EQ(cert.a, s.M.level_of(v));
  EXPECT_TRUE(s.E.verify_certificate(cert, v));
  EXPECT_LE(cert.max_level, 2 * cert.a);
}

TEST(Engine, TamperedCertificatesFail) {
  Stack s(3, 1, 2, 5);
  StVector v;
  v.terms.emplace(UCoords{s.T.one()}, 2);
  const auto cert = s.E.reach_eta(v);
  ASSERT_TRUE(s.E.verify_certificate(cert, v));

  auto bad_scalar = cert;
  bad_scalar.claimed_scalar = (cert.claimed_scalar + 1) % 5;
  EXPECT_FALSE(s.E.verify_certificate(bad_scalar, v));

  // The U-average only sees the coefficient at the translated point, so a
  // replay against v' fails exactly when that coefficient changes.
  StVector other;
  other.terms.emplace(UCoords{s.T.one()}, 3);
  EXPECT_FALSE(s.E.verify_certificate(cert, other));
  StVector extra = v;
  extra.terms.emplace(UCoords{s.T.from_int(2)}, 1);
  EXPECT_TRUE(s.E.verify_certificate(cert, extra));

  auto bad_term = cert;
  bad_term.steps.back().terms.front().second = (bad_term.steps.back().terms.front().second + 1) % 5;
  EXPECT_FALSE(s.E.verify_certificate(bad_term, v));

  auto not_special = cert;
  auto raw = not_special.steps.front().terms.front().first.raw();
  raw[0] = 2;
  not_special.steps.front().terms.front().first = GroupElement(2, 1, raw);
  EXPECT_FALSE(s.E.verify_certificate(not_special, v));
}

TEST(Engine, CertificateTextRoundtrip) {
  Stack s(2, 1, 3, 3);
  std::mt19937_64 rng(4);
  const StVector v = s.E.random_vector(1, rng);
  const auto cert = s.E.reach_eta(v);
  const std::string text = write_certificate(cert, s.T);
  EXPECT_EQ(text.rfind("steinberg-certificate 1\nn 3\nq 2^1\na 1\nell 3\nw0 1 2 1\npoly 1 ", 0), 0u);
  const auto back = read_certificate(text, s.T);
  EXPECT_EQ(write_certificate(back, s.T), text);
  EXPECT_EQ(back.input, v);
  EXPECT_TRUE(s.E.verify_certificate(back, back.input));

  FieldTower other(2, 2);
  EXPECT_THROW(read_certificate(text, other), ValidationError);
  std::string corrupted = text;
  corrupted.replace(corrupted.find("poly 2 "), 9, "poly 2 0 ");
  EXPECT_THROW(read_certificate(corrupted, s.T), ValidationError);
}

TEST(Engine, SpinDimensions) {
  Stack s(3, 1, 2, 2);
  const auto gens = s.G.generators(1);
  EXPECT_EQ(s.E.spin(s.M.eta(), gens).dim, 3u);
  EXPECT_EQ(s.E.spin(MVector{}, gens).dim, 0u);
  // The sum of all z eta spans a trivial submodule mod 2.
  StVector all;
  for (const auto& c : s.T.enumerate_level(1)) all.terms.emplace(UCoords{c}, 1);
  const auto res = s.E.spin(s.M.from_steinberg_coords(all), gens);
  EXPECT_EQ(res.dim, 1u);
  for (const auto& g : gens) EXPECT_EQ(s.M.act(g, s.M.from_steinberg_coords(all)), s.M.from_steinberg_coords(all));
}

// Spinner agrees with a closure computed through SparseEchelon and act().
TEST(Engine, SpinnerMatchesEchelonClosure) {
  Stack s(3, 1, 2, 2);
  const auto gens = s.G.generators(1);
  for (const auto& v : s.E.all_nonzero_vectors(1)) {
    SparseEchelon ech(s.M);
    std::vector<MVector> queue{s.M.from_steinberg_coords(v)};
    ech.insert(queue.back());
    while (!queue.empty()) {
      const MVector w = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        MVector image = s.M.act(g, w);
        if (ech.insert(image)) queue.push_back(std::move(image));
      }
    }
    EXPECT_EQ(s.E.spin(s.M.from_steinberg_coords(v), gens).dim, ech.dim());
  }
}

TEST(Engine, FiniteReports) {
  {
    Stack s(3, 1, 2, 2);
    const auto rep = s.E.finite_steinberg_report(1);
    EXPECT_EQ(rep.dim, 3u);
    EXPECT_TRUE(rep.certified);
    EXPECT_TRUE(rep.reducible);
    EXPECT_FALSE(rep.irreducible);
    EXPECT_EQ(rep.vectors_covered, 7u);
    for (auto d : rep.proper_dims) EXPECT_TRUE(d == 1 || d == 2);
    EXPECT_EQ(rep.cosets, 4u);
    EXPECT_EQ(rep.eta_spin_dim, 3u);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(s.E.spin(s.M.from_steinberg_coords(*rep.witness), s.G.generators(1)).dim, rep.witness_dim);
  }
  {
    Stack s(3, 1, 2, 5);
    const auto rep = s.E.finite_steinberg_report(1);
    EXPECT_TRUE(rep.certified);
    EXPECT_EQ(rep.vectors_covered, 124u);
  }
  {
    Stack s(2, 1, 3, 7);
    const auto rep = s.E.finite_steinberg_report(1, 1);
    EXPECT_EQ(rep.dim, 8u);
    EXPECT_FALSE(rep.certified);
    EXPECT_EQ(rep.spins, 64u + 8u);
    EXPECT_EQ(rep.verdict().find("probabl"), 0u);
  }
}
