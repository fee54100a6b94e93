#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/module_mtr.hpp"

using namespace steinberg;

namespace {

bool in_upper_triangular(const GroupElement& g) {
  for (std::uint32_t i = 0; i < g.n(); ++i)
    for (std::uint32_t j = 0; j < i; ++j)
      if (g.at(i, j) != 0) return false;
  return true;
}

// Dense coordinates of a family of vectors over the union of their supports.
std::vector<std::vector<std::int64_t>> densify(const std::vector<MVector>& vs) {
  std::map<CosetLabel, std::size_t> index;
  for (const auto& v : vs)
    for (const auto& [label, _] : v.terms) index.try_emplace(label, index.size());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& v : vs) {
    std::vector<std::int64_t> row(index.size(), 0);
    for (const auto& [label, c] : v.terms) row[index[label]] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

StVector random_st(const SLGroup& G, std::uint32_t a, std::uint32_t ell, std::mt19937_64& rng) {
  StVector v;
  for (const auto& u : G.enumerate_U(a)) {
    const Scalar c = static_cast<Scalar>(rng() % ell);
    if (c) v.terms.emplace(u.coords, c);
  }
  return v;
}

}  // namespace

// Labels agree exactly when g^{-1} h lies in B.
TEST(InducedModule, LabelsPartitionCosets) {
  for (auto [n, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}}) {
    FieldTower T(p, 1);
    SLGroup G(T, n);
    InducedModule M(G, CoeffField(p == 2 ? 3 : 2));
    const auto elems = G.enumerate_group(1);
    std::vector<CosetLabel> labels;
    for (const auto& g : elems) labels.push_back(M.coset_label(g));
    std::size_t classes = 0;
    std::vector<bool> assigned(elems.size(), false);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const GroupElement gi = G.inverse(elems[i]);
      for (std::size_t j = 0; j < elems.size(); ++j)
        ASSERT_EQ(in_upper_triangular(G.mul(gi, elems[j])), labels[i] == labels[j]);
      if (assigned[i]) continue;
      ++classes;
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (labels[j] == labels[i]) assigned[j] = true;
    }
    EXPECT_EQ(classes, n == 2 ? 4u : 21u);
  }
}

TEST(InducedModule, ActionIsAGroupAction) {
  FieldTower T(2, 1);
  SLGroup G(T, 3);
  InducedModule M(G, CoeffField(5));
  const auto elems = G.enumerate_group(1);
  std::mt19937_64 rng(11);
  const MVector e = M.eta();
  for (int t = 0; t < 50; ++t) {
    const auto& g = elems[rng() % elems.size()];
    const auto& h = elems[rng() % elems.size()];
    EXPECT_EQ(M.act(g, M.act(h, e)), M.act(G.mul(g, h), e));
  }
  // Elements from a larger level act on level-1 vectors too.
  const auto x = G.eps({0, 2}, T.generator(3));
  EXPECT_EQ(M.act(G.inverse(x), M.act(x, e)), e);
}

TEST(InducedModule, EtaAlternatesAndIsTorusFixed) {
  for (auto [n, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {4, 3}}) {
    FieldTower T(p, 1);
    SLGroup G(T, n);
    for (std::uint32_t ell : {2u, 3u, 5u}) {
      if (ell == p) continue;
      InducedModule M(G, CoeffField(ell));
      const MVector e = M.eta();
      EXPECT_EQ(e.size(), G.weyl_group().size());
      const MVector minus = M.scale(e, ell - 1);
      for (std::uint32_t i = 0; i + 1 < n; ++i) EXPECT_EQ(M.act(G.simple_rep(i), e), minus);
      for (const auto& t : G.enumerate_torus(1)) EXPECT_EQ(M.act(t, e), e);
    }
  }
}

// Any representatives n_w t_w of the Weyl elements give the same eta.
TEST(InducedModule, EtaIndependentOfRepresentatives) {
  FieldTower T(5, 1);
  SLGroup G(T, 3);
  InducedModule M(G, CoeffField(3));
  const auto torus = G.enumerate_torus(1);
  std::mt19937_64 rng(3);
  std::vector<GroupElement> reps;
  for (const auto& w : G.weyl_group()) reps.push_back(G.mul(G.weyl_rep(w), torus[rng() % torus.size()]));
  EXPECT_EQ(M.eta_from(reps, G.weyl_group()), M.eta());
}

TEST(InducedModule, SteinbergBasisRank) {
  for (auto [n, p, a] : std::vector<std::array<std::uint32_t, 3>>{{2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 2, 2}}) {
    FieldTower T(p, 1);
    SLGroup G(T, n);
    const std::uint32_t ell = p == 2 ? 3 : 2;
    InducedModule M(G, CoeffField(ell));
    std::vector<MVector> family;
    for (const auto& u : G.enumerate_U(a)) family.push_back(M.act(u.g, M.eta()));
    const std::size_t want = family.size();
    EXPECT_EQ(oracle::dense_rank(densify(family), ell), want);
    EXPECT_EQ(M.rank(family), want);
  }
}

TEST(InducedModule, SteinbergCoordinatesRoundtrip) {
  FieldTower T(3, 1);
  SLGroup G(T, 2);
  InducedModule M(G, CoeffField(5));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const StVector v = random_st(G, 2, 5, rng);
    EXPECT_EQ(M.to_steinberg_coords(M.from_steinberg_coords(v)), v);
  }
}

// Readout agrees with solving for the coefficients by dense elimination.
TEST(InducedModule, SteinbergCoordinatesMatchLinearSolve) {
  FieldTower T(2, 1);
  SLGroup G(T, 3);
  const std::uint32_t ell = 7;
  InducedModule M(G, CoeffField(ell));
  const auto us = G.enumerate_U(1);
  std::vector<MVector> basis;
  for (const auto& u : us) basis.push_back(M.act(u.g, M.eta()));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const StVector v = random_st(G, 1, ell, rng);
    std::vector<MVector> all = basis;
    all.push_back(M.from_steinberg_coords(v));
    auto dense = densify(all);
    const auto target = dense.back();
    dense.pop_back();
    std::vector<std::int64_t> x;
    ASSERT_TRUE(oracle::dense_solve(dense, target, ell, x));
    const StVector read = M.to_steinberg_coords(all.back());
    for (std::size_t j = 0; j < us.size(); ++j) {
      auto it = read.terms.find(us[j].coords);
      EXPECT_EQ(it == read.terms.end() ? 0 : static_cast<std::int64_t>(it->second), x[j]);
    }
  }
}

TEST(InducedModule, VectorsOutsideSteinbergAreRejected) {
  FieldTower T(3, 1);
  SLGroup G(T, 2);
  InducedModule M(G, CoeffField(2));
  const MVector b = M.basis_vector(M.coset_label(G.identity()));
  EXPECT_THROW(M.to_steinberg_coords(b), NotInSteinberg);
}

TEST(InducedModule, CanonicalSerialization) {
  FieldTower T(3, 1);
  SLGroup G(T, 2);
  InducedModule M(G, CoeffField(5));
  // eta = B - n B
  EXPECT_EQ(M.serialize(M.eta()), "{[1,2|]=1 [2,1|1:0]=4}");
  StVector v;
  v.terms.emplace(UCoords{T.from_int(2)}, 3);
  EXPECT_EQ(M.serialize(v), "{(1:2)=3}");
}

TEST(SparseEchelon, ReduceAndInsert) {
  FieldTower T(2, 1);
  SLGroup G(T, 2);
  InducedModule M(G, CoeffField(3));
  SparseEchelon ech(M);
  const MVector e = M.eta();
  EXPECT_TRUE(ech.insert(e));
  EXPECT_FALSE(ech.insert(M.scale(e, 2)));
  EXPECT_TRUE(ech.reduce(M.scale(e, 2)).empty());
  EXPECT_TRUE(ech.insert(M.act(G.eps({0, 1}, T.one()), e)));
  EXPECT_EQ(ech.dim(), 2u);
}
