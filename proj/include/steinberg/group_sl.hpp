#pragma once

// Chevalley data for G = SL_n over the tower: roots of type A_{n-1}, the Weyl
// group as permutations, root subgroups, Weyl representatives, torus elements,
// the Bruhat decomposition and the unipotent enumerations U_{q^a}, X_{i,q^b}.
//
// Indices are 0-based internally. Textual forms (root names, Weyl words) are
// 1-based to match the usual notation s_1, ..., s_{n-1} and e_k - e_m.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "steinberg/fields.hpp"

namespace steinberg {

/// The root e_k - e_m. Positive when k < m.
struct Root {
  std::uint32_t k = 0;
  std::uint32_t m = 1;

  bool positive() const { return k < m; }
  std::uint32_t height() const { return k < m ? m - k : k - m; }
  std::string name() const;
  auto operator<=>(const Root&) const = default;
};

/// A Weyl group element of S_n. perm[j] is the image of j; the representative
/// n_w sends e_j to +-e_{perm[j]}.
struct WeylElement {
  std::vector<std::uint32_t> perm;
  std::vector<std::uint32_t> word;  // reduced word, simple indices, product left to right

  static WeylElement identity(std::uint32_t n);
  static WeylElement from_word(std::uint32_t n, std::span<const std::uint32_t> word);
  /// Reduced word built by peeling off the smallest right descent.
  static WeylElement from_perm(std::vector<std::uint32_t> perm);

  std::size_t length() const { return word.size(); }
  std::size_t inversions() const;
  Root apply(Root r) const { return {perm[r.k], perm[r.m]}; }
  std::string word_string() const;
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

/// Type A_{n-1} data with the fixed reduced word s_1 (s_2 s_1) (s_3 s_2 s_1) ...
/// for w0, written as s_{alpha_r} ... s_{alpha_1}.
struct RootDatum {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::vector<Root> positive_roots;
  std::vector<std::uint32_t> w0_word;  // left to right
  std::vector<std::uint32_t> alpha;    // alpha[j-1] = simple index of alpha_j
  std::vector<Root> beta;              // beta[j-1] = beta_j = s_{alpha_1}...s_{alpha_{j-1}}(alpha_j)
  WeylElement w0;

  explicit RootDatum(std::uint32_t n);
  std::string w0_word_string() const;
};

/// A determinant-one matrix with all entries stored at one tower level. Group
/// operations keep that level minimal, so equality of representations is
/// equality of matrices.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::uint32_t n, std::uint32_t level, std::vector<std::uint32_t> entries)
      : n_(n), level_(level), entries_(std::move(entries)) {}

  std::uint32_t n() const { return n_; }
  std::uint32_t level() const { return level_; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return entries_[i * n_ + j]; }
  FieldElement entry(std::uint32_t i, std::uint32_t j) const { return {level_, at(i, j)}; }
  const std::vector<std::uint32_t>& raw() const { return entries_; }

  auto operator<=>(const GroupElement&) const = default;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t level_ = 1;
  std::vector<std::uint32_t> entries_;
};

/// g = left * n_w * torus * right with left in the product of the U_beta for
/// the positive beta with w^{-1}(beta) < 0 (canonical for the coset gB),
/// torus diagonal and right upper unipotent.
struct BruhatDecomposition {
  GroupElement left;
  WeylElement w;
  GroupElement torus;
  GroupElement right;
};

/// A unipotent element together with its root coordinates (c_r, ..., c_i)
/// along U_{beta_r} ... U_{beta_i}.
struct UnipotentElement {
  std::vector<FieldElement> coords;
  GroupElement g;
};

/// Matrix positions (row, col) of the free entries of the left Bruhat factor
/// for the cell with permutation perm, sorted row-major. There are l(w) of them.
std::vector<std::pair<std::uint32_t, std::uint32_t>> cell_positions(const std::vector<std::uint32_t>& perm);

class SLGroup {
 public:
  /// n in [2, 6].
  SLGroup(const FieldTower& tower, std::uint32_t n);

  const FieldTower& tower() const { return tower_; }
  const RootDatum& roots() const { return roots_; }
  std::uint32_t n() const { return n_; }

  GroupElement identity() const;
  /// Row-major entries; throws ValidationError if not n*n or det != 1.
  GroupElement from_entries(std::span<const FieldElement> entries) const;
  /// Same check without the determinant test (for building torus/perm data).
  GroupElement make(std::uint32_t level, std::vector<std::uint32_t> entries) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  FieldElement det(const GroupElement& g) const;
  bool is_special(const GroupElement& g) const;
  GroupElement lift(const GroupElement& g, std::uint32_t level) const;

  GroupElement eps(Root root, FieldElement c) const;
  GroupElement simple_rep(std::uint32_t i) const;
  GroupElement weyl_rep(const WeylElement& w) const;
  GroupElement longest_rep() const { return weyl_rep(roots_.w0); }
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }

  GroupElement torus_for_root_value(Root beta, FieldElement c) const;
  /// beta(t) = t_kk / t_mm for diagonal t.
  FieldElement root_value(Root beta, const GroupElement& t) const;
  bool is_diagonal(const GroupElement& g) const;
  bool is_upper_unipotent(const GroupElement& g) const;

  BruhatDecomposition bruhat_decompose(const GroupElement& g) const;
  GroupElement recompose(const BruhatDecomposition& d) const;
  /// Cell of g only (cheaper than a full decomposition).
  WeylElement bruhat_cell(const GroupElement& g) const;
  /// Cell permutation and the canonical left factor, without torus/right parts.
  std::pair<std::vector<std::uint32_t>, GroupElement> cell_form(const GroupElement& g) const;

  /// eps(beta_r, c_r) ... eps(beta_i, c_i) for coords = (c_r, ..., c_i), i 1-based.
  GroupElement unipotent_from_coords(std::span<const FieldElement> coords, std::uint32_t i = 1) const;
  /// Root coordinates (c_r, ..., c_1) of an upper unipotent matrix, normalized.
  std::vector<FieldElement> unipotent_coords(const GroupElement& z) const;

  std::vector<UnipotentElement> enumerate_U(std::uint32_t a) const;
  /// X_{i,q^b} = U_{beta_r,q^b} ... U_{beta_i,q^b}; i is 1-based.
  std::vector<UnipotentElement> enumerate_X(std::uint32_t i, std::uint32_t b) const;
  std::vector<GroupElement> elements_of(const std::vector<UnipotentElement>& us) const;
  std::vector<GroupElement> enumerate_torus(std::uint32_t a) const;
  /// Every element of SL_n(F_{q^a}), cell by cell.
  std::vector<GroupElement> enumerate_group(std::uint32_t a) const;
  /// |SL_n(F_{q^a})| as a double (for threshold decisions only).
  double group_order(std::uint32_t a) const;
  /// Transvections eps(+-alpha, c) for every root and c in a GF(p)-basis of F_{q^a}.
  std::vector<GroupElement> generators(std::uint32_t a) const;

  std::string format(const GroupElement& g) const;

 private:
  GroupElement normalized(std::uint32_t level, std::vector<std::uint32_t> entries) const;

  const FieldTower& tower_;
  std::uint32_t n_;
  RootDatum roots_;
  std::vector<WeylElement> weyl_;
  std::map<std::vector<std::uint32_t>, GroupElement> weyl_reps_;
};

}  // namespace steinberg
