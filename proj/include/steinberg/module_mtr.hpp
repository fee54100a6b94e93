#pragma once

// The induced module M(tr) = kG (x)_{kB} k_tr with k = GF(l).
//
// A basis vector is a coset gB, named by its canonical Bruhat label: the cell
// w together with the coordinates of the left factor u' in gB = u' n_w B.
// Vectors are finite sparse combinations of labels; St = kU eta sits inside
// with basis {z eta : z in U}, and StVector stores coefficients in that basis
// keyed by the root coordinates of z.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/fields.hpp"
#include "steinberg/group_sl.hpp"

namespace steinberg {

struct CosetLabel {
  std::vector<std::uint32_t> perm;
  std::vector<FieldElement> coords;  // normalized, in cell_positions(perm) order

  auto operator<=>(const CosetLabel&) const = default;
};

/// Root coordinates (c_r, ..., c_1) of an element of U, each normalized.
using UCoords = std::vector<FieldElement>;

struct MVector {
  std::map<CosetLabel, Scalar> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  bool operator==(const MVector&) const = default;
};

struct StVector {
  std::map<UCoords, Scalar> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  bool operator==(const StVector&) const = default;
};

/// A finite element sum_g c_g g of the group algebra kG.
using GroupAlgebraElement = std::vector<std::pair<GroupElement, Scalar>>;

class InducedModule;

/// Row echelon basis over GF(l) with pivots at the smallest label of each row.
class SparseEchelon {
 public:
  explicit SparseEchelon(const InducedModule& M) : M_(M) {}

  /// Reduces v against the basis; adds the remainder if nonzero. Returns true
  /// when v was independent of the current span.
  bool insert(MVector v);
  MVector reduce(MVector v) const;
  std::size_t dim() const { return rows_.size(); }
  std::vector<MVector> basis() const;

 private:
  const InducedModule& M_;
  std::map<CosetLabel, MVector> rows_;  // pivot label -> row with pivot coefficient 1
};

class InducedModule {
 public:
  InducedModule(const SLGroup& group, CoeffField k);

  const SLGroup& group() const { return group_; }
  const FieldTower& tower() const { return group_.tower(); }
  const CoeffField& coeffs() const { return k_; }

  CosetLabel coset_label(const GroupElement& g) const;
  /// u' n_w for the label.
  GroupElement representative(const CosetLabel& label) const;
  std::uint32_t label_level(const CosetLabel& label) const;

  MVector basis_vector(const CosetLabel& label, Scalar c = 1) const;
  void add_term(MVector& v, const CosetLabel& label, Scalar c) const;
  /// v += c * w
  void axpy(MVector& v, Scalar c, const MVector& w) const;
  MVector add(const MVector& v, const MVector& w) const;
  MVector sub(const MVector& v, const MVector& w) const;
  MVector scale(const MVector& v, Scalar c) const;

  MVector act(const GroupElement& g, const MVector& v) const;
  MVector act(const GroupAlgebraElement& x, const MVector& v) const;
  /// sum_{x in S} x.v
  MVector group_sum_apply(std::span<const GroupElement> S, const MVector& v) const;

  /// sum_w (-1)^{l(w)} n_w B
  MVector eta() const;
  /// eta built from an arbitrary choice of Weyl representatives.
  MVector eta_from(std::span<const GroupElement> reps, std::span<const WeylElement> ws) const;
  /// sum_{x in S} x eta, computed term by term.
  MVector translates_of_eta(std::span<const GroupElement> S) const;

  /// Reads c_z off the big-cell labels z n_{w0} B and re-synthesizes to check.
  /// Throws NotInSteinberg if v is not in span{z eta}.
  StVector to_steinberg_coords(const MVector& v) const;
  MVector from_steinberg_coords(const StVector& v) const;
  Scalar coeff_sum(const StVector& v) const;
  /// lcm of the levels of all coordinates in the support (1 when empty).
  std::uint32_t level_of(const StVector& v) const;

  /// Rank over GF(l) of a family of vectors.
  std::size_t rank(std::span<const MVector> family) const;

  std::string serialize(const MVector& v) const;
  std::string serialize(const StVector& v) const;
  std::string format_label(const CosetLabel& label) const;
  std::string format_coords(const UCoords& c) const;

 private:
  const SLGroup& group_;
  CoeffField k_;
};

}  // namespace steinberg
