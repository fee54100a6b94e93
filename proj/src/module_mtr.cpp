#include "steinberg/module_mtr.hpp"

#include <numeric>
#include <sstream>

#include "steinberg/errors.hpp"

namespace steinberg {

// ---------------------------------------------------------------------------
// SparseEchelon

MVector SparseEchelon::reduce(MVector v) const {
  const CoeffField& k = M_.coeffs();
  auto it = v.terms.begin();
  while (it != v.terms.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const CosetLabel pivot = it->first;
    M_.axpy(v, k.neg(it->second), row->second);
    it = v.terms.upper_bound(pivot);
  }
  return v;
}

bool SparseEchelon::insert(MVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Scalar lead_inv = M_.coeffs().inv(v.terms.begin()->second);
  v = M_.scale(v, lead_inv);
  const CosetLabel pivot = v.terms.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<MVector> SparseEchelon::basis() const {
  std::vector<MVector> out;
  for (const auto& [_, row] : rows_) out.push_back(row);
  return out;
}

// ---------------------------------------------------------------------------
// InducedModule

InducedModule::InducedModule(const SLGroup& group, CoeffField k) : group_(group), k_(k) {}

CosetLabel InducedModule::coset_label(const GroupElement& g) const {
  auto [perm, left] = group_.cell_form(g);
  CosetLabel label;
  const auto pos = cell_positions(perm);
  label.coords.reserve(pos.size());
  for (const auto& [i, j] : pos) label.coords.push_back(tower().normalize(left.entry(i, j)));
  label.perm = std::move(perm);
  return label;
}

std::uint32_t InducedModule::label_level(const CosetLabel& label) const {
  std::uint32_t L = 1;
  for (const auto& c : label.coords) L = std::lcm(L, c.level);
  return L;
}

GroupElement InducedModule::representative(const CosetLabel& label) const {
  const std::uint32_t n = group_.n();
  const std::uint32_t L = label_level(label);
  std::vector<std::uint32_t> raw(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) raw[i * n + i] = 1;
  const auto pos = cell_positions(label.perm);
  for (std::size_t t = 0; t < pos.size(); ++t)
    raw[pos[t].first * n + pos[t].second] = tower().embed_raw(label.coords[t].value, label.coords[t].level, L);
  return group_.mul(group_.make(L, std::move(raw)), group_.weyl_rep(WeylElement::from_perm(label.perm)));
}

MVector InducedModule::basis_vector(const CosetLabel& label, Scalar c) const {
  MVector v;
  add_term(v, label, c);
  return v;
}

void InducedModule::add_term(MVector& v, const CosetLabel& label, Scalar c) const {
  c %= k_.ell();
  if (c == 0) return;
  auto [it, inserted] = v.terms.try_emplace(label, c);
  if (inserted) return;
  it->second = k_.add(it->second, c);
  if (it->second == 0) v.terms.erase(it);
}

void InducedModule::axpy(MVector& v, Scalar c, const MVector& w) const {
  if (c % k_.ell() == 0) return;
  for (const auto& [label, x] : w.terms) add_term(v, label, k_.mul(c, x));
}

MVector InducedModule::add(const MVector& v, const MVector& w) const {
  MVector out = v;
  axpy(out, 1, w);
  return out;
}

MVector InducedModule::sub(const MVector& v, const MVector& w) const {
  MVector out = v;
  axpy(out, k_.neg(1), w);
  return out;
}

MVector InducedModule::scale(const MVector& v, Scalar c) const {
  MVector out;
  axpy(out, c, v);
  return out;
}

MVector InducedModule::act(const GroupElement& g, const MVector& v) const {
  MVector out;
  for (const auto& [label, c] : v.terms) add_term(out, coset_label(group_.mul(g, representative(label))), c);
  return out;
}

MVector InducedModule::act(const GroupAlgebraElement& x, const MVector& v) const {
  std::vector<std::pair<GroupElement, Scalar>> reps;
  reps.reserve(v.size());
  for (const auto& [label, c] : v.terms) reps.emplace_back(representative(label), c);
  MVector out;
  for (const auto& [g, s] : x)
    for (const auto& [rep, c] : reps) add_term(out, coset_label(group_.mul(g, rep)), k_.mul(s, c));
  return out;
}

MVector InducedModule::group_sum_apply(std::span<const GroupElement> S, const MVector& v) const {
  // Resolve each label's representative once; it is reused |S| times.
  std::vector<std::pair<GroupElement, Scalar>> reps;
  reps.reserve(v.size());
  for (const auto& [label, c] : v.terms) reps.emplace_back(representative(label), c);
  MVector out;
  for (const auto& x : S)
    for (const auto& [rep, c] : reps) add_term(out, coset_label(group_.mul(x, rep)), c);
  return out;
}

MVector InducedModule::eta() const {
  std::vector<GroupElement> reps;
  for (const auto& w : group_.weyl_group()) reps.push_back(group_.weyl_rep(w));
  return eta_from(reps, group_.weyl_group());
}

MVector InducedModule::eta_from(std::span<const GroupElement> reps, std::span<const WeylElement> ws) const {
  MVector v;
  for (std::size_t t = 0; t < reps.size(); ++t) add_term(v, coset_label(reps[t]), k_.sign(ws[t].length()));
  return v;
}

MVector InducedModule::translates_of_eta(std::span<const GroupElement> S) const {
  const MVector e = eta();
  MVector out;
  for (const auto& x : S) axpy(out, 1, act(x, e));
  return out;
}

StVector InducedModule::to_steinberg_coords(const MVector& v) const {
  const RootDatum& R = group_.roots();
  const std::uint32_t n = group_.n();
  const auto big = cell_positions(R.w0.perm);
  const Scalar sign = k_.sign(R.r);

  StVector out;
  for (const auto& [label, c] : v.terms) {
    if (label.perm != R.w0.perm) continue;
    const std::uint32_t L = label_level(label);
    std::vector<std::uint32_t> raw(n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) raw[i * n + i] = 1;
    for (std::size_t t = 0; t < big.size(); ++t)
      raw[big[t].first * n + big[t].second] = tower().embed_raw(label.coords[t].value, label.coords[t].level, L);
    const GroupElement z = group_.make(L, std::move(raw));
    out.terms.emplace(group_.unipotent_coords(z), k_.mul(sign, c));
  }
  if (from_steinberg_coords(out) != v) throw NotInSteinberg("vector is not in the Steinberg submodule span{z eta}");
  return out;
}

MVector InducedModule::from_steinberg_coords(const StVector& v) const {
  const MVector e = eta();
  MVector out;
  for (const auto& [coords, c] : v.terms) axpy(out, c, act(group_.unipotent_from_coords(coords), e));
  return out;
}

Scalar InducedModule::coeff_sum(const StVector& v) const {
  Scalar s = 0;
  for (const auto& [_, c] : v.terms) s = k_.add(s, c);
  return s;
}

std::uint32_t InducedModule::level_of(const StVector& v) const {
  std::uint32_t L = 1;
  for (const auto& [coords, _] : v.terms)
    for (const auto& c : coords) L = std::lcm(L, c.level);
  return L;
}

std::size_t InducedModule::rank(std::span<const MVector> family) const {
  SparseEchelon ech(*this);
  for (const auto& v : family) ech.insert(v);
  return ech.dim();
}

std::string InducedModule::format_label(const CosetLabel& label) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t t = 0; t < label.perm.size(); ++t) os << (t ? "," : "") << label.perm[t] + 1;
  os << "|";
  for (std::size_t t = 0; t < label.coords.size(); ++t) os << (t ? "," : "") << tower().format(label.coords[t]);
  os << "]";
  return os.str();
}

std::string InducedModule::format_coords(const UCoords& c) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t t = 0; t < c.size(); ++t) os << (t ? "," : "") << tower().format(c[t]);
  os << ")";
  return os.str();
}

std::string InducedModule::serialize(const MVector& v) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [label, c] : v.terms) {
    os << (first ? "" : " ") << format_label(label) << "=" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string InducedModule::serialize(const StVector& v) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [coords, c] : v.terms) {
    os << (first ? "" : " ") << format_coords(coords) << "=" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace steinberg
