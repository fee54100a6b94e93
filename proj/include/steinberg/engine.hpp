#pragma once

// Constructive irreducibility of the Steinberg module St = kU eta.
//
// Starting from any nonzero v in St, reach_eta builds an explicit sequence of
// group-algebra multipliers carrying v to c*eta with c != 0:
//
//   1. lift:    translate so the e-coefficient is nonzero, apply n = n_{w0},
//               then sum over U_{q^a}. The coefficient-sum vanishing of n u eta
//               (u != e) gives A * sum_{x in U_{q^a}} x eta.
//   2. ladder:  from sum_{x in X_{i,q^b}} x eta to sum_{x in X_{i+1,q^{2b}}} x eta
//               using torus elements t_j with beta_i(t_j) running over coset
//               representatives of F_{q^b}^* in F_{q^{2b}}^*, and the identity
//                 sum_j t_j sum_{x in U_{beta_i,q^b}} x eta
//                   = q^b eta + sum_{x in U_{beta_i,q^{2b}}} x eta.
//   3. extract: the same identity at i = r isolates eta; q is invertible in k.
//
// Every intermediate vector is compared with an independently computed closed
// form; a mismatch throws ConsistencyError.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/module_mtr.hpp"

namespace steinberg {

struct Multiplier {
  std::string role;
  GroupAlgebraElement terms;  // sorted by element, merged, no zero scalars
};

struct Certificate {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::uint32_t a = 1;
  std::uint32_t ell = 0;
  std::vector<std::uint32_t> w0_word;
  StVector input;
  std::vector<Multiplier> steps;
  Scalar claimed_scalar = 0;
  /// Highest level b for which root subgroups U_{beta,q^b} or root values of the
  /// ladder appear; bounded by a * 2^r.
  std::uint32_t max_level = 1;
  /// Highest level of any multiplier matrix entry. Equals max_level except for
  /// n = 2 with q odd, where torus elements need square roots one level up.
  std::uint32_t max_entry_level = 1;
};

struct CoeffSumCase {
  UCoords u;
  Scalar coeff_sum = 0;
  Scalar expected = 0;
  bool support_in_level = true;
  bool pass = true;
};

struct CoeffSumReport {
  std::uint32_t a = 1;
  std::vector<CoeffSumCase> cases;
  std::size_t passed = 0;
  bool pass = true;
  std::optional<UCoords> counterexample;
};

/// vector == scalar * sum_{x in X_{i,q^b}} x eta
struct LadderState {
  std::uint32_t i = 1;
  std::uint32_t b = 1;
  MVector vector;
  Scalar scalar = 1;
};

struct LiftResult {
  LadderState state;
  Scalar A = 0;
  UCoords translation;  // coordinates of y, the support element moved to e
  std::vector<Multiplier> steps;
};

struct DoubleResult {
  LadderState state;
  Scalar factor = 1;  // q^{b(r-i+1)} mod l
  Multiplier step;
};

struct StepResult {
  LadderState state;
  std::size_t torus_count = 0;
  std::vector<Multiplier> steps;
};

struct ExtractResult {
  Scalar scalar = 0;  // the result is scalar * eta
  MVector vector;
  std::size_t torus_count = 0;
  std::vector<Multiplier> steps;
};

struct SpinResult {
  std::size_t dim = 0;
  std::vector<MVector> basis;
};

/// Precomputed permutation action of a generating set on the finitely many
/// cosets it reaches, for repeated spinning.
class Spinner {
 public:
  Spinner(const InducedModule& M, std::vector<GroupElement> gens, const std::vector<CosetLabel>& seeds);

  SpinResult spin(const MVector& v, bool want_basis = true) const;
  std::size_t orbit_size() const { return labels_.size(); }

 private:
  const InducedModule& M_;
  std::vector<CosetLabel> labels_;
  std::map<CosetLabel, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> perms_;  // perms_[g][idx] = image index
};

struct SteinbergReport {
  std::uint32_t a = 1;
  std::uint64_t dim = 0;            // q^{a r}
  std::size_t basis_rank = 0;       // rank of {z eta : z in U_{q^a}}
  std::size_t cosets = 0;           // |G_{q^a} / B_{q^a}|
  std::size_t eta_spin_dim = 0;     // dim k G_{q^a} eta
  bool certified = false;           // exhaustive over all nonzero vectors
  bool reducible = false;           // a proper nonzero submodule was exhibited
  bool irreducible = false;         // only meaningful when certified
  std::set<std::size_t> proper_dims;
  std::uint64_t vectors_covered = 0;
  std::uint64_t spins = 0;
  std::optional<StVector> witness;  // spins to a proper submodule
  std::size_t witness_dim = 0;

  std::string verdict() const;
};

class SteinbergEngine {
 public:
  /// Throws CharacteristicClash when l == p.
  explicit SteinbergEngine(const InducedModule& M);

  const InducedModule& module() const { return M_; }
  const SLGroup& group() const { return M_.group(); }

  CoeffSumReport check_coefficient_sums(std::uint32_t a) const;

  LiftResult lift_to_U_sum(const StVector& v, std::uint32_t a = 0) const;
  DoubleResult double_field_sum(const LadderState& s) const;
  StepResult ladder_step(const LadderState& s) const;
  ExtractResult extract_eta(const LadderState& s) const;
  Certificate reach_eta(const StVector& v) const;
  bool verify_certificate(const Certificate& cert, const StVector& v) const;

  SpinResult spin(const MVector& v, const std::vector<GroupElement>& gens) const;
  SteinbergReport finite_steinberg_report(std::uint32_t a, std::uint64_t seed = 0) const;

  /// sum_{x in X_{i,q^b}} x eta, built term by term from eta.
  MVector closed_form_sum(std::uint32_t i, std::uint32_t b) const;
  /// Both sides of the torus identity for beta_i at level b.
  std::pair<MVector, MVector> core_identity(std::uint32_t i, std::uint32_t b) const;
  /// (q^b)^e mod l
  Scalar q_power(std::uint64_t b) const;

  std::vector<StVector> all_nonzero_vectors(std::uint32_t a) const;
  StVector random_vector(std::uint32_t a, std::mt19937_64& rng) const;

 private:
  const std::vector<GroupElement>& X(std::uint32_t i, std::uint32_t b) const;
  const std::vector<UnipotentElement>& U_coords(std::uint32_t a) const;
  std::vector<GroupElement> torus_elements(std::uint32_t i, std::uint32_t b) const;

  struct Combination {
    Multiplier step;
    MVector vector;
    std::size_t torus_count = 0;
  };
  Combination torus_combination(const LadderState& s) const;

  const InducedModule& M_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<std::vector<GroupElement>>> x_cache_;
  mutable std::map<std::uint32_t, std::unique_ptr<std::vector<UnipotentElement>>> u_cache_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<MVector>> closed_cache_;
};

/// Sorts and merges the terms, dropping zero scalars.
Multiplier make_multiplier(std::string role, const GroupAlgebraElement& terms, const CoeffField& k);

}  // namespace steinberg
