#pragma once

// Executable property checkers. Each is a pure function of its instance and
// returns a CheckReport; a `fails` verdict carries a witness, minimized
// greedily for family-valued checks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "selab/action.hpp"
#include "selab/group.hpp"
#include "selab/report.hpp"
#include "selab/subgroup.hpp"

namespace selab {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct FamilyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Random families drawn when exhaustive enumeration is out of reach.
  std::size_t samples = 1000;
  /// Enumerate every family when the member lattice has at most this many
  /// elements (i.e. at most 2^limit families).
  std::size_t exhaustive_members = 12;
};

/// Preconditions of a decomposition X = K ⋊ B: K normal, K∧B = 0, K∨B = X.
bool is_decomposition(const Subgroup& k, const Subgroup& b);
/// Every decomposition (K, B) of X, in (K, B) canonical order.
std::vector<std::pair<Subgroup, Subgroup>> enumerate_decompositions(const GroupPtr& x,
                                                                    std::size_t bound = kDefaultLatticeBound);

/// K ∧ (U ∨ V) = (K ∧ U) ∨ (K ∧ V) for all U, V ⊇ B. Throws InputError
/// unless (K, B) is a decomposition.
CheckReport check_intersections_binary(const Subgroup& k, const Subgroup& b);
/// K ∧ ⋁U_i = ⋁(K ∧ U_i) over families of subgroups containing B:
/// exhaustive when the filter has ≤ exhaustive_members elements, seeded
/// samples otherwise.
CheckReport check_intersections_family(const Subgroup& k, const Subgroup& b,
                                       const FamilyOptions& opts = {});
/// Same law on caller-chosen families.
CheckReport check_intersections_family(const Subgroup& k, const Subgroup& b,
                                       const std::vector<std::vector<Subgroup>>& families);

/// ⋁ points = A  ⟹  ⋁ kernel parts = κ(X), for one family of subpoints.
CheckReport check_kernel_geometric(const SplitExtension& ext,
                                   std::span<const PointSubobject> family);
/// The same over every family of subpoints (or seeded samples when there
/// are more than opts.exhaustive_members subpoints).
CheckReport check_kernel_geometric_all(const SplitExtension& ext, const FamilyOptions& opts);

/// Every join of normal subgroups is normal (exhaustive via join-closure).
CheckReport check_join_normals_normal(const GroupPtr& x);
/// H normal  ⟺  [H, X] ⊆ H, for every subgroup H.
CheckReport check_higgins_normality(const GroupPtr& x);
/// [⋁N_i, X] = ⋁[N_i, X] for an ascending chain of normal subgroups.
/// Throws InputError when the chain is not ascending or not normal.
CheckReport check_commutator_join(const GroupPtr& x, std::span<const Subgroup> chain);
/// The same over every chain in the normal lattice, or all two-step chains
/// plus seeded maximal chains when there are more than 4096 chains.
CheckReport check_commutator_join_all(const GroupPtr& x, const FamilyOptions& opts = {});
/// [K,[L,M]] ⊆ [M,[K,L]] ∨ [L,[M,K]] over all ordered triples of normal subgroups.
CheckReport check_three_subobjects(const GroupPtr& x);
/// (U ∩ κ(X) ⊆ κ(S))  ⟺  U ⊆ core-point(S), over all subpoints U and all S ≤ X.
CheckReport check_core_adjunction(const SplitExtension& ext);
/// For every s ≤ X: u and v injective, core kernel B-invariant and inside s,
/// every subpoint with kernel part inside κ(s) factors through v.
CheckReport check_core_terminality(const SplitExtension& ext);
/// The three action-core constructions agree on every S ≤ X.
CheckReport check_action_core_routes(const BAction& act);
/// Square S → X over S/N → X/N is a pullback, S/N → X/N is injective and
/// its image has trivial normal core, where N is the normal core of S.
CheckReport check_normal_core_pullback(const Subgroup& s);
/// Whether the conjugation split extension on X × X restricts to one with kernel N.
bool clot_restricts(const Subgroup& n);
/// clot_restricts(N) ⟺ N normal.
CheckReport check_clots(const Subgroup& n);
/// For every S ≤ X: join-of-normals = intersection-of-conjugates, and it is
/// the largest normal subgroup inside S.
CheckReport check_normal_core_oracle(const GroupPtr& x);

/// |Hom(p* A', D)| = |Hom(A', R(D))| for every listed point A' over B,
/// where R is fibrewise_right_adjoint.
CheckReport check_fibrewise_adjunction(const GroupHom& p, const GroupHom& sec,
                                       const SplitExtension& over_e,
                                       std::span<const SplitExtension> points_over_b,
                                       std::size_t hom_bound = 64);

std::string describe(const Subgroup& s);
std::string describe(const SplitExtension& ext);

}  // namespace selab
