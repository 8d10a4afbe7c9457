#pragma once

// Internal actions of a group B on a group X, split extensions over B, the
// equivalence between them, and the three core constructions.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selab/group.hpp"
#include "selab/subgroup.hpp"

namespace selab {

/// An action of B on X by automorphisms, stored as the full |B|×|X| table.
class BAction {
 public:
  /// Validates a(e,x) = x, a(b, a(b',x)) = a(bb', x) and a(b, xy) = a(b,x)a(b,y).
  /// Throws ValidationError with the offending witness.
  BAction(GroupPtr b, GroupPtr x, std::vector<Elem> table);

  const FiniteGroup& acting() const noexcept { return *b_; }
  const FiniteGroup& target() const noexcept { return *x_; }
  const GroupPtr& acting_ptr() const noexcept { return b_; }
  const GroupPtr& target_ptr() const noexcept { return x_; }

  Elem apply(Elem b, Elem x) const noexcept { return table_[b * x_->order() + x]; }
  std::span<const Elem> table() const noexcept { return table_; }
  bool is_trivial() const;

  /// x ↦ a(b, x).
  GroupIso curried(Elem b) const;
  /// b ↦ a(b, -) as a homomorphism into the given automorphism group of X.
  GroupHom as_automorphism_hom(const AutomorphismGroup& aut) const;

  /// a(b, S).
  Subgroup act_on(Elem b, const Subgroup& s) const;
  bool is_invariant(const Subgroup& s) const;

  friend bool operator==(const BAction& l, const BAction& r) {
    return l.b_ == r.b_ && l.x_ == r.x_ && l.table_ == r.table_;
  }

 private:
  GroupPtr b_;
  GroupPtr x_;
  std::vector<Elem> table_;
};

BAction trivial_action(GroupPtr b, GroupPtr x);
/// h : B → Aut(X) evaluated pointwise. Throws ValidationError if h(e) ≠ id.
BAction action_from_hom(const GroupHom& h, const AutomorphismGroup& aut);
/// a(g, x) = g x g⁻¹.
BAction conjugation_action(const GroupPtr& x);
/// Every action of B on X, one per homomorphism B → Aut(X), in hom order.
std::vector<BAction> enumerate_actions(const GroupPtr& b, const GroupPtr& x,
                                       std::size_t aut_bound = kDefaultAutBound);

// ---------------------------------------------------------------------------

/// X --embedding--> A <==projection/section==> B, with projection∘section = 1.
class SplitExtension {
 public:
  /// Validates the split-extension invariants; throws ValidationError.
  SplitExtension(GroupHom embedding, GroupHom projection, GroupHom section);

  const FiniteGroup& kernel_group() const noexcept { return embedding_.dom(); }
  const FiniteGroup& middle() const noexcept { return embedding_.cod(); }
  const FiniteGroup& base() const noexcept { return projection_.cod(); }
  const GroupPtr& kernel_ptr() const noexcept { return embedding_.dom_ptr(); }
  const GroupPtr& middle_ptr() const noexcept { return embedding_.cod_ptr(); }
  const GroupPtr& base_ptr() const noexcept { return projection_.cod_ptr(); }

  const GroupHom& embedding() const noexcept { return embedding_; }
  const GroupHom& projection() const noexcept { return projection_; }
  const GroupHom& section() const noexcept { return section_; }

  /// κ(X) and β(B) as subgroups of A.
  Subgroup kernel_image() const { return image(embedding_); }
  Subgroup section_image() const { return image(section_); }

  /// κ⁻¹ on κ(X).
  Elem kernel_preimage(Elem a) const { return kernel_index_[a]; }

 private:
  GroupHom embedding_;
  GroupHom projection_;
  GroupHom section_;
  std::vector<Elem> kernel_index_;
};

/// A ⋊ carrier flattened as x·|B| + b, (x,b)(x',b') = (x·a(b,x'), bb').
/// The default label is `X:B`, or `XxB` for the trivial action.
SplitExtension semidirect_product(const BAction& act, std::string label = {});
/// a(b, x) = κ⁻¹(β(b) κ(x) β(b)⁻¹).
BAction action_of_split_extension(const SplitExtension& ext);

/// The rebuilt semidirect product of ext's action and the isomorphism
/// (x, b) ↦ κ(x)β(b) onto ext, checked to commute with all three maps.
struct SemidirectComparison {
  SplitExtension semidirect;
  GroupIso iso;
};
SemidirectComparison compare_with_semidirect(const SplitExtension& ext);

/// The split extension determined by a decomposition X = K ⋊ B, i.e. K
/// normal, K ∧ B = 0, K ∨ B = X. Throws InputError otherwise.
SplitExtension extension_from_decomposition(const Subgroup& k, const Subgroup& b);

/// Pullback of ext along f : B' → B.
SplitExtension change_of_base(const SplitExtension& ext, const GroupHom& f);

/// Product in the fibre over the shared base; kernel is X₁ × X₂.
struct FibreProduct {
  SplitExtension ext;
  DirectProduct kernel_product;
};
FibreProduct fibre_product(const SplitExtension& e1, const SplitExtension& e2);

// ---------------------------------------------------------------------------
// Cores

/// Largest B-invariant subgroup of X inside S, by iterating
/// Y ← Y ∩ ⋂_{g ∈ gens(B)} a(g, Y) to a fixpoint.
Subgroup action_core(const Subgroup& s, const BAction& act);
/// ⋂_{b ∈ B} a(b, S) over every element of B.
Subgroup action_core_by_intersection(const Subgroup& s, const BAction& act);
/// Join of every B-invariant subgroup contained in S (enumerates the lattice).
Subgroup action_core_by_join(const Subgroup& s, const BAction& act,
                             std::size_t bound = kDefaultLatticeBound);

/// A subgroup U of the middle object containing β(B), with U ∩ κ(X).
struct PointSubobject {
  Subgroup point;
  Subgroup kernel_part;
};
std::vector<PointSubobject> enumerate_subpoints(const SplitExtension& ext,
                                                std::size_t bound = kDefaultLatticeBound);

struct ExtensionCore {
  SplitExtension core;
  GroupHom u;  ///< core kernel → S
  GroupHom v;  ///< core middle → A
  Subgroup kernel_part;  ///< the core kernel as a subgroup of X
  Subgroup point;  ///< the core middle as a subgroup of A
};

/// Terminal lifting of s ≤ X to a sub-split-extension of ext.
ExtensionCore split_extension_core(const Subgroup& s, const SplitExtension& ext);

/// First subpoint whose kernel part lies in κ(s) but which does not factor
/// through v, if any.
std::optional<PointSubobject> find_terminality_violation(const Subgroup& s,
                                                         const SplitExtension& ext,
                                                         const ExtensionCore& core,
                                                         std::size_t bound = kDefaultLatticeBound);

// ---------------------------------------------------------------------------
// Change of base along a split epimorphism and its right adjoint

/// For p : E → B with section sec, the right adjoint of p* applied to a
/// point over E. Built from the split extension core of the diagonal
/// Y → Y × Y in the fibre product of `over_e` with its pullback along
/// sec∘p, then pulled back along sec.
SplitExtension fibrewise_right_adjoint(const GroupHom& p, const GroupHom& sec,
                                       const SplitExtension& over_e);

/// |Hom(from, to)| in the category of points over their common base,
/// counted by filtering hom_enumerate on the middle objects.
std::size_t count_point_morphisms(const SplitExtension& from, const SplitExtension& to,
                                  std::size_t domain_bound);
/// The same count through the kernels: B-equivariant homs X₁ → X₂.
std::size_t count_equivariant_morphisms(const BAction& from, const BAction& to,
                                        std::size_t domain_bound);

}  // namespace selab
