#pragma once

// Subobject lattice of a finite group.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "selab/group.hpp"

namespace selab {

/// A subgroup of `parent`, canonically the sorted list of its element indices.
class Subgroup {
 public:
  /// Validates closure under mul and inv; throws ValidationError otherwise.
  Subgroup(GroupPtr parent, std::vector<Elem> elems);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  std::span<const Elem> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool contains(Elem a) const noexcept { return mask_[a]; }
  bool is_trivial() const noexcept { return elems_.size() == 1; }
  bool is_whole() const noexcept { return elems_.size() == parent_->order(); }

  /// Set inclusion. Throws InputError on parent mismatch.
  bool is_subset_of(const Subgroup& other) const;

  /// Sorted index list, e.g. "{0 3 4}".
  std::string to_string() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elems_ == b.elems_;
  }
  /// Canonical report order: (size, lexicographic elements).
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems_.size() != b.elems_.size()) return a.elems_.size() < b.elems_.size();
    return a.elems_ < b.elems_;
  }

 private:
  struct Unchecked {};
  Subgroup(Unchecked, GroupPtr parent, std::vector<Elem> elems);
  friend struct SubgroupAccess;

  GroupPtr parent_;
  std::vector<Elem> elems_;
  std::vector<bool> mask_;
};

struct GenerateResult {
  Subgroup subgroup;
  std::size_t iterations;  ///< expansion steps before the fixpoint
};

/// Least subgroup containing seed, via J₀ = seed ∪ {0},
/// J_{n+1} = J_n ∪ J_n·J_n ∪ J_n⁻¹, stopping at the first fixpoint.
GenerateResult generate(const GroupPtr& x, std::span<const Elem> seed);
inline Subgroup generated(const GroupPtr& x, std::span<const Elem> seed) {
  return generate(x, seed).subgroup;
}

Subgroup meet(const Subgroup& h, const Subgroup& k);
Subgroup join(const Subgroup& h, const Subgroup& k);
/// Empty family joins to the trivial subgroup.
Subgroup join_family(const GroupPtr& x, std::span<const Subgroup> family);

inline constexpr std::size_t kDefaultLatticeBound = 48;

/// All subgroups in (size, lexicographic) order. Throws CapacityError when
/// |X| > bound.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& x, bool normal_only = false,
                                          std::size_t bound = kDefaultLatticeBound);

bool is_normal(const Subgroup& h);
Subgroup normal_closure(const Subgroup& s);
Subgroup higgins_commutator(const Subgroup& h, const Subgroup& k);
Subgroup centralizer(const Subgroup& s);

/// Join of all normal subgroups of X inside S. Cross-checked against the
/// intersection of conjugates; throws ConsistencyError if they differ.
Subgroup normal_core(const Subgroup& s);
/// ⋂_{x∈X} xSx⁻¹.
Subgroup normal_core_by_conjugates(const Subgroup& s);

/// f(H) as a subgroup of f's codomain.
Subgroup image(const GroupHom& f, const Subgroup& h);
Subgroup image(const GroupHom& f);
Subgroup kernel(const GroupHom& f);
/// f⁻¹(K).
Subgroup preimage(const GroupHom& f, const Subgroup& k);

/// A subgroup relabelled as a standalone group, with its inclusion into the
/// parent. Element i of the new group is the i-th smallest element of H.
struct InducedGroup {
  GroupPtr group;
  GroupHom inclusion;

  /// Parent index → new index. Only valid for members of H.
  Elem local(Elem parent_elem) const;
};
InducedGroup induced_group(const Subgroup& h, std::string label = {});

/// X/N with cosets ordered by their least element, and the projection.
struct Quotient {
  GroupPtr group;
  GroupHom projection;
};
Quotient quotient(const Subgroup& n, std::string label = {});

}  // namespace selab
