#pragma once

// Exact finite-group arithmetic over Cayley tables.
//
// Elements are indices 0..n-1 with the identity fixed at 0. Groups are
// immutable once validated and shared through GroupPtr.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selab {

using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  static constexpr Elem identity = 0;

  /// Validates the table (identity at 0, inverses, associativity) and
  /// throws ValidationError naming the failed axiom and its witness.
  static GroupPtr from_table(std::size_t order, std::vector<Elem> mul, std::string label,
                             std::vector<std::string> names = {});

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }

  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv_[g]); }
  /// h k h^-1 k^-1
  Elem commutator(Elem h, Elem k) const noexcept {
    return mul(mul(h, k), mul(inv_[h], inv_[k]));
  }

  std::size_t element_order(Elem a) const noexcept { return orders_[a]; }
  bool is_abelian() const noexcept;

  std::span<const Elem> table() const noexcept { return mul_; }
  std::span<const Elem> row(Elem a) const noexcept { return {mul_.data() + a * n_, n_}; }

  bool has_names() const noexcept { return !names_.empty(); }
  std::string element_name(Elem a) const;
  std::optional<Elem> find_element(std::string_view name) const;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> names_;
  std::string label_;
};

/// Runs the three axiom scans on a raw n×n table. Throws ValidationError.
void validate_group_table(std::size_t order, std::span<const Elem> mul);

// ---------------------------------------------------------------------------
// Homomorphisms

/// true iff map(0) = 0 and map is multiplicative. Throws InputError when the
/// map has the wrong length or an entry outside cod.
bool is_homomorphism(std::span<const Elem> map, const FiniteGroup& dom, const FiniteGroup& cod);

class GroupHom {
 public:
  /// Throws ValidationError when map is not a homomorphism.
  GroupHom(GroupPtr dom, GroupPtr cod, std::vector<Elem> map);

  static GroupHom identity(GroupPtr g);
  static GroupHom zero(GroupPtr dom, GroupPtr cod);

  const FiniteGroup& dom() const noexcept { return *dom_; }
  const FiniteGroup& cod() const noexcept { return *cod_; }
  const GroupPtr& dom_ptr() const noexcept { return dom_; }
  const GroupPtr& cod_ptr() const noexcept { return cod_; }

  Elem operator()(Elem a) const noexcept { return map_[a]; }
  std::span<const Elem> map() const noexcept { return map_; }

  bool is_injective() const;
  bool is_surjective() const;

  /// Same groups (by identity of the shared objects) and same table.
  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.map_ == b.map_;
  }

 private:
  struct Unchecked {};
  GroupHom(Unchecked, GroupPtr dom, GroupPtr cod, std::vector<Elem> map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {}
  friend GroupHom compose(const GroupHom& g, const GroupHom& f);
  friend class GroupIso;

  GroupPtr dom_;
  GroupPtr cod_;
  std::vector<Elem> map_;
};

/// g ∘ f. Throws InputError unless f.cod is g.dom.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// A bijective homomorphism with its inverse table cached.
class GroupIso {
 public:
  /// Throws ValidationError when h is not bijective.
  explicit GroupIso(GroupHom h);

  const GroupHom& hom() const noexcept { return hom_; }
  Elem operator()(Elem a) const noexcept { return hom_(a); }
  Elem inverse(Elem a) const noexcept { return inverse_[a]; }
  GroupHom inverse_hom() const;

 private:
  GroupHom hom_;
  std::vector<Elem> inverse_;
};

/// Aut(X) as a concrete group. Index 0 is the identity automorphism and
/// mul(i, j) is the composite automorphisms[i] ∘ automorphisms[j].
struct AutomorphismGroup {
  GroupPtr x;
  GroupPtr group;
  std::vector<GroupIso> automorphisms;

  Elem evaluate(Elem aut, Elem elem) const noexcept { return automorphisms[aut](elem); }
  std::optional<Elem> index_of(std::span<const Elem> map) const;
};

inline constexpr std::size_t kDefaultAutBound = 24;
inline constexpr std::size_t kDefaultHomDomainBound = 12;

/// Backtracking over generator images. Throws CapacityError when |X| > bound.
AutomorphismGroup automorphism_group(const GroupPtr& x, std::size_t bound = kDefaultAutBound);

/// An isomorphism X → Y if one exists, by backtracking over generator images.
std::optional<GroupIso> find_isomorphism(const GroupPtr& x, const GroupPtr& y);

/// Independent oracle: filters all |X|! bijections. Sorted lexicographically.
std::vector<std::vector<Elem>> automorphisms_by_bijection_scan(const FiniteGroup& x);

/// Complete, duplicate-free, lexicographically ordered list of homs X → Y.
/// Throws CapacityError when |X| > bound.
std::vector<GroupHom> hom_enumerate(const GroupPtr& x, const GroupPtr& y,
                                    std::size_t bound = kDefaultHomDomainBound);

/// Greedy minimal generating set: repeatedly adds the highest-order element
/// outside the current subgroup (lowest index on ties).
std::vector<Elem> generating_set(const FiniteGroup& g);

/// Extends generator images to a homomorphism on the subgroup they generate.
/// Entries outside that subgroup are left as `unassigned`. Returns nullopt
/// when the images are inconsistent.
inline constexpr Elem kUnassigned = static_cast<Elem>(-1);
std::optional<std::vector<Elem>> extend_to_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                                               std::span<const Elem> gens,
                                               std::span<const Elem> images);

// ---------------------------------------------------------------------------
// Products

/// Carrier index of (x, y) is x·|Y| + y.
struct DirectProduct {
  GroupPtr group;
  GroupPtr left;
  GroupPtr right;
  GroupHom inj1, inj2, proj1, proj2;

  Elem pair(Elem x, Elem y) const noexcept {
    return static_cast<Elem>(x * right->order() + y);
  }
};

DirectProduct direct_product(const GroupPtr& x, const GroupPtr& y);

/// ⟨f, g⟩ : Z → X × Y.
GroupHom pairing(const GroupHom& f, const GroupHom& g, const DirectProduct& product);

// ---------------------------------------------------------------------------
// Catalog constructors

GroupPtr cyclic(std::size_t n);
GroupPtr dihedral(std::size_t n);  ///< order 2n, n ≥ 3
GroupPtr symmetric(std::size_t n);  ///< n ≤ 5, permutations in lexicographic order
GroupPtr alternating(std::size_t n);  ///< n ≤ 5
GroupPtr quaternion8();

/// Cayley-table text format: `order n` then n rows of n indices.
GroupPtr read_cayley_table(std::istream& in, std::string label);
GroupPtr load_cayley_table(const std::string& path);
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

/// Hook for extra constructor heads (e.g. semidirect), consulted before the
/// built-in ones. Receives the head and raw argument strings; returns
/// nullopt to decline.
using SpecExtension =
    std::function<std::optional<GroupPtr>(const std::string& head,
                                           const std::vector<std::string>& args)>;

/// cyclic(n) | dihedral(n) | symmetric(n) | alternating(n) | quaternion8 |
/// direct_product(g, h) | from_table(path). Throws InputError on bad specs.
GroupPtr construct_group(std::string_view spec, const SpecExtension& extension = {});

/// Splits `head(arg, arg, ...)` at top-level commas. Returns nullopt for a bare word.
std::optional<std::pair<std::string, std::vector<std::string>>> split_call(std::string_view spec);

// ---------------------------------------------------------------------------
// Permutations, 0-based images; names use 1-based cycle notation.

std::string cycle_notation(std::span<const int> perm);
/// Parses e.g. "(1 2)(3 4)" or "()" into a permutation of the given degree.
std::optional<std::vector<int>> parse_cycles(std::string_view text, std::size_t degree);

}  // namespace selab
