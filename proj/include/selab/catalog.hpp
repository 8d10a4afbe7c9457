#pragma once

// Named corpus of groups for the suite runner, and the manifest format that
// persists it: one constructor spec per line, `#` comments, table files
// referenced through from_table("path") relative to the manifest.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "selab/action.hpp"
#include "selab/group.hpp"

namespace selab {

struct CatalogEntry {
  std::string spec;
  GroupPtr group;
};

class Catalog {
 public:
  /// Throws InputError when the label is already taken.
  void add(std::string spec, GroupPtr group);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const CatalogEntry* find(std::string_view label) const;
  /// Entries of order ≤ max_order, in catalog order.
  std::vector<GroupPtr> groups(std::size_t max_order) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// construct_group plus `semidirect(X, B, k)`, the k-th action of B on X in
/// enumerate_actions order (label `X:B[k]`). Relative from_table paths are
/// resolved against base_dir.
GroupPtr construct_catalog_group(std::string_view spec, const std::filesystem::path& base_dir = {});

/// C1–C16, D3–D8, Q8, S3, S4, A4.
std::vector<std::string> base_catalog_specs();

/// The base groups, then direct and semidirect products of catalog groups
/// with order ≤ max_order, closed under taking further products. A product
/// isomorphic to an earlier product is dropped.
Catalog default_catalog(std::size_t max_order = 24);

/// Every entry is validated on load; invalid tables raise ValidationError
/// naming the axiom and witness.
Catalog load_catalog(const std::filesystem::path& manifest);
/// Entries built from tables are rewritten as `from_table("<label>.table")`
/// with the table saved next to the manifest.
void save_catalog(const Catalog& catalog, const std::filesystem::path& manifest);

/// A group B acting on X, both taken from the catalog.
struct CatalogAction {
  std::string instance;  ///< e.g. "C4 on C5 #1"
  BAction action;
};
/// Every action between catalog groups X, B (nontrivial, pairwise
/// non-isomorphic representatives) with |X|·|B| ≤ max_middle.
std::vector<CatalogAction> catalog_actions(const Catalog& catalog, std::size_t max_middle);

/// One representative per isomorphism class, in catalog order.
std::vector<GroupPtr> isomorphism_representatives(const std::vector<GroupPtr>& groups);

}  // namespace selab
