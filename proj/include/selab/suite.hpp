#pragma once

// Batch runner: the property checkers applied across a catalog.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "selab/catalog.hpp"
#include "selab/checks.hpp"
#include "selab/report.hpp"

namespace selab {

enum class Suite { all, cores, theorems, omega };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct SuiteOptions {
  /// Catalog entries (theorems) or middle objects (cores) above this order are not visited.
  std::size_t max_order = 16;
  std::uint64_t seed = kDefaultSeed;
  /// Also run the exponential terminality, adjunction and fibrewise scans.
  bool verify = false;
  /// Stop at the first capacity skip.
  bool strict = false;
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  bool aborted = false;

  /// 0 all hold, 1 some check failed, 3 aborted on capacity under --strict.
  int exit_code() const;
};

/// |Hom(p*A', D)| = |Hom(A', R(D))| for every split epi p : E → B of
/// catalog groups with |E| ≤ 8, |B| ≤ 4, every section of p, every point D
/// over E and every point A' over B with middle order ≤ 12. One report per
/// (E, B).
std::vector<CheckReport> fibrewise_scan(const Catalog& catalog);

/// Deterministic given (catalog, options): reports come out in catalog order.
SuiteResult run_suite(Suite suite, const Catalog& catalog, const SuiteOptions& options);

}  // namespace selab
