#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace selab {

enum class Verdict { holds, fails, skipped_capacity };

std::string to_string(Verdict v);

/// Outcome of one checker on one instance. A `fails` report always carries
/// a witness that reproduces the failure when the instance is re-run.
struct CheckReport {
  std::string check;
  std::string instance;
  Verdict verdict = Verdict::holds;
  std::optional<std::string> witness;
  double millis = 0.0;
  /// Number of individual cases the checker evaluated.
  std::size_t cases = 0;

  bool holds() const noexcept { return verdict == Verdict::holds; }
};

/// {check, instance, verdict, witness?, millis}
nlohmann::json to_json(const CheckReport& r);
/// One line: `verdict check [instance] cases=N millis=T witness=...`.
std::string to_line(const CheckReport& r);

/// Folds per-case reports into one: cases and time are summed, the first
/// failure's witness is kept, prefixed with its check and instance.
CheckReport aggregate(std::string check, std::string instance, const std::vector<CheckReport>& parts);

/// Stable order by (check, instance).
void sort_reports(std::vector<CheckReport>& reports);

}  // namespace selab
