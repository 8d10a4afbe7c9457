#include "selab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace selab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::skipped_capacity:
      return "skipped-capacity";
  }
  return "unknown";
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j = {{"check", r.check},
                      {"instance", r.instance},
                      {"verdict", to_string(r.verdict)},
                      {"millis", r.millis},
                      {"cases", r.cases}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

std::string to_line(const CheckReport& r) {
  std::ostringstream os;
  os << to_string(r.verdict) << " " << r.check << " [" << r.instance << "] cases=" << r.cases
     << " millis=" << std::fixed << std::setprecision(1) << r.millis;
  if (r.witness) os << " witness=" << *r.witness;
  return os.str();
}

CheckReport aggregate(std::string check, std::string instance, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.check = std::move(check);
  out.instance = std::move(instance);
  for (const auto& p : parts) {
    out.cases += p.cases;
    out.millis += p.millis;
    if (p.verdict == Verdict::fails && out.verdict != Verdict::fails) {
      out.verdict = Verdict::fails;
      out.witness = p.check + " [" + p.instance + "] " + p.witness.value_or("");
    } else if (p.verdict == Verdict::skipped_capacity && out.verdict == Verdict::holds) {
      out.verdict = Verdict::skipped_capacity;
      out.witness = p.witness;
    }
  }
  return out;
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.check, a.instance) < std::tie(b.check, b.instance);
  });
}

}  // namespace selab
