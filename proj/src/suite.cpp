#include "selab/suite.hpp"

#include <chrono>
#include <functional>

#include "selab/errors.hpp"
#include "selab/omega.hpp"

namespace selab {

namespace {

constexpr std::size_t kFibreMaxE = 8;
constexpr std::size_t kFibreMaxB = 4;
constexpr std::size_t kFibreMaxMiddle = 12;
// p*A' has order |A'|·|E|/|B|.
constexpr std::size_t kFibreHomBound = kFibreMaxMiddle * kFibreMaxE;

class Runner {
 public:
  Runner(const SuiteOptions& opts, SuiteResult& out) : opts_(opts), out_(out) {}

  bool stopped() const { return out_.aborted; }

  /// Runs one checker, turning a capacity error into a skipped report.
  void run(const std::string& check, const std::string& instance,
           const std::function<CheckReport()>& f) {
    if (stopped()) return;
    CheckReport r;
    try {
      r = f();
    } catch (const CapacityError& e) {
      r.check = check;
      r.instance = instance;
      r.verdict = Verdict::skipped_capacity;
      r.witness = e.what();
    }
    if (r.verdict == Verdict::skipped_capacity && opts_.strict) out_.aborted = true;
    out_.reports.push_back(std::move(r));
  }

 private:
  const SuiteOptions& opts_;
  SuiteResult& out_;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void theorems(Runner& run, const Catalog& catalog, const SuiteOptions& opts) {
  const FamilyOptions family{opts.seed, 1000, 12};
  const FamilyOptions subpoints{opts.seed, 1000, 10};
  for (const auto& g : catalog.groups(opts.max_order)) {
    const std::string& label = g->label();
    run.run("group_axioms", label, [&] {
      auto t0 = std::chrono::steady_clock::now();
      validate_group_table(g->order(), g->table());
      CheckReport r{"group_axioms", label, Verdict::holds, std::nullopt, 0.0,
                    g->order() * g->order() * g->order()};
      r.millis = elapsed_ms(t0);
      return r;
    });
    run.run("higgins_normality", label, [&] { return check_higgins_normality(g); });
    run.run("join_normals_normal", label, [&] { return check_join_normals_normal(g); });
    run.run("commutator_join", label, [&] { return check_commutator_join_all(g, family); });
    run.run("three_subobjects", label, [&] { return check_three_subobjects(g); });
    run.run("normal_core_oracle", label, [&] { return check_normal_core_oracle(g); });
    run.run("clots", label, [&] {
      std::vector<CheckReport> parts;
      for (const auto& s : enumerate_subgroups(g)) parts.push_back(check_clots(s));
      return aggregate("clots", label, parts);
    });
    run.run("normal_core_pullback", label, [&] {
      std::vector<CheckReport> parts;
      for (const auto& s : enumerate_subgroups(g)) parts.push_back(check_normal_core_pullback(s));
      return aggregate("normal_core_pullback", label, parts);
    });
    run.run("intersections", label, [&] {
      std::vector<CheckReport> parts;
      for (const auto& [k, b] : enumerate_decompositions(g)) {
        parts.push_back(check_intersections_binary(k, b));
        parts.push_back(check_intersections_family(k, b, family));
      }
      return aggregate("intersections", label, parts);
    });
    run.run("kernel_geometric", label, [&] {
      std::vector<CheckReport> parts;
      for (const auto& [k, b] : enumerate_decompositions(g)) {
        parts.push_back(check_kernel_geometric_all(extension_from_decomposition(k, b), subpoints));
      }
      return aggregate("kernel_geometric", label, parts);
    });
  }
}

CheckReport semidirect_roundtrip(const std::string& instance, const BAction& act) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport r{"semidirect_roundtrip", instance, Verdict::holds, std::nullopt, 0.0, 1};
  SplitExtension ext = semidirect_product(act);
  if (!(action_of_split_extension(ext) == act)) {
    r.verdict = Verdict::fails;
    r.witness = "action of the semidirect product differs from the input action";
  } else {
    // Throws ConsistencyError if the rebuilt product is not isomorphic over B.
    compare_with_semidirect(ext);
  }
  r.millis = elapsed_ms(t0);
  return r;
}

void fibrewise(Runner& run, const Catalog& catalog) {
  std::vector<GroupPtr> reps = isomorphism_representatives(catalog.groups(kFibreMaxMiddle));
  auto points_over = [&](const GroupPtr& base) {
    std::vector<SplitExtension> pts;
    for (const auto& x : reps) {
      if (x->order() * base->order() > kFibreMaxMiddle) continue;
      for (const auto& act : enumerate_actions(base, x)) pts.push_back(semidirect_product(act));
    }
    return pts;
  };
  for (const auto& e : reps) {
    if (e->order() > kFibreMaxE) continue;
    std::vector<SplitExtension> over_e = points_over(e);
    for (const auto& b : reps) {
      if (b->order() > kFibreMaxB || b->order() > e->order()) continue;
      const std::string instance = e->label() + "->" + b->label();
      run.run("fibrewise_adjunction", instance, [&] {
        std::vector<SplitExtension> over_b = points_over(b);
        auto sections = hom_enumerate(b, e, kFibreMaxB);
        std::vector<CheckReport> parts;
        for (const auto& p : hom_enumerate(e, b, kFibreMaxE)) {
          if (!p.is_surjective()) continue;
          for (const auto& s : sections) {
            if (!(compose(p, s) == GroupHom::identity(b))) continue;
            for (const auto& d : over_e) {
              parts.push_back(check_fibrewise_adjunction(p, s, d, over_b, kFibreHomBound));
            }
          }
        }
        return aggregate("fibrewise_adjunction", instance, parts);
      });
    }
  }
}

void cores(Runner& run, const Catalog& catalog, const SuiteOptions& opts) {
  for (const auto& [instance, act] : catalog_actions(catalog, opts.max_order)) {
    run.run("action_core_routes", instance, [&] { return check_action_core_routes(act); });
    run.run("semidirect_roundtrip", instance, [&] { return semidirect_roundtrip(instance, act); });
    if (opts.verify) {
      SplitExtension ext = semidirect_product(act);
      run.run("core_terminality", instance, [&] {
        auto r = check_core_terminality(ext);
        r.instance = instance;
        return r;
      });
      run.run("core_adjunction", instance, [&] {
        auto r = check_core_adjunction(ext);
        r.instance = instance;
        return r;
      });
    }
  }
  if (opts.verify) fibrewise(run, catalog);
}

void omega_suite(Runner& run, const SuiteOptions& opts) {
  run.run("omega_witness", "i<=64", [] { return omega::verify_witness(64); });
  for (std::uint64_t i : {1, 2, 4, 8}) {
    run.run("omega_Ni_invariance", "i=" + std::to_string(i), [&] {
      return omega::verify_Ni_invariance(i, omega::sample_invariance_pairs(i, 1000, opts.seed));
    });
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "cores") return Suite::cores;
  if (name == "theorems") return Suite::theorems;
  if (name == "omega") return Suite::omega;
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::all:
      return "all";
    case Suite::cores:
      return "cores";
    case Suite::theorems:
      return "theorems";
    case Suite::omega:
      return "omega";
  }
  return "unknown";
}

int SuiteResult::exit_code() const {
  if (aborted) return 3;
  for (const auto& r : reports)
    if (r.verdict == Verdict::fails) return 1;
  return 0;
}

std::vector<CheckReport> fibrewise_scan(const Catalog& catalog) {
  SuiteResult out;
  SuiteOptions opts;
  Runner run(opts, out);
  fibrewise(run, catalog);
  return std::move(out.reports);
}

SuiteResult run_suite(Suite suite, const Catalog& catalog, const SuiteOptions& options) {
  SuiteResult out;
  Runner run(options, out);
  if (suite == Suite::theorems || suite == Suite::all) theorems(run, catalog, options);
  if (suite == Suite::cores || suite == Suite::all) cores(run, catalog, options);
  if (suite == Suite::omega || suite == Suite::all) omega_suite(run, options);
  return out;
}

}  // namespace selab
