// Acceptance run over the shipped catalog. Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "selab/catalog.hpp"
#include "selab/checks.hpp"
#include "selab/errors.hpp"
#include "selab/omega.hpp"
#include "selab/suite.hpp"

using namespace selab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void record(const CheckReport& r) {
    if (r.verdict != Verdict::holds) fail(to_line(r));
  }
  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

/// Associativity, identity and inverses by direct triple scan of the table.
bool axioms_by_scan(const FiniteGroup& g, std::size_t& triples) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    bool has_inverse = false;
    for (Elem b = 0; b < n; ++b) has_inverse |= g.mul(a, b) == 0 && g.mul(b, a) == 0;
    if (!has_inverse) return false;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        ++triples;
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
      }
  return true;
}

std::vector<Elem> to_vec(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

const FamilyOptions kFamily{kDefaultSeed, 1000, 12};
const FamilyOptions kSubpoints{kDefaultSeed, 1000, 10};

}  // namespace

int main() {
  const Catalog catalog = default_catalog(24);
  const auto upto16 = catalog.groups(16);

  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria;

  criteria.emplace_back("group axioms on every catalog group", [&](Outcome& o) {
    std::size_t triples = 0;
    for (const auto& e : catalog.entries()) {
      try {
        validate_group_table(e.group->order(), e.group->table());
      } catch (const ValidationError& err) {
        o.fail(e.group->label() + ": " + err.what());
      }
      if (!axioms_by_scan(*e.group, triples)) o.fail(e.group->label() + ": triple scan");
    }
    o.detail << catalog.size() << " groups, " << triples << " triples";
  });

  criteria.emplace_back("normal core: join of contained normals = intersection of conjugates",
                        [&](Outcome& o) {
    std::size_t pairs = 0;
    for (const auto& g : upto16) {
      auto normals = enumerate_subgroups(g, true);
      for (const auto& s : enumerate_subgroups(g)) {
        ++pairs;
        std::vector<Subgroup> inside;
        for (const auto& n : normals)
          if (n.is_subset_of(s)) inside.push_back(n);
        Subgroup by_join = join_family(g, inside);
        Subgroup by_meet = normal_core_by_conjugates(s);
        if (!(by_join == by_meet) || !(normal_core(s) == by_join)) {
          o.fail(describe(s) + ": join " + by_join.to_string() + " vs conjugates " + by_meet.to_string());
        }
      }
      o.record(check_normal_core_oracle(g));
    }
    o.detail << upto16.size() << " groups, " << pairs << " subgroups";
  });

  criteria.emplace_back("split extension core terminality, |A| <= 24", [&](Outcome& o) {
    auto actions = catalog_actions(catalog, 24);
    std::size_t subgroups = 0;
    for (const auto& ca : actions) {
      auto r = check_core_terminality(semidirect_product(ca.action));
      subgroups += r.cases;
      o.record(r);
    }
    o.detail << actions.size() << " extensions, " << subgroups << " kernel subgroups";
  });

  std::vector<std::pair<Subgroup, Subgroup>> decompositions;
  for (const auto& g : upto16)
    for (auto& d : enumerate_decompositions(g)) decompositions.push_back(std::move(d));

  criteria.emplace_back("intersections: binary and family distributivity, order <= 16", [&](Outcome& o) {
    std::size_t exhaustive = 0, sampled = 0;
    for (const auto& [k, b] : decompositions) {
      o.record(check_intersections_binary(k, b));
      auto r = check_intersections_family(k, b, kFamily);
      o.record(r);
      if (r.instance.find("sampled") != std::string::npos) {
        ++sampled;
        if (r.cases < 1000) o.fail("too few samples: " + to_line(r));
      } else {
        ++exhaustive;
      }
    }
    o.detail << decompositions.size() << " decompositions, " << exhaustive << " exhaustive, " << sampled
             << " sampled";
  });

  criteria.emplace_back("kernel functor geometric on subpoint families", [&](Outcome& o) {
    std::size_t exhaustive = 0, families = 0;
    for (const auto& [k, b] : decompositions) {
      auto r = check_kernel_geometric_all(extension_from_decomposition(k, b), kSubpoints);
      o.record(r);
      families += r.cases;
      exhaustive += r.instance.find("exhaustive") != std::string::npos;
    }
    o.detail << decompositions.size() << " extensions (" << exhaustive << " exhaustive), " << families
             << " families";
  });

  criteria.emplace_back("Higgins, clots, three-subobjects, join of normals, directed joins",
                        [&](Outcome& o) {
    std::size_t subgroups = 0;
    for (const auto& g : upto16) {
      o.record(check_higgins_normality(g));
      o.record(check_join_normals_normal(g));
      o.record(check_commutator_join_all(g, kFamily));
      o.record(check_three_subobjects(g));
      for (const auto& s : enumerate_subgroups(g)) {
        ++subgroups;
        o.record(check_clots(s));
      }
    }
    for (const char* label : {"S4", "A4"}) o.record(check_three_subobjects(catalog.find(label)->group));
    o.detail << upto16.size() << " groups, " << subgroups << " clot cases, S4 and A4 three-subobjects";
  });

  criteria.emplace_back("core adjunction biconditional, |A| <= 16", [&](Outcome& o) {
    std::size_t n = 0;
    for (const auto& ca : catalog_actions(catalog, 16)) {
      o.record(check_core_adjunction(semidirect_product(ca.action)));
      ++n;
    }
    for (const auto& [k, b] : decompositions) {
      o.record(check_core_adjunction(extension_from_decomposition(k, b)));
      ++n;
    }
    o.detail << n << " extensions";
  });

  criteria.emplace_back("fibrewise right adjoint hom-count bijection", [&](Outcome& o) {
    auto reports = fibrewise_scan(catalog);
    std::size_t cases = 0;
    for (const auto& r : reports) {
      o.record(r);
      cases += r.cases;
    }
    o.detail << reports.size() << " (E, B) pairs, " << cases << " hom-count comparisons";
  });

  criteria.emplace_back("omega counterexample", [&](Outcome& o) {
    using namespace omega;
    o.record(verify_witness(64));
    auto alpha = SeqDescriptor::constant(OmegaElement::make({}, 1));
    auto beta = SeqDescriptor::shifted_delta({});
    auto diff = omega_difference(alpha, beta);
    if (!(diff == OmegaElement::make({}, 1))) o.fail("difference " + to_string(diff));
    for (std::uint64_t i = 0; i <= 64; ++i)
      if (member_Ni(diff, i)) o.fail("difference in N_" + std::to_string(i));
    // The z-coordinate alone decides membership: nonzero z is in no N_i.
    if (diff.z == 0) o.fail("difference has zero z-coordinate");
    for (std::uint64_t i : {1, 2, 4, 8}) {
      auto r = verify_Ni_invariance(i, sample_invariance_pairs(i, 1000, kDefaultSeed));
      if (r.cases < 1000) o.fail("too few samples for i=" + std::to_string(i));
      o.record(r);
    }
    o.detail << "difference " << to_string(diff) << ", invariance at i = 1, 2, 4, 8 x 1000";
  });

  criteria.emplace_back("generate = naive closure on 1000 seeded seed sets", [&](Outcome& o) {
    std::mt19937_64 rng(kDefaultSeed);
    const auto& entries = catalog.entries();
    std::size_t max_iter = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto& g = entries[rng() % entries.size()].group;
      std::vector<Elem> seed(rng() % 4);
      for (auto& s : seed) s = static_cast<Elem>(rng() % g->order());
      auto r = generate(g, seed);
      max_iter = std::max(max_iter, r.iterations);
      if (to_vec(r.subgroup) != oracle::naive_closure(*g, seed)) o.fail(g->label() + ": closure differs");
      if (r.iterations > g->order()) o.fail(g->label() + ": too many iterations");
    }
    o.detail << "1000 seed sets, max iterations " << max_iter;
  });

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all &= o.pass;
    std::printf("%s %2zu %s: %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), secs, o.pass ? "" : " first failure: ", o.first_failure.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
