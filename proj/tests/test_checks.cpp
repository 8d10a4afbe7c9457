#include <doctest.h>

#include <algorithm>

#include "selab/checks.hpp"
#include "selab/errors.hpp"

using namespace selab;

TEST_CASE("decompositions of S3") {
  auto s3 = symmetric(3);
  // A3 with each of the three transposition subgroups, plus the two trivial splittings.
  auto decs = enumerate_decompositions(s3);
  CHECK(decs.size() == 5);
  for (const auto& [k, b] : decs) CHECK(is_decomposition(k, b));
}

TEST_CASE("theorem checks hold on small groups") {
  for (const auto& g : {symmetric(3), dihedral(4), quaternion8(), alternating(4)}) {
    CHECK(check_higgins_normality(g).holds());
    CHECK(check_join_normals_normal(g).holds());
    CHECK(check_commutator_join_all(g).holds());
    CHECK(check_three_subobjects(g).holds());
    CHECK(check_normal_core_oracle(g).holds());
    for (const auto& [k, b] : enumerate_decompositions(g)) {
      CHECK(check_intersections_binary(k, b).holds());
      CHECK(check_intersections_family(k, b).holds());
      auto ext = extension_from_decomposition(k, b);
      CHECK(check_kernel_geometric_all(ext, {}).holds());
    }
    for (const auto& s : enumerate_subgroups(g)) {
      CHECK(check_clots(s).holds());
      CHECK(check_normal_core_pullback(s).holds());
    }
  }
}

TEST_CASE("clot restriction detects normality") {
  auto s3 = symmetric(3);
  for (const auto& s : enumerate_subgroups(s3)) CHECK(clot_restricts(s) == is_normal(s));
}

TEST_CASE("check input validation") {
  auto s3 = symmetric(3);
  auto subs = enumerate_subgroups(s3);
  auto t = subs[1];  // a transposition subgroup, not normal
  CHECK_THROWS_AS(check_intersections_binary(t, Subgroup::whole(s3)), InputError);
  std::vector<Subgroup> chain = {Subgroup::whole(s3), Subgroup::trivial(s3)};
  CHECK_THROWS_AS(check_commutator_join(s3, chain), InputError);
  std::vector<Subgroup> bad = {Subgroup::trivial(s3), t};
  CHECK_THROWS_AS(check_commutator_join(s3, bad), InputError);
}

TEST_CASE("core checks on semidirect products") {
  for (const auto& act : enumerate_actions(cyclic(2), cyclic(4))) {
    auto ext = semidirect_product(act);
    CHECK(check_core_adjunction(ext).holds());
    CHECK(check_core_terminality(ext).holds());
    CHECK(check_action_core_routes(act).holds());
  }
  CHECK(check_action_core_routes(conjugation_action(dihedral(4))).holds());
}

TEST_CASE("fibrewise adjunction on a small split epi") {
  // p : C2 x C2 -> C2, first projection, with section x -> (x, 0).
  auto dp = direct_product(cyclic(2), cyclic(2));
  auto sec = GroupHom(dp.left, dp.group, {dp.pair(0, 0), dp.pair(1, 0)});
  std::vector<SplitExtension> over_b;
  for (const auto& x : {cyclic(2), cyclic(3)})
    for (const auto& act : enumerate_actions(dp.left, x)) over_b.push_back(semidirect_product(act));
  for (const auto& act : enumerate_actions(dp.group, cyclic(3))) {
    auto d = semidirect_product(act);
    auto r = check_fibrewise_adjunction(dp.proj1, sec, d, over_b);
    CHECK(r.holds());
    CHECK(r.cases == over_b.size());
  }
}

TEST_CASE("reports serialize") {
  auto r = check_higgins_normality(symmetric(3));
  auto j = to_json(r);
  CHECK(j["check"] == r.check);
  CHECK(j["verdict"] == "holds");
  CHECK_FALSE(j.contains("witness"));
  CHECK(to_line(r).rfind("holds ", 0) == 0);
  CheckReport f{"x", "y", Verdict::fails, "w", 1.0, 1};
  CHECK(to_json(f)["witness"] == "w");
  CHECK(to_string(Verdict::skipped_capacity) == "skipped-capacity");
}

TEST_CASE("a corrupted subpoint family is reported with a minimized witness") {
  auto s3 = symmetric(3);
  auto decs = enumerate_decompositions(s3);
  auto it = std::find_if(decs.begin(), decs.end(),
                         [](const auto& d) { return d.first.size() == 3 && d.second.size() == 2; });
  REQUIRE(it != decs.end());
  auto ext = extension_from_decomposition(it->first, it->second);
  auto subpoints = enumerate_subpoints(ext);
  std::vector<PointSubobject> family = subpoints;
  CHECK(check_kernel_geometric(ext, family).holds());
  // Claim every kernel part is trivial: the whole point then joins to A
  // while the kernel parts join to 0.
  for (auto& sp : family) sp.kernel_part = Subgroup::trivial(sp.kernel_part.parent_ptr());
  auto r = check_kernel_geometric(ext, family);
  CHECK(r.verdict == Verdict::fails);
  REQUIRE(r.witness);
  // Minimized to the single member that is the whole middle group.
  CHECK(*r.witness == "[{0 1 2 3 4 5}]");
}

TEST_CASE("aggregate keeps the first failure") {
  CheckReport ok{"a", "x", Verdict::holds, std::nullopt, 1.0, 3};
  CheckReport bad{"b", "y", Verdict::fails, "w", 2.0, 4};
  CheckReport skip{"c", "z", Verdict::skipped_capacity, "cap", 0.0, 0};
  auto r = aggregate("all", "i", {ok, skip, bad, bad});
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.cases == 11);
  CHECK(*r.witness == "b [y] w");
  CHECK(aggregate("all", "i", {ok, skip}).verdict == Verdict::skipped_capacity);
  CHECK(aggregate("all", "i", {}).holds());
}
