#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "selab/errors.hpp"
#include "selab/subgroup.hpp"

using namespace selab;

namespace {

std::vector<GroupPtr> small_groups() {
  return {cyclic(1), cyclic(6), cyclic(8), dihedral(3), dihedral(4), dihedral(6), quaternion8(),
          alternating(4), direct_product(cyclic(2), cyclic(2)).group,
          direct_product(cyclic(2), cyclic(4)).group};
}

Subgroup sub(const GroupPtr& g, std::initializer_list<const char*> names) {
  std::vector<Elem> seed;
  for (const char* n : names) seed.push_back(*g->find_element(n));
  return generated(g, seed);
}

}  // namespace

TEST_CASE("subgroup validation") {
  auto c4 = cyclic(4);
  CHECK_THROWS_AS(Subgroup(c4, {0, 1}), ValidationError);
  CHECK_THROWS_AS(Subgroup(c4, {0, 9}), InputError);
  Subgroup h(c4, {2, 0});
  CHECK(h.to_string() == "{0 2}");
  CHECK(h.size() == 2);
}

TEST_CASE("S3 lattice") {
  auto s3 = symmetric(3);
  CHECK(enumerate_subgroups(s3).size() == 6);
  CHECK(enumerate_subgroups(s3, true).size() == 3);
  auto whole = Subgroup::whole(s3);
  auto derived = higgins_commutator(whole, whole);
  CHECK(derived == sub(s3, {"(1 2 3)"}));
  auto t = sub(s3, {"(1 2)"});
  CHECK(normal_core(t).is_trivial());
  CHECK(normal_closure(t).is_whole());
  CHECK(centralizer(t) == t);
}

TEST_CASE("subgroup enumeration agrees with a subset scan") {
  for (const auto& g : small_groups()) {
    auto subs = enumerate_subgroups(g);
    auto scan = oracle::subgroups_by_subset_scan(*g);
    REQUIRE(subs.size() == scan.size());
    std::sort(scan.begin(), scan.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (std::size_t i = 0; i < scan.size(); ++i) {
      CHECK(std::vector<Elem>(subs[i].elements().begin(), subs[i].elements().end()) == scan[i]);
      CHECK(is_normal(subs[i]) == oracle::normal_by_scan(*g, scan[i]));
    }
  }
}

TEST_CASE("known subgroup counts") {
  CHECK(enumerate_subgroups(dihedral(4)).size() == 10);
  CHECK(enumerate_subgroups(quaternion8()).size() == 6);
  CHECK(enumerate_subgroups(quaternion8(), true).size() == 6);
  CHECK(enumerate_subgroups(alternating(4)).size() == 10);
  CHECK(enumerate_subgroups(alternating(4), true).size() == 3);
  CHECK(enumerate_subgroups(symmetric(4)).size() == 30);
  CHECK(enumerate_subgroups(symmetric(4), true).size() == 4);
  CHECK_THROWS_AS(enumerate_subgroups(symmetric(5)), CapacityError);
}

TEST_CASE("generate matches the naive closure on seeded seed sets") {
  std::mt19937_64 rng(0xC0FFEE);
  for (const auto& g : small_groups()) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Elem> seed(rng() % 4);
      for (auto& s : seed) s = static_cast<Elem>(rng() % g->order());
      auto r = generate(g, seed);
      auto naive = oracle::naive_closure(*g, seed);
      CHECK(std::vector<Elem>(r.subgroup.elements().begin(), r.subgroup.elements().end()) == naive);
      CHECK(r.iterations <= g->order());
    }
  }
}

TEST_CASE("meet, join and order-insensitive family joins") {
  auto d4 = dihedral(4);
  auto subs = enumerate_subgroups(d4);
  std::mt19937_64 rng(7);
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      auto m = meet(a, b), j = join(a, b);
      CHECK(m.is_subset_of(a));
      CHECK(a.is_subset_of(j));
      CHECK(b.is_subset_of(j));
      CHECK(j == join(b, a));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Subgroup> fam;
    for (std::size_t k = rng() % 5; k > 0; --k) fam.push_back(subs[rng() % subs.size()]);
    auto j = join_family(d4, fam);
    std::shuffle(fam.begin(), fam.end(), rng);
    CHECK(j == join_family(d4, fam));
    Subgroup folded = Subgroup::trivial(d4);
    for (const auto& s : fam) folded = join(folded, s);
    CHECK(j == folded);
  }
  CHECK(join_family(d4, {}).is_trivial());
}

TEST_CASE("Higgins criterion on a few groups") {
  for (const auto& g : small_groups()) {
    auto whole = Subgroup::whole(g);
    for (const auto& h : enumerate_subgroups(g)) {
      CHECK(is_normal(h) == higgins_commutator(h, whole).is_subset_of(h));
    }
  }
}

TEST_CASE("normal core routes agree") {
  for (const auto& g : small_groups()) {
    for (const auto& s : enumerate_subgroups(g)) {
      auto core = normal_core(s);
      CHECK(core == normal_core_by_conjugates(s));
      CHECK(is_normal(core));
      CHECK(core.is_subset_of(s));
    }
  }
}

TEST_CASE("images, kernels, quotients") {
  auto s3 = symmetric(3);
  auto sign = hom_enumerate(s3, cyclic(2)).back();
  CHECK(kernel(sign) == sub(s3, {"(1 2 3)"}));
  CHECK(image(sign).is_whole());
  CHECK(preimage(sign, Subgroup::trivial(sign.cod_ptr())) == kernel(sign));
  auto q = quotient(kernel(sign));
  CHECK(q.group->order() == 2);
  CHECK(kernel(q.projection) == kernel(sign));
  CHECK_THROWS_AS(quotient(sub(s3, {"(1 2)"})), InputError);
  auto a3 = sub(s3, {"(1 2 3)"});
  auto ind = induced_group(a3, "A3");
  CHECK(ind.group->order() == 3);
  CHECK(ind.group->is_abelian());
  CHECK(ind.inclusion.is_injective());
  for (Elem a : a3.elements()) CHECK(ind.inclusion(ind.local(a)) == a);
}
