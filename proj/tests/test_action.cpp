#include <doctest.h>

#include "selab/action.hpp"
#include "selab/errors.hpp"

using namespace selab;

namespace {

BAction inversion_action(const GroupPtr& b, const GroupPtr& x) {
  // The nontrivial element of C2 acts by x -> x^-1.
  std::vector<Elem> table(2 * x->order());
  for (Elem e = 0; e < x->order(); ++e) {
    table[e] = e;
    table[x->order() + e] = x->inv(e);
  }
  return BAction(b, x, std::move(table));
}

}  // namespace

TEST_CASE("conjugation action on S3") {
  auto s3 = symmetric(3);
  auto act = conjugation_action(s3);
  Elem t = *s3->find_element("(1 2)");
  Elem c = *s3->find_element("(1 2 3)");
  CHECK(s3->element_name(act.apply(t, c)) == "(1 3 2)");
  CHECK_FALSE(act.is_trivial());
}

TEST_CASE("action axioms are validated") {
  auto c2 = cyclic(2), c3 = cyclic(3);
  // b acts by a non-homomorphism swapping 0 and 1.
  CHECK_THROWS_AS(BAction(c2, c3, {0, 1, 2, 1, 0, 2}), ValidationError);
  // C3 cannot act by inversion: a(g, a(g, x)) differs from a(g^2, x).
  auto c5 = cyclic(5);
  std::vector<Elem> bad(15);
  for (Elem g = 0; g < 3; ++g)
    for (Elem e = 0; e < 5; ++e) bad[g * 5 + e] = g == 0 ? e : static_cast<Elem>((5 - e) % 5);
  CHECK_THROWS_AS(BAction(c3, c5, bad), ValidationError);
}

TEST_CASE("semidirect product of the inversion action is nonabelian of order 6") {
  auto act = inversion_action(cyclic(2), cyclic(3));
  auto ext = semidirect_product(act);
  CHECK(ext.middle().order() == 6);
  CHECK_FALSE(ext.middle().is_abelian());
  CHECK(ext.middle().label() == "C3:C2");
  CHECK(action_of_split_extension(ext) == act);
  auto trivial = semidirect_product(trivial_action(cyclic(2), cyclic(3)));
  CHECK(trivial.middle().is_abelian());
}

TEST_CASE("actions enumerate once per hom into Aut(X)") {
  auto c2 = cyclic(2);
  CHECK(enumerate_actions(c2, cyclic(3)).size() == 2);
  CHECK(enumerate_actions(c2, direct_product(cyclic(2), cyclic(2)).group).size() == 4);
  CHECK(enumerate_actions(cyclic(3), cyclic(4)).size() == 1);
  for (const auto& act : enumerate_actions(cyclic(4), cyclic(5))) {
    auto back = action_of_split_extension(semidirect_product(act));
    CHECK(back == act);
    auto aut = automorphism_group(act.target_ptr());
    CHECK(action_from_hom(act.as_automorphism_hom(aut), aut) == act);
  }
}

TEST_CASE("extension round trip through the semidirect comparison") {
  auto s3 = symmetric(3);
  auto a3 = generated(s3, std::vector<Elem>{*s3->find_element("(1 2 3)")});
  auto t = generated(s3, std::vector<Elem>{*s3->find_element("(1 2)")});
  auto ext = extension_from_decomposition(a3, t);
  CHECK(ext.kernel_group().order() == 3);
  CHECK(ext.base().order() == 2);
  auto cmp = compare_with_semidirect(ext);
  CHECK(cmp.iso.hom().is_injective());
  CHECK(cmp.semidirect.middle().order() == 6);
  CHECK_THROWS_AS(extension_from_decomposition(t, a3), InputError);
}

TEST_CASE("change of base and fibre product orders") {
  auto act = inversion_action(cyclic(2), cyclic(3));
  auto ext = semidirect_product(act);
  auto z = GroupHom::zero(cyclic(4), ext.base_ptr());
  auto pulled = change_of_base(ext, z);
  CHECK(pulled.middle().order() == 12);
  CHECK(action_of_split_extension(pulled).is_trivial());
  auto fp = fibre_product(ext, ext);
  CHECK(fp.ext.middle().order() == 18);
  CHECK(fp.ext.kernel_group().order() == 9);
}

TEST_CASE("action core routes agree and the core is invariant") {
  for (const auto& act : enumerate_actions(cyclic(2), direct_product(cyclic(2), cyclic(2)).group)) {
    for (const auto& s : enumerate_subgroups(act.target_ptr())) {
      auto core = action_core(s, act);
      CHECK(core == action_core_by_intersection(s, act));
      CHECK(core == action_core_by_join(s, act));
      CHECK(act.is_invariant(core));
      CHECK(core.is_subset_of(s));
    }
  }
  // Conjugation action: the action core is the normal core.
  auto s3 = symmetric(3);
  auto t = generated(s3, std::vector<Elem>{*s3->find_element("(1 2)")});
  CHECK(action_core(t, conjugation_action(s3)).is_trivial());
}

TEST_CASE("split extension core is terminal") {
  auto ext = semidirect_product(conjugation_action(symmetric(3)));
  for (const auto& s : enumerate_subgroups(ext.kernel_ptr())) {
    auto core = split_extension_core(s, ext);
    CHECK(core.u.is_injective());
    CHECK(core.v.is_injective());
    CHECK(core.kernel_part == normal_core(s));
    CHECK_FALSE(find_terminality_violation(s, ext, core));
  }
}

TEST_CASE("point morphism counts agree with equivariant counts") {
  auto b = cyclic(2);
  auto acts = enumerate_actions(b, cyclic(3));
  auto acts4 = enumerate_actions(b, cyclic(4));
  for (const auto& f : acts) {
    for (const auto& t : acts4) {
      auto ef = semidirect_product(f), et = semidirect_product(t);
      CHECK(count_point_morphisms(ef, et, 12) == count_equivariant_morphisms(f, t, 12));
    }
    for (const auto& t : acts) {
      CHECK(count_point_morphisms(semidirect_product(f), semidirect_product(t), 12) ==
            count_equivariant_morphisms(f, t, 12));
    }
  }
}
