#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "selab/errors.hpp"
#include "selab/group.hpp"

using namespace selab;

TEST_CASE("catalog constructors have the expected orders") {
  CHECK(cyclic(1)->order() == 1);
  CHECK(cyclic(16)->order() == 16);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(symmetric(n)->order() == oracle::factorial(n));
    CHECK(alternating(n)->order() == (n < 2 ? 1 : oracle::factorial(n) / 2));
  }
  CHECK(quaternion8()->order() == 8);
}

TEST_CASE("dihedral order matches the closure of a rotation and a reflection") {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<int> rot(n), ref(n);
    for (std::size_t i = 0; i < n; ++i) {
      rot[i] = static_cast<int>((i + 1) % n);
      ref[i] = static_cast<int>((n - i) % n);
    }
    CHECK(dihedral(n)->order() == oracle::permutation_closure_size({rot, ref}));
  }
}

TEST_CASE("element orders and abelianness") {
  auto q = quaternion8();
  CHECK_FALSE(q->is_abelian());
  std::size_t order_two = 0;
  for (Elem a = 0; a < 8; ++a) order_two += q->element_order(a) == 2;
  CHECK(order_two == 1);
  CHECK(cyclic(12)->is_abelian());
  CHECK_FALSE(symmetric(3)->is_abelian());
  auto d4 = dihedral(4);
  CHECK(d4->element_order(1) == 4);
}

TEST_CASE("symmetric group uses cycle names and right-to-left composition") {
  auto s3 = symmetric(3);
  auto t12 = s3->find_element("(1 2)");
  auto t23 = s3->find_element("(2 3)");
  REQUIRE(t12);
  REQUIRE(t23);
  // (2 3) is applied first: 1 -> 2, 2 -> 3, 3 -> 1.
  auto prod = s3->mul(*t12, *t23);
  CHECK(s3->element_name(prod) == "(1 2 3)");
  CHECK(s3->element_name(0) == "()");
  auto p = parse_cycles("(1 2)(3 4)", 4);
  REQUIRE(p);
  CHECK(cycle_notation(*p) == "(1 2)(3 4)");
  CHECK_FALSE(parse_cycles("(1 5)", 4));
}

TEST_CASE("table validation names the failed axiom") {
  // Subtraction mod 3 has identity on the right only.
  std::vector<Elem> sub = {0, 2, 1, 1, 0, 2, 2, 1, 0};
  CHECK_THROWS_AS(validate_group_table(3, sub), ValidationError);
  // Identity row/column correct, inverses exist, associativity fails.
  // Loop of order 5 that is not a group.
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  try {
    validate_group_table(5, loop);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.axiom().find("associativ") != std::string::npos);
    CHECK(e.witness().front() == '(');
    // The witness triple actually violates associativity.
    unsigned a, b, c;
    char ch;
    std::istringstream in(e.witness());
    in >> ch >> a >> ch >> b >> ch >> c;
    auto m = [&](unsigned x, unsigned y) { return loop[x * 5 + y]; };
    CHECK(m(m(a, b), c) != m(a, m(b, c)));
  }
}

TEST_CASE("cayley table round trip") {
  auto d4 = dihedral(4);
  std::stringstream ss;
  write_cayley_table(ss, *d4);
  auto back = read_cayley_table(ss, "D4");
  CHECK(std::equal(d4->table().begin(), d4->table().end(), back->table().begin()));
  std::istringstream bad("order 2\n0 1\n1\n");
  CHECK_THROWS(read_cayley_table(bad, "bad"));
}

TEST_CASE("homomorphism enumeration matches small counts") {
  CHECK(hom_enumerate(cyclic(2), cyclic(3)).size() == 1);
  CHECK(hom_enumerate(cyclic(2), cyclic(2)).size() == 2);
  // Homs C_m -> C_n number gcd(m, n).
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t n = 1; n <= 8; ++n)
      CHECK(hom_enumerate(cyclic(m), cyclic(n)).size() == std::gcd(m, n));
  // Homs S3 -> C2: trivial and sign.
  CHECK(hom_enumerate(symmetric(3), cyclic(2)).size() == 2);
  CHECK_THROWS_AS(hom_enumerate(symmetric(4), cyclic(2), 12), CapacityError);
}

TEST_CASE("hom enumeration agrees with a brute-force map scan") {
  std::vector<GroupPtr> gs = {cyclic(2), cyclic(4), dihedral(3), cyclic(3)};
  for (const auto& x : gs) {
    for (const auto& y : gs) {
      std::size_t brute = 0;
      std::vector<Elem> map(x->order(), 0);
      for (;;) {
        if (is_homomorphism(map, *x, *y)) ++brute;
        std::size_t i = 0;
        while (i < map.size() && ++map[i] == y->order()) map[i++] = 0;
        if (i == map.size()) break;
      }
      CHECK(hom_enumerate(x, y).size() == brute);
    }
  }
}

TEST_CASE("automorphism groups agree with the bijection scan") {
  CHECK(automorphism_group(symmetric(3)).group->order() == 6);
  CHECK(automorphisms_by_bijection_scan(*direct_product(cyclic(2), cyclic(2)).group).size() == 6);
  for (const auto& g : {cyclic(5), cyclic(8), dihedral(4), quaternion8(),
                        direct_product(cyclic(2), cyclic(2)).group}) {
    auto aut = automorphism_group(g);
    auto scan = automorphisms_by_bijection_scan(*g);
    REQUIRE(aut.automorphisms.size() == scan.size());
    for (std::size_t i = 0; i < scan.size(); ++i) {
      auto m = aut.automorphisms[i].hom().map();
      CHECK(std::vector<Elem>(m.begin(), m.end()) == scan[i]);
    }
    // mul(i, j) is composition.
    for (Elem i = 0; i < aut.group->order(); ++i)
      for (Elem j = 0; j < aut.group->order(); ++j)
        for (Elem e = 0; e < g->order(); ++e)
          CHECK(aut.evaluate(aut.group->mul(i, j), e) == aut.evaluate(i, aut.evaluate(j, e)));
  }
}

TEST_CASE("hom input checks") {
  auto c2 = cyclic(2), c3 = cyclic(3);
  CHECK_THROWS_AS(is_homomorphism(std::vector<Elem>{0}, *c2, *c3), InputError);
  CHECK_THROWS_AS(is_homomorphism(std::vector<Elem>{0, 7}, *c2, *c3), InputError);
  CHECK_THROWS_AS(GroupHom(c2, c3, {0, 1}), ValidationError);
  auto f = GroupHom::identity(c2);
  CHECK_THROWS_AS(compose(f, GroupHom::zero(c3, c3)), InputError);
}

TEST_CASE("direct product projections and pairing") {
  auto p = direct_product(cyclic(2), cyclic(3));
  CHECK(p.group->order() == 6);
  CHECK(p.group->is_abelian());
  CHECK(p.group->label() == "C2xC3");
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 3; ++y) {
      CHECK(p.proj1(p.pair(x, y)) == x);
      CHECK(p.proj2(p.pair(x, y)) == y);
    }
  auto c6 = cyclic(6);
  auto f = hom_enumerate(c6, cyclic(2)).back();
  auto g = hom_enumerate(c6, cyclic(3)).back();
  CHECK_THROWS(pairing(f, g, p));  // codomains are different objects
  auto f2 = GroupHom(c6, p.left, std::vector<Elem>(f.map().begin(), f.map().end()));
  auto g2 = GroupHom(c6, p.right, std::vector<Elem>(g.map().begin(), g.map().end()));
  CHECK(pairing(f2, g2, p).is_injective());
}

TEST_CASE("construct_group parses specs") {
  CHECK(construct_group("direct_product(cyclic(2), dihedral(3))")->order() == 12);
  CHECK(construct_group("quaternion8")->label() == "Q8");
  CHECK(construct_group("alternating(4)")->order() == 12);
  CHECK_THROWS_AS(construct_group("wreath(2)"), InputError);
  CHECK_THROWS_AS(construct_group("dihedral(2)"), InputError);
  CHECK_THROWS_AS(construct_group("symmetric(6)"), InputError);
}
