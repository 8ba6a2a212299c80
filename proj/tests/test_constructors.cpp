#include <array>

#include "cdlat/constructors.hpp"
#include "doctest.h"
#include "naive.hpp"

using namespace cdlat;

TEST_SUITE("constructors") {

TEST_CASE("abelian spec forms") {
  AbelianSpec a{{6, 4, 9}};
  CHECK(a.order() == 216);
  CHECK(a.elementary_divisors() ==
        std::vector<std::uint32_t>{2, 3, 4, 9});
  CHECK(a.invariant_factors() == std::vector<std::uint32_t>{6, 36});
  CHECK(a.exponent() == 36);
  CHECK(!a.is_elementary_abelian_2());
  CHECK(!a.is_z2m_z4_type());

  CHECK(AbelianSpec{{2, 2, 2}}.is_elementary_abelian_2());
  CHECK(AbelianSpec{{4}}.is_z2m_z4_type());
  CHECK(AbelianSpec{{2, 4}}.is_z2m_z4_type());
  CHECK(AbelianSpec{{2, 2, 4}}.is_z2m_z4_type());
  CHECK(!AbelianSpec{{4, 4}}.is_z2m_z4_type());
  CHECK(!AbelianSpec{{8, 2}}.is_z2m_z4_type());
  CHECK(!AbelianSpec{{2, 2}}.is_z2m_z4_type());
  // Z2xZ4 under a different factor list
  CHECK(AbelianSpec{{8}}.invariant_factors() ==
        std::vector<std::uint32_t>{8});
  CHECK(AbelianSpec{{2, 12}}.elementary_divisors() ==
        std::vector<std::uint32_t>{2, 3, 4});
}

TEST_CASE("abelian table is the expected product") {
  GroupTable g = abelian(AbelianSpec{{2, 3}});
  CHECK(g.order() == 6);
  // index = d0 + 2*d1; generator strides 1 and 2
  CHECK(g.mul(1, 1) == 0);
  CHECK(element_order(g, 2) == 3);
  CHECK(element_order(g, 3) == 6);  // (1,1) generates Z6
  CHECK(group_predicates(g).is_abelian);
  CHECK(g.name(3) == "(1,1)");
  GroupTable t = abelian(AbelianSpec{});
  CHECK(t.order() == 1);
  CHECK_THROWS_AS(abelian(AbelianSpec{{1}}), std::invalid_argument);
}

TEST_CASE("dicyclic structure") {
  for (std::uint32_t n : {1u, 2u, 3u, 5u}) {
    CAPTURE(n);
    GroupTable g = dicyclic(n);
    CHECK(g.order() == 4 * n);
    Elem a = 1, x = 2 * n;
    CHECK(element_order(g, a) == 2 * n);
    CHECK(element_order(g, x) == 4);
    // x^2 = a^n
    CHECK(g.mul(x, x) == n % (2 * n));
    // a^x = a^-1
    CHECK(g.conj(a, x) == g.inv(a));
    if (n > 1) CHECK(center(g).order == 2);
  }
  CHECK_THROWS_AS(dicyclic(0), std::invalid_argument);
}

TEST_CASE("generalized dicyclic extends dicyclic") {
  // with A = Z_2n and t = a^n the tables agree entry for entry
  for (std::uint32_t n : {2u, 3u, 4u}) {
    CAPTURE(n);
    GroupTable d = dicyclic(n);
    GroupTable gd = generalized_dicyclic(AbelianSpec{{2 * n}}, n);
    REQUIRE(d.order() == gd.order());
    bool same = true;
    for (Elem i = 0; i < d.order() && same; ++i)
      for (Elem j = 0; j < d.order(); ++j)
        if (d.mul(i, j) != gd.mul(i, j)) {
          same = false;
          break;
        }
    CHECK(same);
  }
  // x^2 = t and inversion action
  GroupTable g = generalized_dicyclic(AbelianSpec{{2, 4}}, 1);
  std::uint32_t na = 8;
  Elem x = na;
  CHECK(g.mul(x, x) == 1);
  for (Elem a = 0; a < na; ++a) CHECK(g.conj(a, x) == g.inv(a));
  CHECK_THROWS_AS(generalized_dicyclic(AbelianSpec{{3, 3}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generalized_dicyclic(AbelianSpec{{2, 4}}, 2),
                  std::invalid_argument);  // order 4, not an involution
}

TEST_CASE("involutions") {
  GroupTable g = abelian(AbelianSpec{{2, 4}});
  // elements of order <= 2 beyond the identity: (1,0)=1, (0,2)=4, (1,2)=5
  CHECK(involutions(g) == std::vector<Elem>{1, 4, 5});
}

TEST_CASE("semidirect products") {
  // dihedral of order 10: Z5 x| Z2 by inversion
  GroupTable d10 =
      semidirect_by_automorphism(AbelianSpec{{5}}, std::array<Elem, 1>{4}, 2);
  CHECK(d10.order() == 10);
  CHECK(center(d10).order == 1);
  CHECK(derived_subgroup(d10).order == 5);
  Elem x = 5;
  CHECK(d10.mul(x, x) == 0);
  CHECK(d10.conj(1, x) == d10.inv(1));

  // trivial action k = 1 returns A
  GroupTable a = semidirect_by_automorphism(AbelianSpec{{6}},
                                            std::array<Elem, 1>{1}, 1);
  CHECK(a.order() == 6);
  CHECK_THROWS_AS(semidirect_by_automorphism(AbelianSpec{{6}},
                                             std::array<Elem, 1>{5}, 1),
                  std::invalid_argument);

  // alternating group A4 = (Z2 x Z2) x| Z3 cycling the involutions
  GroupTable a4 = semidirect_abelian(AbelianSpec{{2, 2}}, AbelianSpec{{3}},
                                     {{2, 3}});
  CHECK(a4.order() == 12);
  CHECK(center(a4).order == 1);
  CHECK(derived_subgroup(a4).order == 4);
  CHECK(!group_predicates(a4).nilpotency_class.has_value());

  // bad inputs
  CHECK_THROWS_AS(semidirect_by_automorphism(AbelianSpec{{5}},
                                             std::array<Elem, 1>{2}, 2),
                  std::invalid_argument);  // a -> a^2 has order 4, not | 2
  CHECK_THROWS_AS(semidirect_abelian(AbelianSpec{{2, 2}}, AbelianSpec{{3}},
                                     {{3, 3}}),
                  std::invalid_argument);  // not a bijection
}

TEST_CASE("direct product and central quotient") {
  GroupTable g = direct_product(dicyclic(2), abelian(AbelianSpec{{3}}));
  CHECK(g.order() == 24);
  CHECK(center(g).order == 6);
  Subgroup n = generated_subgroup(g, std::array<Elem, 1>{2});  // (a^2, 0)
  CHECK(n.order == 2);
  GroupTable q = quotient_by_central(g, n);
  CHECK(q.order() == 12);
  // Q8 / Z(Q8) x Z3 = Z2 x Z2 x Z3
  CHECK(group_predicates(q).is_abelian);
  CHECK(exponent(q) == 6);
  // refusing a non-central subgroup
  GroupTable d = dicyclic(3);
  Subgroup h = generated_subgroup(d, std::array<Elem, 1>{2});
  CHECK_THROWS_AS(quotient_by_central(d, h), std::invalid_argument);
}

TEST_CASE("extraspecial groups of order p^3") {
  GroupTable d8 = extraspecial(2, 3, ExtraspecialKind::d8);
  CHECK(d8.order() == 8);
  CHECK(exponent(d8) == 4);
  CHECK(involutions(d8).size() == 5);  // dihedral: 5 involutions
  GroupTable q8 = extraspecial(2, 3, ExtraspecialKind::q8);
  CHECK(involutions(q8).size() == 1);  // quaternion: only a^2

  GroupTable h27 = extraspecial(3, 3, ExtraspecialKind::exp_p);
  CHECK(h27.order() == 27);
  CHECK(exponent(h27) == 3);
  CHECK(center(h27).order == 3);
  GroupTable m27 = extraspecial(3, 3, ExtraspecialKind::exp_p2);
  CHECK(exponent(m27) == 9);
  CHECK(center(m27).order == 3);

  CHECK_THROWS_AS(extraspecial(2, 3, ExtraspecialKind::exp_p),
                  std::invalid_argument);
  CHECK_THROWS_AS(extraspecial(3, 4, ExtraspecialKind::exp_p),
                  std::invalid_argument);
  CHECK_THROWS_AS(extraspecial(4, 3, ExtraspecialKind::d8),
                  std::invalid_argument);
}

TEST_CASE("extraspecial groups of order 32") {
  GroupTable plus = extraspecial(2, 5, ExtraspecialKind::d8);
  GroupTable minus = extraspecial(2, 5, ExtraspecialKind::q8);
  CHECK(plus.order() == 32);
  CHECK(minus.order() == 32);
  CHECK(center(plus).order == 2);
  CHECK(center(minus).order == 2);
  CHECK(derived_subgroup(plus).order == 2);
  // the two types differ in their involution counts (19 vs 11)
  CHECK(involutions(plus).size() != involutions(minus).size());
}

TEST_CASE("abelian types of a given order") {
  auto t8 = abelian_types_of_order(8);
  REQUIRE(t8.size() == 3);
  CHECK(t8[0].factors == std::vector<std::uint32_t>{8});
  CHECK(t8[1].factors == std::vector<std::uint32_t>{2, 4});
  CHECK(t8[2].factors == std::vector<std::uint32_t>{2, 2, 2});
  CHECK(abelian_types_of_order(1).size() == 1);
  CHECK(abelian_types_of_order(12).size() == 2);
  CHECK(abelian_types_of_order(16).size() == 5);
  CHECK(abelian_types_of_order(36).size() == 4);
}

}  // TEST_SUITE
