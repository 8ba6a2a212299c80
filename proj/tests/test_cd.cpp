#include <map>

#include "cdlat/cd.hpp"
#include "cdlat/spec.hpp"
#include "doctest.h"
#include "naive.hpp"

using namespace cdlat;

TEST_SUITE("cd") {

TEST_CASE("measure agrees with the naive centralizer") {
  GroupTable g = dicyclic(3);
  SubgroupSet s = all_subgroups(g);
  std::vector<std::uint64_t> fast = measure_table(g, s);
  REQUIRE(fast.size() == s.size());
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    std::vector<Elem> hs;
    s[i].bits.for_each([&](std::uint32_t e) { hs.push_back(e); });
    std::uint64_t naive_measure =
        std::uint64_t{s[i].order} * naive::centralizer_elems(g, hs).size();
    CHECK(measure(g, s[i]) == naive_measure);
    CHECK(fast[i] == naive_measure);
  }
}

TEST_CASE("abelian groups have the singleton lattice") {
  for (const char* name : {"ab:4", "ab:2,2", "ab:3,9", "ab:2,3,5"}) {
    CAPTURE(name);
    GroupTable g = build_group(parse_spec(name));
    GroupAnalysis an = analyze(g);
    CHECK(an.cd.members.size() == 1);
    CHECK(an.cd.members[0].order == g.order());
    CHECK(an.cd.m_star == std::uint64_t{g.order()} * g.order());
    CHECK(an.cd.shape == LatticeShape{LatticeShape::Kind::chain, 0});
    CHECK(an.cd.hasse.empty());
  }
}

TEST_CASE("quaternion lattice is the width-3 quasi-antichain") {
  GroupAnalysis an = analyze(dicyclic(2));
  CHECK(an.cd.m_star == 16);
  REQUIRE(an.cd.members.size() == 5);
  CHECK(an.cd.members[an.cd.minimum].order == 2);
  CHECK(an.cd.members[an.cd.maximum].order == 8);
  CHECK(an.cd.shape == LatticeShape{LatticeShape::Kind::quasi_antichain, 3});
  CHECK(an.cd.hasse.size() == 6);
  // meet of two distinct middles is the minimum, join the maximum
  CHECK(an.cd.meet_of(1, 2) == an.cd.minimum);
  CHECK(an.cd.join_of(1, 2) == an.cd.maximum);
  CHECK(an.cd.meet_of(4, 2) == 2);  // absorbing against the top
}

TEST_CASE("dicyclic 12 keeps only the cyclic half") {
  GroupTable g = dicyclic(3);
  GroupAnalysis an = analyze(g);
  REQUIRE(an.cd.members.size() == 1);
  CHECK(an.cd.members[0].order == 6);
  CHECK(an.cd.m_star == 36);
  // the member is exactly the a-power block of the indexing
  for (Elem x = 0; x < 6; ++x) CHECK(an.cd.members[0].bits.test(x));
}

TEST_CASE("extraspecial 32 lattice mirrors the rank-4 subspace lattice") {
  for (const char* name : {"xsp:2,5,d", "xsp:2,5,q"}) {
    CAPTURE(name);
    GroupTable g = build_group(parse_spec(name));
    GroupAnalysis an = analyze(g);
    CHECK(an.cd.m_star == 64);
    CHECK(an.cd.members.size() == 67);
    CHECK(an.cd.shape == LatticeShape{LatticeShape::Kind::general, 0});
    std::map<std::uint32_t, int> per_order;
    for (const Subgroup& m : an.cd.members) ++per_order[m.order];
    CHECK(per_order == std::map<std::uint32_t, int>{
                           {2, 1}, {4, 15}, {8, 35}, {16, 15}, {32, 1}});
  }
}

TEST_CASE("shape classifier on synthetic posets") {
  auto bits = [](std::initializer_list<std::uint32_t> elems) {
    Bitset b(8);
    for (std::uint32_t e : elems) b.set(e);
    return b;
  };
  // chain 1 < 12 < 123
  CHECK(classify_shape({bits({1}), bits({1, 2}), bits({1, 2, 3})}) ==
        LatticeShape{LatticeShape::Kind::chain, 2});
  CHECK(classify_shape({bits({1})}) ==
        LatticeShape{LatticeShape::Kind::chain, 0});
  // diamond with two incomparable middles
  CHECK(classify_shape({bits({1}), bits({1, 2}), bits({1, 3}),
                        bits({1, 2, 3})}) ==
        LatticeShape{LatticeShape::Kind::quasi_antichain, 2});
  // cube face poset slice: middles on two levels -> general
  CHECK(classify_shape({bits({1}), bits({1, 2}), bits({1, 2, 3}),
                        bits({1, 4}), bits({1, 2, 3, 4})}) ==
        LatticeShape{LatticeShape::Kind::general, 0});
}

TEST_CASE("max self-centralizing subgroup") {
  GroupTable g = dicyclic(3);
  const Subgroup& a = max_self_centralizing(g, all_subgroups(g));
  CHECK(a.order == 6);
  GroupTable q = dicyclic(2);
  CHECK(max_self_centralizing(q, all_subgroups(q)).order == 4);
}

TEST_CASE("centralizer-equals-center predicate") {
  // quaternion: C(G) = Z(G) for the only non-abelian subgroup (G itself)
  GroupTable q = dicyclic(2);
  CHECK(cgz_predicate(q, all_subgroups(q)));
  // dihedral of order 16 contains D8 with C(D8) = Z(G) = Z(D8): still true;
  // the product with an extra central factor breaks it
  GroupTable g = build_group(parse_spec("prod:dic:2*ab:2"));
  CHECK(!cgz_predicate(g, all_subgroups(g)));
}

TEST_CASE("duality inside the computed lattice") {
  GroupTable g = build_group(parse_spec("xsp:3,3,p"));
  GroupAnalysis an = analyze(g);
  for (const Subgroup& m : an.cd.members) {
    Subgroup c = centralizer(g, m);
    auto ci = an.cd.member_index(c.bits);
    REQUIRE(ci.has_value());
    Subgroup cc = centralizer(g, an.cd.members[*ci]);
    CHECK(cc.bits == m.bits);
  }
}

}  // TEST_SUITE
