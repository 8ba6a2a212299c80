#include <map>
#include <set>

#include "cdlat/constructors.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/subgroups.hpp"
#include "doctest.h"
#include "naive.hpp"

using namespace cdlat;

TEST_SUITE("subgroups") {

TEST_CASE("cyclic prime order has exactly two subgroups") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    GroupTable g = abelian(AbelianSpec{{p}});
    SubgroupSet s = all_subgroups(g);
    CHECK(s.size() == 2);
    CHECK(s[0].order == 1);
    CHECK(s[1].order == p);
  }
}

TEST_CASE("quaternion group has the six known subgroups") {
  GroupTable g = dicyclic(2);
  SubgroupSet s = all_subgroups(g);
  REQUIRE(s.size() == 6);
  // expected from the subset brute force, frozen: 1, Z, three Z4, G
  CHECK(naive::count_subgroups_by_subsets(g) == 6);
  std::multiset<std::uint32_t> orders;
  for (const Subgroup& h : s) orders.insert(h.order);
  CHECK(orders == std::multiset<std::uint32_t>{1, 2, 4, 4, 4, 8});
}

TEST_CASE("elementary abelian 16 matches the subspace count") {
  // 1 + 15 + 35 + 15 + 1 = 67, frozen from the Gaussian binomials
  GroupTable g = abelian(AbelianSpec{{2, 2, 2, 2}});
  SubgroupSet s = all_subgroups(g);
  CHECK(s.size() == 67);
  std::map<std::uint32_t, int> per_order;
  for (const Subgroup& h : s) ++per_order[h.order];
  CHECK(per_order == std::map<std::uint32_t, int>{
                         {1, 1}, {2, 15}, {4, 35}, {8, 15}, {16, 1}});
}

TEST_CASE("canonical order and index lookup") {
  GroupTable g = dicyclic(3);
  SubgroupSet s = all_subgroups(g);
  for (std::uint32_t i = 1; i < s.size(); ++i)
    CHECK(subgroup_less(s[i - 1], s[i]));
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    auto found = s.index_of(s[i].bits);
    REQUIRE(found.has_value());
    CHECK(*found == i);
  }
  Bitset nonsense(g.order());
  nonsense.set(1);
  CHECK(!s.index_of(nonsense).has_value());
}

TEST_CASE("fast path equals one-element-extension oracle") {
  for (const char* name : {"dic:3", "xsp:2,3,d", "xsp:3,3,p", "ab:2,6"}) {
    CAPTURE(name);
    GroupTable g = build_group(parse_spec(name));
    CHECK(verify_complete(g, all_subgroups(g)));
  }
}

TEST_CASE("verify_complete rejects a corrupted set") {
  GroupTable g = dicyclic(2);
  SubgroupSet full = all_subgroups(g);
  std::vector<Subgroup> subs(full.begin(), full.end());
  subs.erase(subs.begin() + 2);  // drop one of the cyclic order-4 subgroups
  SubgroupSet broken = SubgroupSet::from_subgroups(g, subs);
  CHECK(!verify_complete(g, broken));
}

TEST_CASE("digest is identical across thread counts") {
  for (const char* name : {"xsp:2,5,d", "dic:12", "xsp:5,3,p2"}) {
    CAPTURE(name);
    GroupTable g = build_group(parse_spec(name));
    EnumLimits one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(subgroup_set_digest(all_subgroups(g, one)) ==
          subgroup_set_digest(all_subgroups(g, four)));
  }
}

TEST_CASE("subgroup cap raises a resource error") {
  GroupTable g = abelian(AbelianSpec{{2, 2, 2, 2}});
  EnumLimits tight;
  tight.max_subgroups = 20;
  CHECK_THROWS_AS(all_subgroups(g, tight), resource_error);
}

TEST_CASE("dicyclic subgroup counts match the reference enumerator") {
  for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
    CAPTURE(n);
    GroupTable g = dicyclic(n);
    CHECK(all_subgroups(g).size() == reference_subgroups(g).size());
  }
}

}  // TEST_SUITE
