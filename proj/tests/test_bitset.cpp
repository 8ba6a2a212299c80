#include "cdlat/bitset.hpp"

#include "doctest.h"

using cdlat::Bitset;

TEST_SUITE("bitset") {

TEST_CASE("set/test/count across word boundaries") {
  Bitset b(130);
  CHECK(b.count() == 0);
  CHECK(b.empty());
  for (std::uint32_t i : {0u, 63u, 64u, 65u, 127u, 128u, 129u}) b.set(i);
  CHECK(b.count() == 7);
  CHECK(b.test(63));
  CHECK(b.test(64));
  CHECK(!b.test(62));
  b.reset(64);
  CHECK(!b.test(64));
  CHECK(b.count() == 6);
}

TEST_CASE("subset, and, or") {
  Bitset a(70), b(70);
  a.set(1);
  a.set(65);
  b.set(1);
  b.set(65);
  b.set(3);
  CHECK(b.contains(a));
  CHECK(!a.contains(b));
  Bitset u = a | b;
  CHECK(u.count() == 3);
  Bitset i = a & b;
  CHECK(i.count() == 2);
  CHECK(i == a);
}

TEST_CASE("compare is a strict total order") {
  Bitset a(70), b(70), c(70);
  a.set(0);
  b.set(1);
  c.set(64);
  CHECK(Bitset::compare(a, a) == 0);
  CHECK(Bitset::compare(a, b) < 0);   // word value 1 < 2
  CHECK(Bitset::compare(b, c) < 0);   // first word decides
  CHECK(Bitset::compare(c, a) > 0);
}

TEST_CASE("for_each ascending and indices") {
  Bitset b(200);
  std::vector<std::uint32_t> want{5, 64, 128, 199};
  for (auto i : want) b.set(i);
  CHECK(b.indices() == want);
}

TEST_CASE("hash distinguishes close sets") {
  Bitset a(64), b(64);
  a.set(3);
  b.set(4);
  CHECK(a.hash() != b.hash());
  Bitset a2(64);
  a2.set(3);
  CHECK(a.hash() == a2.hash());
}

}  // TEST_SUITE
