#pragma once

// Brute-force helpers used only to derive expected values for tests. They
// avoid the library's closure and centralizer kernels on purpose.

#include <algorithm>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat::naive {

inline std::vector<Elem> center_elems(const GroupTable& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x)
      ok = g.mul(z, x) == g.mul(x, z);
    if (ok) out.push_back(z);
  }
  return out;
}

inline std::vector<Elem> centralizer_elems(const GroupTable& g,
                                           const std::vector<Elem>& hs) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (Elem h : hs)
      if (g.mul(z, h) != g.mul(h, z)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(z);
  }
  return out;
}

// full pairwise-product closure of a seed set
inline std::vector<Elem> closure_elems(const GroupTable& g,
                                       std::vector<Elem> seed) {
  std::vector<char> in(g.order(), 0);
  in[GroupTable::identity] = 1;
  for (Elem e : seed) in[e] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Elem> cur;
    for (Elem e = 0; e < g.order(); ++e)
      if (in[e]) cur.push_back(e);
    for (Elem a : cur)
      for (Elem b : cur)
        if (!in[g.mul(a, b)]) {
          in[g.mul(a, b)] = 1;
          changed = true;
        }
  }
  std::vector<Elem> out;
  for (Elem e = 0; e < g.order(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

inline std::vector<Elem> commutator_subgroup_elems(const GroupTable& g) {
  std::vector<Elem> seed;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) seed.push_back(g.comm(a, b));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return closure_elems(g, std::move(seed));
}

// all subgroups by subset filtering; usable only for tiny orders
inline std::size_t count_subgroups_by_subsets(const GroupTable& g) {
  std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    if (!(mask & 1)) continue;  // identity required
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        closed = (mask >> g.mul(a, b)) & 1;
      }
    }
    if (closed) ++count;
  }
  return count;
}

inline bool sets_equal(const std::vector<Elem>& a, const Bitset& b) {
  if (a.size() != b.count()) return false;
  for (Elem e : a)
    if (!b.test(e)) return false;
  return true;
}

}  // namespace cdlat::naive
