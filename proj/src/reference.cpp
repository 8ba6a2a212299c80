#include <algorithm>
#include <map>

#include "cdlat/subgroups.hpp"

namespace cdlat {

namespace {

// pairwise-product fixpoint closure; deliberately naive and shared with
// nothing in the enumeration path
Bitset naive_close(const GroupTable& g, Bitset bits) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Elem> elems = bits.indices();
    for (Elem a : elems)
      for (Elem b : elems) {
        Elem t = g.mul(a, b);
        if (!bits.test(t)) {
          bits.set(t);
          changed = true;
        }
      }
  }
  return bits;
}

struct BitsLess {
  bool operator()(const Bitset& a, const Bitset& b) const {
    return Bitset::compare(a, b) < 0;
  }
};

}  // namespace

std::vector<Subgroup> reference_subgroups(const GroupTable& g) {
  if (g.order() > 128)
    throw std::invalid_argument(
        "reference_subgroups is restricted to |G| <= 128");
  Bitset triv(g.order());
  triv.set(GroupTable::identity);
  std::map<Bitset, bool, BitsLess> seen;
  std::vector<Bitset> queue{triv};
  seen.emplace(triv, true);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Bitset h = queue[qi];
    for (Elem e = 0; e < g.order(); ++e) {
      if (h.test(e)) continue;
      Bitset ext = h;
      ext.set(e);
      Bitset closed = naive_close(g, std::move(ext));
      if (seen.emplace(closed, true).second) queue.push_back(closed);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(queue.size());
  for (auto& [bits, unused] : seen) {
    (void)unused;
    out.push_back(make_subgroup(g, bits));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

}  // namespace cdlat
