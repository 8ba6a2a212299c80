#include "cdlat/group.hpp"

#include <algorithm>
#include <numeric>

namespace cdlat {

void internal_fail(const std::string& what) {
  throw std::logic_error("internal invariant violated: " + what);
}

std::string GroupTable::display(Elem x) const {
  if (has_names()) return names_[x];
  return std::to_string(x);
}

GroupTable GroupTable::from_table(std::uint32_t order,
                                  std::vector<std::uint16_t> mul,
                                  std::vector<std::string> names,
                                  VerifyTable verify) {
  if (order == 0 || order > max_order)
    throw std::invalid_argument("group order out of range: " +
                                std::to_string(order));
  if (mul.size() != std::size_t{order} * order)
    throw std::invalid_argument("multiplication table has wrong size");
  if (!names.empty() && names.size() != order)
    throw std::invalid_argument("name list has wrong size");

  const auto at = [&](std::uint32_t x, std::uint32_t y) {
    return mul[std::size_t{x} * order + y];
  };

  for (std::uint32_t x = 0; x < order; ++x) {
    if (at(identity, x) != x || at(x, identity) != x)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  }

  // Latin property: each row and column is a permutation of the elements.
  std::vector<char> seen(order);
  for (std::uint32_t x = 0; x < order; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t y = 0; y < order; ++y) {
      std::uint32_t v = at(x, y);
      if (v >= order || seen[v])
        throw std::invalid_argument("row " + std::to_string(x) +
                                    " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::uint32_t y = 0; y < order; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t x = 0; x < order; ++x) {
      std::uint32_t v = at(x, y);
      if (seen[v])
        throw std::invalid_argument("column " + std::to_string(y) +
                                    " is not a permutation");
      seen[v] = 1;
    }
  }

  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.names_ = std::move(names);
  g.inv_.assign(order, 0);
  for (std::uint32_t x = 0; x < order; ++x) {
    bool found = false;
    for (std::uint32_t y = 0; y < order; ++y) {
      if (g.mul(x, y) == identity) {
        g.inv_[x] = y;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("element without inverse");
    if (g.mul(g.inv_[x], x) != identity)
      throw std::invalid_argument("left and right inverses disagree");
  }

  bool check_assoc = verify == VerifyTable::full ||
                     (verify == VerifyTable::automatic &&
                      order <= assoc_check_threshold);
  if (check_assoc) {
    for (std::uint32_t x = 0; x < order; ++x)
      for (std::uint32_t y = 0; y < order; ++y) {
        std::uint32_t xy = g.mul(x, y);
        for (std::uint32_t z = 0; z < order; ++z)
          if (g.mul(xy, z) != g.mul(x, g.mul(y, z)))
            throw std::invalid_argument("table is not associative");
      }
  }
  return g;
}

void close_under(const GroupTable& G, Bitset& bits, std::vector<Elem>& elems,
                 const std::vector<Elem>& gens, std::uint64_t max_steps) {
  std::uint64_t steps = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::uint16_t* row = G.row(elems[i]);
    for (Elem g : gens) {
      Elem t = row[g];
      if (!bits.test(t)) {
        bits.set(t);
        elems.push_back(t);
        if (max_steps && ++steps > max_steps)
          throw resource_error("closure step budget exceeded");
      }
    }
  }
}

namespace {

// Greedy canonical generating set: adopt each candidate not yet generated,
// in the order presented, re-closing after every adoption.
struct GreedyClosure {
  const GroupTable& G;
  Bitset bits;
  std::vector<Elem> elems;
  std::vector<Elem> gens;

  explicit GreedyClosure(const GroupTable& g)
      : G(g), bits(g.order()), elems{GroupTable::identity} {
    bits.set(GroupTable::identity);
  }

  void add_generator(Elem e, std::uint64_t max_steps = 0) {
    if (bits.test(e)) return;
    gens.push_back(e);
    bits.set(e);
    elems.push_back(e);
    close_under(G, bits, elems, gens, max_steps);
  }
};

}  // namespace

Subgroup make_subgroup(const GroupTable& G, Bitset bits) {
  internal_check(bits.capacity() == G.order(), "subgroup bitset capacity");
  internal_check(bits.test(GroupTable::identity),
                 "subgroup must contain the identity");
  std::uint32_t order = bits.count();
  internal_check(G.order() % order == 0, "subgroup order must divide |G|");

  GreedyClosure gc(G);
  bits.for_each([&](std::uint32_t e) { gc.add_generator(e); });
  internal_check(gc.bits == bits, "element set is not closed");
  return Subgroup{std::move(bits), order, std::move(gc.gens)};
}

Subgroup trivial_subgroup(const GroupTable& G) {
  Bitset b(G.order());
  b.set(GroupTable::identity);
  return Subgroup{std::move(b), 1, {}};
}

Subgroup whole_group(const GroupTable& G) {
  Bitset b(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) b.set(i);
  return make_subgroup(G, std::move(b));
}

std::uint32_t element_order(const GroupTable& G, Elem x) {
  std::uint32_t n = 1;
  Elem y = x;
  while (y != GroupTable::identity) {
    y = G.mul(y, x);
    ++n;
  }
  return n;
}

std::uint64_t exponent(const GroupTable& G) {
  std::uint64_t e = 1;
  for (Elem x = 0; x < G.order(); ++x)
    e = std::lcm(e, std::uint64_t{element_order(G, x)});
  return e;
}

Subgroup generated_subgroup(const GroupTable& G, std::span<const Elem> seed) {
  GreedyClosure gc(G);
  for (Elem e : seed) {
    if (e >= G.order()) throw std::invalid_argument("generator out of range");
    gc.add_generator(e);
  }
  return make_subgroup(G, std::move(gc.bits));
}

Subgroup join_subgroups(const GroupTable& G, const Subgroup& a,
                        const Subgroup& b) {
  if (a.bits.contains(b.bits)) return a;
  if (b.bits.contains(a.bits)) return b;
  Bitset bits = a.bits | b.bits;
  std::vector<Elem> elems = bits.indices();
  std::vector<Elem> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  close_under(G, bits, elems, gens);
  return make_subgroup(G, std::move(bits));
}

Subgroup intersect_subgroups(const GroupTable& G, const Subgroup& a,
                             const Subgroup& b) {
  return make_subgroup(G, a.bits & b.bits);
}

Subgroup center(const GroupTable& G) { return centralizer(G, whole_group(G)); }

Subgroup centralizer(const GroupTable& G, const Subgroup& s) {
  Bitset bits(G.order());
  for (Elem x = 0; x < G.order(); ++x) {
    const std::uint16_t* row = G.row(x);
    bool ok = true;
    for (Elem g : s.gens) {
      if (row[g] != G.mul(g, x)) {
        ok = false;
        break;
      }
    }
    if (ok) bits.set(x);
  }
  return make_subgroup(G, std::move(bits));
}

std::uint32_t centralizer_order(const GroupTable& G, const Subgroup& s) {
  std::uint32_t n = 0;
  for (Elem x = 0; x < G.order(); ++x) {
    const std::uint16_t* row = G.row(x);
    bool ok = true;
    for (Elem g : s.gens) {
      if (row[g] != G.mul(g, x)) {
        ok = false;
        break;
      }
    }
    if (ok) ++n;
  }
  return n;
}

Subgroup subgroup_center(const GroupTable& G, const Subgroup& s) {
  return make_subgroup(G, s.bits & centralizer(G, s).bits);
}

namespace {

// Smallest normal subgroup of G containing `seeds`: close under generation,
// then repeatedly adjoin conjugates by the generators of G until stable.
Subgroup normal_closure(const GroupTable& G, const std::vector<Elem>& ggens,
                        const std::vector<Elem>& seeds) {
  GreedyClosure gc(G);
  for (Elem e : seeds) gc.add_generator(e);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem h : gc.elems)
      for (Elem g : ggens) {
        Elem c = G.conj(h, g);
        if (!gc.bits.test(c)) extra.push_back(c);
      }
    if (extra.empty()) break;
    for (Elem e : extra) gc.add_generator(e);
  }
  return make_subgroup(G, std::move(gc.bits));
}

// [H, G] for H given by its element list.
Subgroup commutator_with_group(const GroupTable& G,
                               const std::vector<Elem>& ggens,
                               const std::vector<Elem>& h_elems) {
  Bitset seen(G.order());
  std::vector<Elem> seeds;
  for (Elem h : h_elems)
    for (Elem g : ggens) {
      Elem c = G.comm(h, g);
      if (!seen.test(c)) {
        seen.set(c);
        seeds.push_back(c);
      }
    }
  return normal_closure(G, ggens, seeds);
}

}  // namespace

Subgroup derived_subgroup(const GroupTable& G) {
  Subgroup whole = whole_group(G);
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return commutator_with_group(G, whole.gens, all);
}

std::vector<Subgroup> lower_central_series(const GroupTable& G) {
  Subgroup whole = whole_group(G);
  std::vector<Elem> ggens = whole.gens;
  std::vector<Subgroup> series;
  series.push_back(std::move(whole));
  for (;;) {
    const Subgroup& cur = series.back();
    if (cur.order == 1) break;
    Subgroup next =
        commutator_with_group(G, ggens, cur.bits.indices());
    if (next.bits == cur.bits) break;  // stabilised above the identity
    series.push_back(std::move(next));
  }
  return series;
}

bool is_normal(const GroupTable& G, const Subgroup& s) {
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h : s.gens)
      if (!s.bits.test(G.conj(h, g))) return false;
  return true;
}

bool is_abelian_subgroup(const GroupTable& G, const Subgroup& s) {
  for (std::size_t i = 0; i < s.gens.size(); ++i)
    for (std::size_t j = i + 1; j < s.gens.size(); ++j)
      if (G.mul(s.gens[i], s.gens[j]) != G.mul(s.gens[j], s.gens[i]))
        return false;
  return true;
}

GroupPredicates group_predicates(const GroupTable& G) {
  GroupPredicates p;
  std::vector<Subgroup> lcs = lower_central_series(G);
  bool nilpotent = lcs.back().order == 1;
  p.is_abelian = lcs.size() <= 2 && nilpotent;
  if (G.order() == 1) p.is_abelian = true;
  if (nilpotent)
    p.nilpotency_class = static_cast<std::uint32_t>(lcs.size()) - 1;
  p.exponent = exponent(G);
  p.is_metabelian = is_abelian_subgroup(G, derived_subgroup(G));
  if (auto pp = prime_power(G.order())) {
    auto [prime, n] = *pp;
    (void)prime;
    p.is_maximal_class =
        n >= 3 && p.nilpotency_class && *p.nilpotency_class == n - 1;
  }
  return p;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(
    std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = smallest_prime_divisor(n);
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  internal_check(n >= 2, "smallest_prime_divisor needs n >= 2");
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

}  // namespace cdlat
