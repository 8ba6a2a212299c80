#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdlat/bitset.hpp"

namespace cdlat {

using Elem = std::uint32_t;

// Thrown when a configured budget (subgroup count, closure steps, coset rows,
// wall-clock limit) is exhausted.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant failures are programming errors, never recoverable
// results.
[[noreturn]] void internal_fail(const std::string& what);
inline void internal_check(bool ok, const char* what) {
  if (!ok) internal_fail(what);
}

enum class VerifyTable {
  automatic,  // full associativity check iff order <= assoc_check_threshold
  basic,      // identity row/column, Latin property, inverses only
  full,       // always run the O(n^3) associativity check
};

// Dense multiplication table of a finite group. Element 0 is always the
// identity. Entries are stored as 16-bit indices; the supported order range
// (<= max_order) makes this safe and keeps large tables within memory.
class GroupTable {
 public:
  static constexpr Elem identity = 0;
  static constexpr std::uint32_t max_order = 20000;
  static constexpr std::uint32_t assoc_check_threshold = 512;

  static GroupTable from_table(std::uint32_t order,
                               std::vector<std::uint16_t> mul,
                               std::vector<std::string> names = {},
                               VerifyTable verify = VerifyTable::automatic);

  std::uint32_t order() const { return order_; }
  Elem mul(Elem x, Elem y) const {
    return mul_[std::size_t{x} * order_ + y];
  }
  Elem inv(Elem x) const { return inv_[x]; }
  const std::uint16_t* row(Elem x) const {
    return mul_.data() + std::size_t{x} * order_;
  }
  // x conjugated by g: g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  // commutator [x, y] = x^-1 y^-1 x y
  Elem comm(Elem x, Elem y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }

  bool has_names() const { return !names_.empty(); }
  const std::string& name(Elem x) const { return names_[x]; }
  // name if present, else the decimal index
  std::string display(Elem x) const;

 private:
  GroupTable() = default;
  std::uint32_t order_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
};

// A subgroup is carried as its element set plus a small canonical generating
// set (greedily chosen in ascending element order).
struct Subgroup {
  Bitset bits;
  std::uint32_t order = 0;
  std::vector<Elem> gens;
};

// canonical ordering: by order, then by element-set compare
inline bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return Bitset::compare(a.bits, b.bits) < 0;
}

// Validates closure of `bits` and attaches the canonical generating set.
// Throws std::logic_error if the set is not a subgroup.
Subgroup make_subgroup(const GroupTable& G, Bitset bits);

// Low-level closure primitive: extends (bits, elems) until closed under
// right multiplication by gens. elems must list exactly the members of bits
// and contain the identity. A nonzero budget caps newly added elements.
void close_under(const GroupTable& G, Bitset& bits, std::vector<Elem>& elems,
                 const std::vector<Elem>& gens, std::uint64_t max_steps = 0);

Subgroup trivial_subgroup(const GroupTable& G);
Subgroup whole_group(const GroupTable& G);

std::uint32_t element_order(const GroupTable& G, Elem x);
std::uint64_t exponent(const GroupTable& G);

Subgroup generated_subgroup(const GroupTable& G, std::span<const Elem> seed);
Subgroup join_subgroups(const GroupTable& G, const Subgroup& a,
                        const Subgroup& b);
Subgroup intersect_subgroups(const GroupTable& G, const Subgroup& a,
                             const Subgroup& b);

Subgroup center(const GroupTable& G);
Subgroup centralizer(const GroupTable& G, const Subgroup& s);
// order of the centralizer without materialising the subgroup (hot path)
std::uint32_t centralizer_order(const GroupTable& G, const Subgroup& s);
// Z(H) = H intersect C_G(H), as a subgroup of G
Subgroup subgroup_center(const GroupTable& G, const Subgroup& s);

Subgroup derived_subgroup(const GroupTable& G);
// G_1 = G, G_{i+1} = [G_i, G]; stops at the first repeated term or at the
// trivial subgroup, whichever comes first.
std::vector<Subgroup> lower_central_series(const GroupTable& G);

bool is_normal(const GroupTable& G, const Subgroup& s);
bool is_abelian_subgroup(const GroupTable& G, const Subgroup& s);

struct GroupPredicates {
  bool is_abelian = false;
  // empty iff the group is not nilpotent
  std::optional<std::uint32_t> nilpotency_class;
  std::uint64_t exponent = 1;
  // order p^n with nilpotency class exactly n-1 (n >= 3)
  bool is_maximal_class = false;
  bool is_metabelian = false;
};
GroupPredicates group_predicates(const GroupTable& G);

bool is_prime(std::uint64_t n);
// n = p^k with p prime, k >= 1
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(
    std::uint64_t n);
std::uint64_t smallest_prime_divisor(std::uint64_t n);

}  // namespace cdlat
