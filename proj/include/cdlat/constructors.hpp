#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

// Finite abelian group given as a direct product of cyclic factors Z_f.
// The factor list is not required to be in a canonical form.
struct AbelianSpec {
  std::vector<std::uint32_t> factors;  // each >= 2; empty = trivial group

  std::uint64_t order() const;
  // prime powers, ascending (with multiplicity)
  std::vector<std::uint32_t> elementary_divisors() const;
  // d1 | d2 | ... | dk canonical form
  std::vector<std::uint32_t> invariant_factors() const;
  std::uint64_t exponent() const;
  bool is_elementary_abelian_2() const;
  // Z_2^m x Z_4 for some m >= 0
  bool is_z2m_z4_type() const;
  bool operator==(const AbelianSpec&) const = default;
};

// Mixed-radix element encoding: index = sum d_i * prod_{j<i} factors[j],
// digit 0 first. Generator of factor r therefore sits at index stride(r).
GroupTable abelian(const AbelianSpec& a);

// Dic_{4n} = <a, x | a^{2n} = 1, x^2 = a^n, a^x = a^{-1}>, order 4n.
// Element (a^i, x^e) has index i + 2n*e; a = 1, x = 2n.
GroupTable dicyclic(std::uint32_t n);

// Dic(A, t) = <A, x | x^2 = t, a^x = a^{-1}>, |A| even, t an involution of A.
// Element (a, x^e) has index a + |A|*e. With A = Z_{2n} and t = a^n this is
// the same table as dicyclic(n).
GroupTable generalized_dicyclic(const AbelianSpec& a, Elem t);

// involutions of a group in ascending index order
std::vector<Elem> involutions(const GroupTable& g);

// A x| <x> with x of order k acting by the automorphism sending the r-th
// canonical generator of A to images[r]. Requires sigma^k = id. k = 1 forces
// the identity map and returns A itself.
GroupTable semidirect_by_automorphism(const AbelianSpec& a,
                                      std::span<const Elem> images,
                                      std::uint32_t k);

// A x| B with both factors abelian; actions[r] lists the images of the
// canonical generators of A under conjugation by the r-th generator of B.
// The per-generator automorphisms must commute pairwise. Element (a, b) has
// index a + |A|*b.
GroupTable semidirect_abelian(const AbelianSpec& a, const AbelianSpec& b,
                              const std::vector<std::vector<Elem>>& actions);

enum class ExtraspecialKind {
  d8,     // p = 2: dihedral / central products of dihedral blocks
  q8,     // p = 2: one quaternion block
  exp_p,  // p odd: exponent p (Heisenberg blocks)
  exp_p2, // p odd: exponent p^2
};
ExtraspecialKind parse_extraspecial_kind(const std::string& token,
                                         std::uint32_t p);
std::string extraspecial_kind_token(ExtraspecialKind kind);

// Extraspecial group of order p^n, n in {3, 5}, built from order-p^3 blocks
// glued by central products. Verifies |Z| = p, G' = Z and G/Z elementary
// abelian before returning.
GroupTable extraspecial(std::uint32_t p, std::uint32_t n,
                        ExtraspecialKind kind);

// Element (x, y) has index x + |A|*y.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

// Quotient G/N for a central subgroup N; coset ids follow ascending minimal
// representatives. Exposed for the central-product construction and tests.
GroupTable quotient_by_central(const GroupTable& g, const Subgroup& n);

// All abelian groups of order n up to isomorphism, as elementary-divisor
// factor lists, in a deterministic order.
std::vector<AbelianSpec> abelian_types_of_order(std::uint32_t n);

}  // namespace cdlat
