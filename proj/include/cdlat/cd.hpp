#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/subgroups.hpp"

namespace cdlat {

struct LatticeShape {
  enum class Kind { chain, quasi_antichain, general };
  Kind kind = Kind::general;
  // chain: number of cover steps (0 = singleton); quasi-antichain: width
  std::uint32_t param = 0;
  std::string str() const;
  bool operator==(const LatticeShape&) const = default;
};

// The subgroups of maximal measure, with the order structure they form.
// Indices in hasse/minimum/maximum/meet/join refer to `members`.
struct CdLattice {
  std::vector<Subgroup> members;  // canonical ascending order
  std::vector<std::uint64_t> member_measures;
  std::uint64_t m_star = 0;
  // cover relations (lo, hi), lexicographically sorted
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse;
  std::uint32_t minimum = 0, maximum = 0;
  LatticeShape shape;
  // meet/join tables, row-major over member indices
  std::vector<std::uint32_t> meet, join;

  std::uint32_t meet_of(std::uint32_t i, std::uint32_t j) const {
    return meet[std::size_t{i} * members.size() + j];
  }
  std::uint32_t join_of(std::uint32_t i, std::uint32_t j) const {
    return join[std::size_t{i} * members.size() + j];
  }
  std::optional<std::uint32_t> member_index(const Bitset& bits) const;
};

// |H| * |C_G(H)|
std::uint64_t measure(const GroupTable& g, const Subgroup& h);
// measures for every subgroup in s, parallel kernel
std::vector<std::uint64_t> measure_table(const GroupTable& g,
                                         const SubgroupSet& s,
                                         int threads = 0);

// Assembles the lattice of maximal-measure subgroups and verifies its
// structural laws (meet/join closure, centralizer involution with measure
// preservation, center containment, index divisibility, minimum properties,
// modularity). Violations are internal errors, never return values.
CdLattice cd_lattice(const GroupTable& g, const SubgroupSet& s,
                     int threads = 0);
CdLattice cd_lattice(const GroupTable& g, const SubgroupSet& s,
                     const std::vector<std::uint64_t>& measures);

LatticeShape classify_shape(const std::vector<Bitset>& member_bits);

// Largest self-centralizing subgroup (ties resolved by canonical order).
// Always exists: any maximal abelian subgroup qualifies.
const Subgroup& max_self_centralizing(const GroupTable& g,
                                      const SubgroupSet& s);

// true iff C_G(H) = Z(H) for every non-abelian subgroup H
bool cgz_predicate(const GroupTable& g, const SubgroupSet& s);

// Shared per-group bundle for checks and output.
struct GroupAnalysis {
  SubgroupSet subgroups;
  std::vector<std::uint64_t> measures;
  CdLattice cd;
  Subgroup zg;
  GroupPredicates preds;
};
GroupAnalysis analyze(const GroupTable& g, const EnumLimits& limits = {});

}  // namespace cdlat
