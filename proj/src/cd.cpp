#include "cdlat/cd.hpp"

#include <omp.h>

#include <algorithm>

namespace cdlat {

std::string LatticeShape::str() const {
  switch (kind) {
    case Kind::chain: return "chain(" + std::to_string(param) + ")";
    case Kind::quasi_antichain:
      return "quasi-antichain(" + std::to_string(param) + ")";
    case Kind::general: return "general";
  }
  internal_fail("unknown shape kind");
}

std::optional<std::uint32_t> CdLattice::member_index(
    const Bitset& bits) const {
  for (std::uint32_t i = 0; i < members.size(); ++i)
    if (members[i].bits == bits) return i;
  return std::nullopt;
}

std::uint64_t measure(const GroupTable& g, const Subgroup& h) {
  return std::uint64_t{h.order} * centralizer_order(g, h);
}

std::vector<std::uint64_t> measure_table(const GroupTable& g,
                                         const SubgroupSet& s, int threads) {
  std::vector<std::uint64_t> out(s.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(s.size()); ++i)
    out[i] = measure(g, s[i]);
  return out;
}

LatticeShape classify_shape(const std::vector<Bitset>& member_bits) {
  const std::size_t m = member_bits.size();
  internal_check(m > 0, "shape of an empty lattice");
  if (m == 1) return {LatticeShape::Kind::chain, 0};
  // leq[i][j]: member i contained in member j
  std::vector<char> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      leq[i * m + j] = member_bits[j].contains(member_bits[i]);
  bool total = true;
  for (std::size_t i = 0; i < m && total; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!leq[i * m + j] && !leq[j * m + i]) {
        total = false;
        break;
      }
  if (total) return {LatticeShape::Kind::chain, static_cast<std::uint32_t>(m - 1)};
  std::size_t nmin = 0, nmax = 0;
  for (std::size_t i = 0; i < m; ++i) {
    bool least = true, greatest = true;
    for (std::size_t j = 0; j < m; ++j) {
      least = least && leq[i * m + j];
      greatest = greatest && leq[j * m + i];
    }
    nmin += least;
    nmax += greatest;
  }
  if (m >= 4 && nmin == 1 && nmax == 1) {
    bool middles_incomparable = true;
    for (std::size_t i = 0; i < m && middles_incomparable; ++i) {
      bool i_least = true, i_greatest = true;
      for (std::size_t j = 0; j < m; ++j) {
        i_least = i_least && leq[i * m + j];
        i_greatest = i_greatest && leq[j * m + i];
      }
      if (i_least || i_greatest) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        bool j_least = true, j_greatest = true;
        for (std::size_t k = 0; k < m; ++k) {
          j_least = j_least && leq[j * m + k];
          j_greatest = j_greatest && leq[k * m + j];
        }
        if (j_least || j_greatest) continue;
        if (leq[i * m + j] || leq[j * m + i]) {
          middles_incomparable = false;
          break;
        }
      }
    }
    if (middles_incomparable)
      return {LatticeShape::Kind::quasi_antichain,
              static_cast<std::uint32_t>(m - 2)};
  }
  return {LatticeShape::Kind::general, 0};
}

const Subgroup& max_self_centralizing(const GroupTable& g,
                                      const SubgroupSet& s) {
  const Subgroup* best = nullptr;
  for (const Subgroup& h : s) {
    // C_G(H) = H forces H abelian; with H abelian, H is contained in its
    // centralizer, so equal orders suffice.
    if (!is_abelian_subgroup(g, h)) continue;
    if (centralizer_order(g, h) != h.order) continue;
    if (!best || h.order > best->order) best = &h;
  }
  internal_check(best != nullptr, "no self-centralizing subgroup found");
  return *best;
}

bool cgz_predicate(const GroupTable& g, const SubgroupSet& s) {
  for (const Subgroup& h : s) {
    if (is_abelian_subgroup(g, h)) continue;
    if (!h.bits.contains(centralizer(g, h).bits)) return false;
  }
  return true;
}

namespace {

void verify_cd_invariants(const GroupTable& g, const CdLattice& cd) {
  const std::size_t m = cd.members.size();
  internal_check(m > 0, "CD lattice is empty");

  // center containment and index divisibility
  Subgroup zg = center(g);
  for (const Subgroup& h : cd.members) {
    internal_check(h.bits.contains(zg.bits),
                   "CD member does not contain the center");
    std::uint32_t index_h = g.order() / h.order;
    std::uint32_t index_z = g.order() / zg.order;
    internal_check(index_z % index_h == 0,
                   "CD member index does not divide |G : Z(G)|");
  }

  // centralizer involution: C maps the lattice onto itself, is an
  // involution on it, and preserves the measure
  std::vector<std::uint32_t> dual(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    Subgroup c = centralizer(g, cd.members[i]);
    auto ci = cd.member_index(c.bits);
    internal_check(ci.has_value(), "centralizer of a member is not a member");
    dual[i] = *ci;
    internal_check(measure(g, c) == cd.m_star,
                   "centralizer of a member has a different measure");
  }
  for (std::uint32_t i = 0; i < m; ++i)
    internal_check(dual[dual[i]] == i,
                   "centralizer map is not an involution on the lattice");

  // minimum: abelian, normal, contains the center
  const Subgroup& mn = cd.members[cd.minimum];
  internal_check(is_abelian_subgroup(g, mn), "CD minimum is not abelian");
  internal_check(is_normal(g, mn), "CD minimum is not normal");
  internal_check(mn.bits.contains(zg.bits),
                 "CD minimum does not contain the center");

  // modular law on the member lattice: i <= k implies
  // i v (j ^ k) = (i v j) ^ k
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t k = 0; k < m; ++k) {
      if (!cd.members[k].bits.contains(cd.members[i].bits)) continue;
      for (std::uint32_t j = 0; j < m; ++j)
        internal_check(cd.join_of(i, cd.meet_of(j, k)) ==
                           cd.meet_of(cd.join_of(i, j), k),
                       "CD lattice is not modular");
    }
}

}  // namespace

CdLattice cd_lattice(const GroupTable& g, const SubgroupSet& s, int threads) {
  return cd_lattice(g, s, measure_table(g, s, threads));
}

CdLattice cd_lattice(const GroupTable& g, const SubgroupSet& s,
                     const std::vector<std::uint64_t>& meas) {
  internal_check(meas.size() == s.size(), "measure table size mismatch");
  CdLattice cd;
  cd.m_star = *std::max_element(meas.begin(), meas.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (meas[i] == cd.m_star) {
      cd.members.push_back(s[i]);
      cd.member_measures.push_back(meas[i]);
    }
  const std::size_t m = cd.members.size();

  // minimum and maximum must exist and be unique
  std::optional<std::uint32_t> mini, maxi;
  for (std::uint32_t i = 0; i < m; ++i) {
    bool least = true, greatest = true;
    for (std::uint32_t j = 0; j < m; ++j) {
      least = least && cd.members[j].bits.contains(cd.members[i].bits);
      greatest = greatest && cd.members[i].bits.contains(cd.members[j].bits);
    }
    if (least) {
      internal_check(!mini, "two minimal CD members");
      mini = i;
    }
    if (greatest) {
      internal_check(!maxi, "two maximal CD members");
      maxi = i;
    }
  }
  internal_check(mini && maxi, "CD lattice lacks a minimum or maximum");
  cd.minimum = *mini;
  cd.maximum = *maxi;

  // meet = intersection, join = generated subgroup; both must land in the
  // member list
  cd.meet.assign(m * m, 0);
  cd.join.assign(m * m, 0);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j <= i; ++j) {
      Subgroup mt = intersect_subgroups(g, cd.members[i], cd.members[j]);
      auto mi = cd.member_index(mt.bits);
      internal_check(mi.has_value(), "CD lattice not closed under meet");
      Subgroup jn = join_subgroups(g, cd.members[i], cd.members[j]);
      auto ji = cd.member_index(jn.bits);
      internal_check(ji.has_value(), "CD lattice not closed under join");
      cd.meet[std::size_t{i} * m + j] = cd.meet[std::size_t{j} * m + i] = *mi;
      cd.join[std::size_t{i} * m + j] = cd.join[std::size_t{j} * m + i] = *ji;
    }

  // Hasse diagram: strict inclusions that no intermediate member witnesses
  for (std::uint32_t lo = 0; lo < m; ++lo)
    for (std::uint32_t hi = 0; hi < m; ++hi) {
      if (lo == hi) continue;
      if (!cd.members[hi].bits.contains(cd.members[lo].bits)) continue;
      bool is_cover = true;
      for (std::uint32_t k = 0; k < m && is_cover; ++k) {
        if (k == lo || k == hi) continue;
        if (cd.members[k].bits.contains(cd.members[lo].bits) &&
            cd.members[hi].bits.contains(cd.members[k].bits))
          is_cover = false;
      }
      if (is_cover) cd.hasse.emplace_back(lo, hi);
    }
  std::sort(cd.hasse.begin(), cd.hasse.end());

  std::vector<Bitset> bits;
  bits.reserve(m);
  for (const Subgroup& h : cd.members) bits.push_back(h.bits);
  cd.shape = classify_shape(bits);

  verify_cd_invariants(g, cd);
  return cd;
}

GroupAnalysis analyze(const GroupTable& g, const EnumLimits& limits) {
  GroupAnalysis a;
  a.subgroups = all_subgroups(g, limits);
  a.measures = measure_table(g, a.subgroups, limits.threads);
  a.cd = cd_lattice(g, a.subgroups, a.measures);
  a.zg = center(g);
  a.preds = group_predicates(g);
  return a;
}

}  // namespace cdlat
