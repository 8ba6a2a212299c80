#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

struct EnumLimits {
  std::uint64_t max_subgroups = 500'000;
  // per-join closure element budget
  std::uint64_t max_join_steps = 2'000'000;
  // worker threads for the parallel kernels; 0 = library default
  int threads = 0;
  // wall-clock budget in seconds; 0 = none
  double time_limit_s = 0;
};

// Immutable, deterministically ordered collection of subgroups with a
// hash-bucket index over element sets.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  // sorts canonically and checks for the trivial and full subgroup
  static SubgroupSet from_subgroups(const GroupTable& g,
                                    std::vector<Subgroup> items);

  std::size_t size() const { return items_.size(); }
  const Subgroup& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Subgroup>& items() const { return items_; }
  std::optional<std::uint32_t> index_of(const Bitset& bits) const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Subgroup> items_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> byhash_;
};

// Exhaustive subgroup enumeration: cyclic seeds, then rounds of pairwise
// joins between new and existing subgroups until no new subgroup appears.
// Join rounds run in parallel; the result is independent of thread count.
SubgroupSet all_subgroups(const GroupTable& g, const EnumLimits& limits = {});

// Serial oracle: grows subgroups by single-element extensions with a naive
// pairwise-product closure, sharing no kernel code with all_subgroups.
// Restricted to |G| <= 128.
std::vector<Subgroup> reference_subgroups(const GroupTable& g);

// Cross-checks all_subgroups output against reference_subgroups.
bool verify_complete(const GroupTable& g, const SubgroupSet& s);

// Stable text form (order + hex element words per subgroup), used to compare
// runs byte for byte.
std::string subgroup_set_digest(const SubgroupSet& s);

}  // namespace cdlat
