#include "cdlat/subgroups.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>

namespace cdlat {

SubgroupSet SubgroupSet::from_subgroups(const GroupTable& g,
                                        std::vector<Subgroup> items) {
  std::sort(items.begin(), items.end(), subgroup_less);
  for (std::size_t i = 1; i < items.size(); ++i)
    internal_check(items[i - 1].bits != items[i].bits,
                   "duplicate subgroup in set");
  internal_check(!items.empty() && items.front().order == 1,
                 "subgroup set must contain the trivial subgroup");
  internal_check(items.back().order == g.order(),
                 "subgroup set must contain the whole group");
  SubgroupSet s;
  s.items_ = std::move(items);
  for (std::uint32_t i = 0; i < s.items_.size(); ++i)
    s.byhash_[s.items_[i].bits.hash()].push_back(i);
  return s;
}

std::optional<std::uint32_t> SubgroupSet::index_of(const Bitset& bits) const {
  auto it = byhash_.find(bits.hash());
  if (it == byhash_.end()) return std::nullopt;
  for (std::uint32_t i : it->second)
    if (items_[i].bits == bits) return i;
  return std::nullopt;
}

namespace {

int resolve_threads(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}

// insertion-ordered map from element set to slot, hash-bucketed
struct BitsIndex {
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;

  // returns the slot of bits in `store`, or UINT32_MAX
  std::uint32_t find(const std::vector<Subgroup>& store,
                     const Bitset& bits) const {
    auto it = buckets.find(bits.hash());
    if (it == buckets.end()) return UINT32_MAX;
    for (std::uint32_t i : it->second)
      if (store[i].bits == bits) return i;
    return UINT32_MAX;
  }
  void insert(const Bitset& bits, std::uint32_t slot) {
    buckets[bits.hash()].push_back(slot);
  }
};

}  // namespace

SubgroupSet all_subgroups(const GroupTable& g, const EnumLimits& limits) {
  const double t0 = omp_get_wtime();
  auto check_time = [&] {
    if (limits.time_limit_s > 0 && omp_get_wtime() - t0 > limits.time_limit_s)
      throw resource_error("subgroup enumeration time budget exceeded");
  };

  std::vector<Subgroup> known;
  BitsIndex index;
  auto add = [&](Bitset bits) -> bool {
    if (index.find(known, bits) != UINT32_MAX) return false;
    if (known.size() >= limits.max_subgroups)
      throw resource_error("subgroup budget exceeded (" +
                           std::to_string(limits.max_subgroups) + ")");
    Subgroup s = make_subgroup(g, std::move(bits));
    index.insert(s.bits, static_cast<std::uint32_t>(known.size()));
    known.push_back(std::move(s));
    return true;
  };

  add(trivial_subgroup(g).bits);
  for (Elem x = 1; x < g.order(); ++x) {
    Bitset bits(g.order());
    Elem y = GroupTable::identity;
    do {
      bits.set(y);
      y = g.mul(y, x);
    } while (y != GroupTable::identity);
    add(std::move(bits));
  }

  const int nthreads = resolve_threads(limits.threads);
  std::size_t frontier_begin = 0;
  while (frontier_begin < known.size()) {
    check_time();
    const std::size_t frontier_end = known.size();
    // A pass is repeated if workers bailed out on a provisional budget
    // estimate that did not hold up after the duplicate-free merge; every
    // (frontier, older) pair is therefore processed before moving on,
    // keeping the result independent of the thread count.
    for (bool clean = false; !clean;) {
      std::atomic<bool> stop{false};
      std::string error;
      std::vector<std::vector<Bitset>> found(nthreads);

#pragma omp parallel num_threads(nthreads)
      {
        const int tid = omp_get_thread_num();
        std::vector<Subgroup> local_store;
        BitsIndex local_index;
        Bitset scratch;
        std::vector<Elem> elems, gens;

#pragma omp for schedule(dynamic, 1)
        for (std::int64_t ai = static_cast<std::int64_t>(frontier_begin);
             ai < static_cast<std::int64_t>(frontier_end); ++ai) {
          if (stop.load(std::memory_order_relaxed)) continue;
          try {
            const Subgroup& a = known[ai];
            for (std::int64_t bi = 0; bi < ai; ++bi) {
              const Subgroup& b = known[bi];
              if (a.bits.contains(b.bits) || b.bits.contains(a.bits))
                continue;
              scratch = a.bits;
              scratch |= b.bits;
              elems = scratch.indices();
              gens.assign(a.gens.begin(), a.gens.end());
              gens.insert(gens.end(), b.gens.begin(), b.gens.end());
              close_under(g, scratch, elems, gens, limits.max_join_steps);
              if (index.find(known, scratch) != UINT32_MAX) continue;
              if (local_index.find(local_store, scratch) != UINT32_MAX)
                continue;
              local_index.insert(
                  scratch, static_cast<std::uint32_t>(local_store.size()));
              local_store.push_back(Subgroup{scratch, scratch.count(), {}});
              if ((limits.time_limit_s > 0 &&
                   omp_get_wtime() - t0 > limits.time_limit_s) ||
                  known.size() + local_store.size() > limits.max_subgroups)
                stop.store(true, std::memory_order_relaxed);
            }
          } catch (const std::exception& e) {
#pragma omp critical(cdlat_enum_error)
            {
              if (error.empty()) error = e.what();
            }
            stop.store(true, std::memory_order_relaxed);
          }
        }
        for (auto& s : local_store) found[tid].push_back(std::move(s.bits));
      }

      if (!error.empty()) throw resource_error(error);
      check_time();
      for (auto& bucket : found)
        for (auto& bits : bucket) add(std::move(bits));
      clean = !stop.load();
    }
    frontier_begin = frontier_end;
  }
  return SubgroupSet::from_subgroups(g, std::move(known));
}

bool verify_complete(const GroupTable& g, const SubgroupSet& s) {
  std::vector<Subgroup> ref = reference_subgroups(g);
  if (ref.size() != s.size()) return false;
  for (std::size_t i = 0; i < ref.size(); ++i)
    if (ref[i].bits != s[i].bits) return false;
  return true;
}

std::string subgroup_set_digest(const SubgroupSet& s) {
  std::string out;
  char buf[32];
  for (const Subgroup& sub : s) {
    std::snprintf(buf, sizeof buf, "%u:", sub.order);
    out += buf;
    for (std::uint64_t w : sub.bits.words()) {
      std::snprintf(buf, sizeof buf, "%016llx",
                    static_cast<unsigned long long>(w));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace cdlat
