#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdlat/spec.hpp"

namespace cdlat {

// One corpus instance. `tags` select which oracle suites pick the entry up;
// `name` is the stable display label used in reports.
struct CorpusEntry {
  std::string name;
  GroupSpec spec;
  std::vector<std::string> tags;
  bool long_running = false;

  bool has_tag(const std::string& t) const;
};

struct CorpusConfig {
  std::string presentations_dir = "presentations";
  bool include_long = false;
  // dicyclic sweep bound: n = 1..dic_max_n
  std::uint32_t dic_max_n = 12;
  // generalized dicyclic sweep bound on |A| (even orders only)
  std::uint32_t gdic_max = 32;
};

// The standard corpus: the dicyclic sweep, every generalized dicyclic
// (type, involution) pair up to the bound, extraspecial groups of order 32
// and p^3, dihedral / semidihedral / generalized quaternion 2-groups of
// order <= 64, Heisenberg groups of order 27 and 125, the coprime
// semidirect instances, direct products H x Z for the lattice-transfer
// checks, and the maximal-class presentation realizations.
std::vector<CorpusEntry> standard_corpus(const CorpusConfig& cfg = {});

// Entries carrying the given tag.
std::vector<CorpusEntry> corpus_with_tag(const std::vector<CorpusEntry>& all,
                                         const std::string& tag);

}  // namespace cdlat
