#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdlat/cd.hpp"
#include "cdlat/oracle.hpp"

namespace cdlat {

// Machine-readable lattice document. Key order is fixed:
// spec, group_order, center_order, m_star, shape{tag,param}, members,
// hasse, minimum, maximum. Members are in canonical ascending order and
// carry ids 0..k-1; hasse pairs and minimum/maximum refer to those ids.
// Element lists are large and only emitted when with_elements is set.
std::string lattice_json(const GroupTable& g, const GroupAnalysis& an,
                         const std::string& spec_text, bool with_elements);

// Graphviz Hasse diagram, one node per member labeled "order/measure",
// edges directed from the smaller subgroup to the larger.
std::string lattice_dot(const GroupTable& g, const CdLattice& cd);

// Human-readable summary: headline quantities, shape, member table.
std::string lattice_text(const GroupTable& g, const GroupAnalysis& an);

// One row per enumerated subgroup with its centralizer order and measure;
// rows attaining the maximum are starred.
std::string measure_text(const GroupTable& g, const SubgroupSet& s,
                         const std::vector<std::uint64_t>& measures);

// Basic facts for a realized group (build verb).
std::string group_text(const GroupTable& g, const std::string& spec_text);

// Stable one-line rendering of a report, and a suite tally line.
std::string report_line(const TheoremReport& r);
std::string suite_summary(const SuiteResult& r);

}  // namespace cdlat
