#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

// Finitely presented group. Relators are words in signed 1-based generator
// numbers: 2 means the second generator, -2 its inverse.
struct Presentation {
  std::uint32_t ngens = 0;
  std::vector<std::vector<std::int32_t>> relators;
};

// Text format, one directive per line:
//   gens <k>
//   rel  <w1>,<w2>,...   (signed generator numbers)
// '#' starts a comment; blank lines are ignored. Exactly one gens line is
// required and it must precede every rel line.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation_file(const std::string& path);

struct TcOptions {
  // cap on coset rows ever defined; 0 derives a default from order_bound
  std::uint64_t max_cosets = 0;
  bool build_names = true;
};

// Coset enumeration over the trivial subgroup (HLT strategy with coincidence
// handling), followed by conversion of the regular representation into a
// multiplication table. Throws resource_error("bound exceeded ...") when the
// row budget is exhausted or the finished group is larger than order_bound.
// Every relator is re-checked against the final table at every element.
GroupTable realize_presentation(const Presentation& p,
                                std::uint32_t order_bound,
                                const TcOptions& opts = {});

inline GroupTable load_and_realize(const std::string& path,
                                   std::uint32_t order_bound,
                                   const TcOptions& opts = {}) {
  return realize_presentation(load_presentation_file(path), order_bound,
                              opts);
}

}  // namespace cdlat
