#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/constructors.hpp"
#include "cdlat/presentation.hpp"

namespace cdlat {

// Parsed form of the group spec mini-language:
//
//   dic:<n>                        dicyclic of order 4n
//   gdic:<factors>[,t=<index>]     generalized dicyclic over the abelian
//                                  group with the given cyclic factors;
//                                  t picks the involution x^2 (element
//                                  index), default a canonical choice
//   ab:<factors>                   abelian product of cyclic factors
//   sdp:<factors>;<images>;<k>     A x| Z_k, generator images by element
//                                  index
//   xsp:<p>,<n>,<kind>             extraspecial of order p^n, kind in
//                                  {d,q} (p = 2) or {p,p2} (p odd)
//   fp:<path>                      presentation file, realized by coset
//                                  enumeration
//   prod:<spec>*<spec>             direct product (right-associated; the
//                                  left operand must not be a product)
//
// Factors and images are comma-separated decimal integers.
struct GroupSpec {
  enum class Family { dic, gdic, ab, sdp, xsp, fp, prod };
  Family family = Family::ab;

  std::uint32_t n = 0;                    // dic
  AbelianSpec a;                          // gdic / ab / sdp
  std::optional<Elem> t;                  // gdic involution, if given
  std::vector<Elem> images;               // sdp
  std::uint32_t k = 0;                    // sdp
  std::uint32_t p = 0, xn = 0;            // xsp
  ExtraspecialKind kind = ExtraspecialKind::d8;
  std::string path;                       // fp
  std::vector<GroupSpec> operands;        // prod (exactly two)

  // canonical string; parse_spec(str()) reproduces the spec
  std::string str() const;
  bool operator==(const GroupSpec&) const = default;
};

// Throws std::invalid_argument with the offending position on bad input.
GroupSpec parse_spec(std::string_view text);

struct BuildLimits {
  std::uint32_t max_order = GroupTable::max_order;
  // Todd-Coxeter coset cap for fp specs; 0 = derived default
  std::uint64_t tc_max_cosets = 0;
};

// Realizes the spec as a multiplication table. File paths are resolved
// against the current directory. Throws invalid_argument for semantic
// errors (bad involution index, non-automorphism images) and
// resource_error when a budget is exceeded.
GroupTable build_group(const GroupSpec& spec, const BuildLimits& limits = {});

}  // namespace cdlat
